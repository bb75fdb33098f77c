#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace z2q {

using Rational = mpq_class;
using Integer = mpz_class;

// Prime factorisation by trial division, ascending primes with exponents.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::int64_t euler_totient(std::int64_t n);

struct SquarefreeSplit {
  std::int64_t t;  // squarefree
  std::int64_t v;  // n = v*v*t
};
SquarefreeSplit squarefree_part(std::int64_t n);
bool is_squarefree(std::int64_t n);

// a/b in lowest terms (mpq_class(a, b) does not canonicalize)
inline Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

// ceil(|q|)
Integer ceil_abs(const Rational& q);

// exact square root of a nonnegative rational, if it is a perfect square
bool rational_sqrt(const Rational& q, Rational& root);

}  // namespace z2q
