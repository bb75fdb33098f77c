#include "z2q/numtheory.hpp"

#include <stdexcept>

namespace z2q {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t euler_totient(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_totient: n must be positive");
  std::int64_t phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

SquarefreeSplit squarefree_part(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("squarefree_part: n must be positive");
  SquarefreeSplit s{1, 1};
  for (auto [p, e] : factorize(n)) {
    if (e % 2) s.t *= p;
    for (int k = 0; k < e / 2; ++k) s.v *= p;
  }
  return s;
}

bool is_squarefree(std::int64_t n) { return n >= 1 && squarefree_part(n).v == 1; }

Integer ceil_abs(const Rational& q) {
  Integer num = abs(q.get_num());
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(q.get_den().get_mpz_t()))
    return false;
  Integer a = sqrt(q.get_num()), b = sqrt(q.get_den());
  root = Rational(a, b);
  root.canonicalize();
  return true;
}

}  // namespace z2q
