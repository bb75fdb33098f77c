#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "z2q/cyclo.hpp"

namespace z2q {

// p + q sqrt(D) with D a squarefree integer (D = 1 means q is folded into p).
// sqrt(D) for D < 0 is i sqrt(|D|).
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(long v) : p_(v) {}  // NOLINT
  QuadElem(const Rational& p) : p_(p) { p_.canonicalize(); }  // NOLINT
  QuadElem(const Rational& p, const Rational& q, std::int64_t d);
  // sqrt(n) for any integer n, reduced to v sqrt(t)
  static QuadElem sqrt_of(std::int64_t n);

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  std::int64_t radicand() const { return d_; }
  bool is_rational() const { return q_ == 0; }
  bool is_zero() const { return p_ == 0 && q_ == 0; }

  QuadElem operator-() const { return QuadElem(-p_, -q_, d_); }
  friend QuadElem operator+(const QuadElem& a, const QuadElem& b);
  friend QuadElem operator-(const QuadElem& a, const QuadElem& b) { return a + (-b); }
  friend QuadElem operator*(const QuadElem& a, const QuadElem& b);
  friend QuadElem operator/(const QuadElem& a, const QuadElem& b) { return a * b.inverse(); }
  bool operator==(const QuadElem& o) const;
  bool operator!=(const QuadElem& o) const { return !(*this == o); }

  QuadElem inverse() const;
  QuadElem conj() const;     // complex conjugate
  QuadElem galois() const;   // sqrt(D) -> -sqrt(D)
  Rational norm() const { return p_ * p_ - q_ * q_ * d_; }
  // sign of a real value; throws for D < 0 with q != 0
  int sign() const;

  // representable in Q(zeta_120) when every prime of D divides 30
  bool in_cyclotomic() const;
  CycloElem to_cyclo() const;

  ComplexBall embed(long prec = default_precision()) const;
  // "p + q√t" with rationals in lowest terms
  std::string str() const;

 private:
  Rational p_{0}, q_{0};
  std::int64_t d_ = 1;
  void normalize();
};

// sqrt(D) as a cyclotomic element, D squarefree with primes in {2,3,5}
CycloElem cyclo_sqrt_int(std::int64_t d);

}  // namespace z2q

namespace z2q {
// x as p + q sqrt(D) with D squarefree dividing 30 up to sign, if possible
std::optional<QuadElem> to_quadratic(const CycloElem& x);
}  // namespace z2q
