#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "z2q/ball.hpp"
#include "z2q/numtheory.hpp"

namespace z2q {

inline constexpr int kConductor = 120;
inline constexpr int kDegree = 32;

// Element of Q(zeta_120), stored as integer coordinates over a common
// positive denominator in the power basis 1, z, ..., z^31.
class CycloElem {
 public:
  CycloElem();
  CycloElem(long v);  // NOLINT: implicit by design, integers embed
  CycloElem(const Rational& q);  // NOLINT
  static CycloElem zeta(long k);
  static CycloElem from_coeffs(const std::vector<Rational>& c);

  Rational coeff(int k) const;
  std::vector<Rational> coeffs() const;
  const std::array<Integer, kDegree>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws unless is_rational()

  CycloElem operator-() const;
  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);
  CycloElem& operator/=(const CycloElem& o);
  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
  friend CycloElem operator/(CycloElem a, const CycloElem& b) { return a /= b; }
  bool operator==(const CycloElem& o) const;
  bool operator!=(const CycloElem& o) const { return !(*this == o); }

  CycloElem inverse() const;
  CycloElem pow(long e) const;
  // automorphism zeta -> zeta^k, gcd(k, 120) = 1
  CycloElem galois(long k) const;
  CycloElem conj() const { return galois(kConductor - 1); }
  CycloElem abs2() const { return *this * conj(); }
  bool is_real() const { return conj() == *this; }
  CycloElem real_part() const;
  CycloElem imag_part() const;  // (x - conj x) / 2i

  // designated embedding zeta -> e^{2 pi i / 120}
  ComplexBall embed(long prec = default_precision()) const;

  std::string debug_string() const;

 private:
  std::array<Integer, kDegree> num_;
  Integer den_;
  void normalize();
};

// exact square root inside Q(zeta_120) if one exists; the root returned has
// nonnegative real part (or positive imaginary part when purely imaginary)
std::optional<CycloElem> sqrt_in_field(const CycloElem& x);

// the 32 units mod 120
const std::vector<long>& galois_group();

namespace cyc {
CycloElem i();
CycloElem sqrt2();
CycloElem sqrt3();
CycloElem sqrt5();
CycloElem omega();  // e^{2 pi i / 3}
CycloElem nu();     // e^{i pi / 4}
CycloElem half();
CycloElem golden();  // (1 + sqrt5) / 2
}  // namespace cyc

}  // namespace z2q
