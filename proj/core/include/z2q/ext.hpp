#pragma once

#include <string>

#include "z2q/cyclo.hpp"

namespace z2q {

// base + radical_coeff * sqrt(radicand) over Q(zeta_120). The radicand is
// real with a nonnegative embedding; after construction it is never a square
// in Q(zeta_120) unless radical_coeff is zero.
class ExtElem {
 public:
  ExtElem() = default;
  ExtElem(long v) : base_(v) {}  // NOLINT
  ExtElem(const Rational& q) : base_(q) {}  // NOLINT
  ExtElem(const CycloElem& c) : base_(c) {}  // NOLINT
  ExtElem(const CycloElem& base, const CycloElem& coeff, const CycloElem& radicand);

  const CycloElem& base() const { return base_; }
  const CycloElem& radical_coeff() const { return coeff_; }
  const CycloElem& radicand() const { return rad_; }
  bool in_base_field() const { return coeff_.is_zero(); }
  bool is_zero() const { return base_.is_zero() && coeff_.is_zero(); }

  ExtElem operator-() const;
  friend ExtElem operator+(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator-(const ExtElem& a, const ExtElem& b) { return a + (-b); }
  friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator/(const ExtElem& a, const ExtElem& b) { return a * b.inverse(); }
  ExtElem& operator+=(const ExtElem& o) { return *this = *this + o; }
  ExtElem& operator-=(const ExtElem& o) { return *this = *this - o; }
  ExtElem& operator*=(const ExtElem& o) { return *this = *this * o; }
  bool operator==(const ExtElem& o) const { return (*this - o).is_zero(); }
  bool operator!=(const ExtElem& o) const { return !(*this == o); }

  ExtElem inverse() const;
  ExtElem conj() const;
  ExtElem abs2() const { return *this * conj(); }
  ExtElem real_part() const;
  ExtElem imag_part() const;
  ExtElem pow(long e) const;

  ComplexBall embed(long prec = default_precision()) const;
  std::string debug_string() const;

 private:
  CycloElem base_, coeff_, rad_;
};

// square root of x (real, nonnegative embedding). Exact root in Q(zeta_120)
// when one exists, otherwise a genuine extension element.
ExtElem sqrt_adjoin(const CycloElem& x);

}  // namespace z2q
