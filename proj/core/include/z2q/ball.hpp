#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace z2q {

inline constexpr long kDefaultPrecision = 256;

// Precision used when none is given; honours RING_PRECISION if set.
long default_precision();
void set_default_precision(long bits);

// Owning wrapper around mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(long prec = kDefaultPrecision) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Mpfr(const Mpfr& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Mpfr(Mpfr&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  Mpfr& operator=(const Mpfr& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Mpfr& operator=(Mpfr&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Mpfr() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  long prec() const { return static_cast<long>(mpfr_get_prec(v_)); }

 private:
  mpfr_t v_;
};

// Midpoint-radius complex ball; every operation rounds the radius outward so
// that the exact result stays inside.
class ComplexBall {
 public:
  explicit ComplexBall(long prec = default_precision());
  static ComplexBall from_rational(const mpq_class& q, long prec = default_precision());
  static ComplexBall from_parts(const mpq_class& re, const mpq_class& im, long prec = default_precision());
  // e^{2 pi i k / n}
  static ComplexBall root_of_unity(long k, long n, long prec = default_precision());

  long prec() const { return prec_; }
  const Mpfr& re() const { return re_; }
  const Mpfr& im() const { return im_; }
  const Mpfr& rad() const { return rad_; }

  ComplexBall operator+(const ComplexBall& o) const;
  ComplexBall operator-(const ComplexBall& o) const;
  ComplexBall operator-() const;
  ComplexBall operator*(const ComplexBall& o) const;
  ComplexBall operator/(const ComplexBall& o) const;
  ComplexBall& operator+=(const ComplexBall& o) { return *this = *this + o; }
  ComplexBall& operator*=(const ComplexBall& o) { return *this = *this * o; }
  ComplexBall conj() const;
  // square root of a ball on the nonnegative real axis
  ComplexBall sqrt_real() const;
  // widen radius by r (r >= 0)
  void inflate(const Mpfr& r);

  bool contains_zero() const;
  // this ball contains every point of o
  bool contains(const ComplexBall& o) const;
  // contains zero and radius < 10^-30
  bool certified_zero() const;
  // certified sign of the real part (+1/-1), 0 if undecided
  int real_sign() const;
  bool imag_certified_nonzero() const;

  double radius() const;
  std::complex<double> approx() const;
  std::string re_decimal(int digits = 30) const;
  std::string im_decimal(int digits = 30) const;

 private:
  long prec_;
  Mpfr re_, im_, rad_;
  void add_rounding(long nops);
};

std::string mpfr_fixed(const Mpfr& x, int digits);

}  // namespace z2q
