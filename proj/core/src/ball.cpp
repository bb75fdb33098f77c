#include "z2q/ball.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace z2q {

namespace {

constexpr long kRadPrec = 64;

std::atomic<long>& precision_slot() {
  static std::atomic<long> slot = [] {
    long p = kDefaultPrecision;
    if (const char* env = std::getenv("RING_PRECISION")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end && *end == '\0' && v >= 64 && v <= 1 << 16) p = v;
    }
    return p;
  }();
  return slot;
}

// |a| + |b| rounded up
void abs1_up(mpfr_ptr out, mpfr_srcptr a, mpfr_srcptr b) {
  Mpfr t(kRadPrec), u(kRadPrec);
  mpfr_abs(t.get(), a, MPFR_RNDU);
  mpfr_abs(u.get(), b, MPFR_RNDU);
  mpfr_add(out, t.get(), u.get(), MPFR_RNDU);
}

}  // namespace

long default_precision() { return precision_slot().load(); }
void set_default_precision(long bits) {
  if (bits < 64) throw std::invalid_argument("precision must be at least 64 bits");
  precision_slot().store(bits);
}

ComplexBall::ComplexBall(long prec) : prec_(prec), re_(prec), im_(prec), rad_(kRadPrec) {}

void ComplexBall::add_rounding(long nops) {
  // nops * 2^(1-prec) * (|re| + |im|)
  Mpfr mag(kRadPrec);
  abs1_up(mag.get(), re_.get(), im_.get());
  mpfr_mul_2si(mag.get(), mag.get(), 1 - prec_, MPFR_RNDU);
  mpfr_mul_si(mag.get(), mag.get(), nops, MPFR_RNDU);
  mpfr_add(rad_.get(), rad_.get(), mag.get(), MPFR_RNDU);
}

void ComplexBall::inflate(const Mpfr& r) { mpfr_add(rad_.get(), rad_.get(), r.get(), MPFR_RNDU); }

ComplexBall ComplexBall::from_rational(const mpq_class& q, long prec) {
  ComplexBall b(prec);
  mpfr_set_q(b.re_.get(), q.get_mpq_t(), MPFR_RNDN);
  b.add_rounding(1);
  return b;
}

ComplexBall ComplexBall::from_parts(const mpq_class& re, const mpq_class& im, long prec) {
  ComplexBall b(prec);
  mpfr_set_q(b.re_.get(), re.get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(b.im_.get(), im.get_mpq_t(), MPFR_RNDN);
  b.add_rounding(1);
  return b;
}

ComplexBall ComplexBall::root_of_unity(long k, long n, long prec) {
  ComplexBall b(prec);
  k %= n;
  if (k < 0) k += n;
  Mpfr arg(prec + 32);
  mpfr_const_pi(arg.get(), MPFR_RNDN);
  mpfr_mul_si(arg.get(), arg.get(), 2 * k, MPFR_RNDN);
  mpfr_div_si(arg.get(), arg.get(), n, MPFR_RNDN);
  mpfr_sin_cos(b.im_.get(), b.re_.get(), arg.get(), MPFR_RNDN);
  // argument error is far below 2^-prec; cos/sin are 1-Lipschitz
  mpfr_set_ui_2exp(b.rad_.get(), 4, -prec, MPFR_RNDU);
  return b;
}

ComplexBall ComplexBall::operator+(const ComplexBall& o) const {
  ComplexBall r(std::max(prec_, o.prec_));
  mpfr_add(r.re_.get(), re_.get(), o.re_.get(), MPFR_RNDN);
  mpfr_add(r.im_.get(), im_.get(), o.im_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
  r.add_rounding(1);
  return r;
}

ComplexBall ComplexBall::operator-() const {
  ComplexBall r(*this);
  mpfr_neg(r.re_.get(), re_.get(), MPFR_RNDN);
  mpfr_neg(r.im_.get(), im_.get(), MPFR_RNDN);
  return r;
}

ComplexBall ComplexBall::operator-(const ComplexBall& o) const { return *this + (-o); }

ComplexBall ComplexBall::conj() const {
  ComplexBall r(*this);
  mpfr_neg(r.im_.get(), im_.get(), MPFR_RNDN);
  return r;
}

ComplexBall ComplexBall::operator*(const ComplexBall& o) const {
  long p = std::max(prec_, o.prec_);
  ComplexBall r(p);
  Mpfr t(p), u(p);
  mpfr_mul(t.get(), re_.get(), o.re_.get(), MPFR_RNDN);
  mpfr_mul(u.get(), im_.get(), o.im_.get(), MPFR_RNDN);
  mpfr_sub(r.re_.get(), t.get(), u.get(), MPFR_RNDN);
  mpfr_mul(t.get(), re_.get(), o.im_.get(), MPFR_RNDN);
  mpfr_mul(u.get(), im_.get(), o.re_.get(), MPFR_RNDN);
  mpfr_add(r.im_.get(), t.get(), u.get(), MPFR_RNDN);
  // propagated: |a| rb + |b| ra + ra rb, with |.| bounded by the 1-norm
  Mpfr na(kRadPrec), nb(kRadPrec), acc(kRadPrec), tmp(kRadPrec);
  abs1_up(na.get(), re_.get(), im_.get());
  abs1_up(nb.get(), o.re_.get(), o.im_.get());
  mpfr_mul(acc.get(), na.get(), o.rad_.get(), MPFR_RNDU);
  mpfr_mul(tmp.get(), nb.get(), rad_.get(), MPFR_RNDU);
  mpfr_add(acc.get(), acc.get(), tmp.get(), MPFR_RNDU);
  mpfr_mul(tmp.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
  mpfr_add(acc.get(), acc.get(), tmp.get(), MPFR_RNDU);
  // rounding of the four products, measured against |a|_1 |b|_1
  mpfr_mul(tmp.get(), na.get(), nb.get(), MPFR_RNDU);
  mpfr_mul_2si(tmp.get(), tmp.get(), 3 - p, MPFR_RNDU);
  mpfr_add(acc.get(), acc.get(), tmp.get(), MPFR_RNDU);
  mpfr_set(r.rad_.get(), acc.get(), MPFR_RNDU);
  r.add_rounding(1);
  return r;
}

ComplexBall ComplexBall::operator/(const ComplexBall& o) const {
  long p = std::max(prec_, o.prec_);
  // |b|^2 of the midpoint, lower bound on |b| over the ball
  Mpfr n2(p), t(p);
  mpfr_sqr(n2.get(), o.re_.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), o.im_.get(), MPFR_RNDN);
  mpfr_add(n2.get(), n2.get(), t.get(), MPFR_RNDN);
  Mpfr absb(kRadPrec), lo(kRadPrec);
  mpfr_sqrt(absb.get(), n2.get(), MPFR_RNDD);
  mpfr_mul_2si(lo.get(), absb.get(), -40, MPFR_RNDU);  // slack for the rounded norm
  mpfr_sub(lo.get(), absb.get(), lo.get(), MPFR_RNDD);
  mpfr_sub(lo.get(), lo.get(), o.rad_.get(), MPFR_RNDD);
  if (mpfr_sgn(lo.get()) <= 0) throw std::domain_error("ComplexBall: division by a ball containing zero");
  ComplexBall inv(p);
  mpfr_div(inv.re_.get(), o.re_.get(), n2.get(), MPFR_RNDN);
  mpfr_div(inv.im_.get(), o.im_.get(), n2.get(), MPFR_RNDN);
  mpfr_neg(inv.im_.get(), inv.im_.get(), MPFR_RNDN);
  // |1/b - 1/b_mid| <= rb / (|b_mid| * lo)
  Mpfr e(kRadPrec);
  mpfr_mul(e.get(), absb.get(), lo.get(), MPFR_RNDD);
  mpfr_div(e.get(), o.rad_.get(), e.get(), MPFR_RNDU);
  mpfr_set(inv.rad_.get(), e.get(), MPFR_RNDU);
  inv.add_rounding(8);
  return *this * inv;
}

ComplexBall ComplexBall::sqrt_real() const {
  ComplexBall r(prec_);
  Mpfr lo(kRadPrec), hi(kRadPrec);
  mpfr_sub(lo.get(), re_.get(), rad_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), re_.get(), rad_.get(), MPFR_RNDU);
  Mpfr a(kRadPrec);
  mpfr_abs(a.get(), im_.get(), MPFR_RNDU);
  mpfr_add(a.get(), a.get(), rad_.get(), MPFR_RNDU);
  if (mpfr_sgn(lo.get()) > 0) {
    mpfr_sqrt(r.re_.get(), re_.get(), MPFR_RNDN);
    // |sqrt(x) - sqrt(m)| <= |x - m| / sqrt(lo), imaginary drift folded in
    Mpfr s(kRadPrec);
    mpfr_sqrt(s.get(), lo.get(), MPFR_RNDD);
    mpfr_div(r.rad_.get(), a.get(), s.get(), MPFR_RNDU);
    r.add_rounding(2);
  } else {
    if (mpfr_sgn(hi.get()) < 0) throw std::domain_error("ComplexBall: sqrt of a negative real");
    // contains 0: enclose [0, sqrt(hi + |im|)]
    mpfr_add(hi.get(), hi.get(), a.get(), MPFR_RNDU);
    mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
    mpfr_div_2ui(r.re_.get(), hi.get(), 1, MPFR_RNDN);
    mpfr_set(r.rad_.get(), hi.get(), MPFR_RNDU);
  }
  return r;
}

bool ComplexBall::contains_zero() const {
  Mpfr n(kRadPrec), t(kRadPrec);
  mpfr_hypot(n.get(), re_.get(), im_.get(), MPFR_RNDD);
  return mpfr_lessequal_p(n.get(), rad_.get());
}

bool ComplexBall::contains(const ComplexBall& o) const {
  long p = std::max(prec_, o.prec_) + 16;
  Mpfr dr(p), di(p), d(kRadPrec);
  mpfr_sub(dr.get(), re_.get(), o.re_.get(), MPFR_RNDN);
  mpfr_sub(di.get(), im_.get(), o.im_.get(), MPFR_RNDN);
  mpfr_hypot(d.get(), dr.get(), di.get(), MPFR_RNDU);
  mpfr_add(d.get(), d.get(), o.rad_.get(), MPFR_RNDU);
  return mpfr_lessequal_p(d.get(), rad_.get());
}

bool ComplexBall::certified_zero() const {
  Mpfr thr(kRadPrec);
  mpfr_set_str(thr.get(), "1e-30", 10, MPFR_RNDD);
  return contains_zero() && mpfr_less_p(rad_.get(), thr.get());
}

int ComplexBall::real_sign() const {
  Mpfr a(kRadPrec);
  mpfr_abs(a.get(), re_.get(), MPFR_RNDD);
  if (mpfr_lessequal_p(a.get(), rad_.get())) return 0;
  return mpfr_sgn(re_.get());
}

bool ComplexBall::imag_certified_nonzero() const {
  Mpfr a(kRadPrec);
  mpfr_abs(a.get(), im_.get(), MPFR_RNDD);
  return mpfr_greater_p(a.get(), rad_.get());
}

double ComplexBall::radius() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }

std::complex<double> ComplexBall::approx() const {
  return {mpfr_get_d(re_.get(), MPFR_RNDN), mpfr_get_d(im_.get(), MPFR_RNDN)};
}

std::string mpfr_fixed(const Mpfr& x, int digits) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", digits, x.get());
  std::string s(buf);
  mpfr_free_str(buf);
  // normalise negative zero
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
  return s;
}

std::string ComplexBall::re_decimal(int digits) const { return mpfr_fixed(re_, digits); }
std::string ComplexBall::im_decimal(int digits) const { return mpfr_fixed(im_, digits); }

}  // namespace z2q
