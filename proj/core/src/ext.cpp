#include "z2q/ext.hpp"

#include <stdexcept>

namespace z2q {

namespace {

void require_radicand(const CycloElem& r) {
  if (!r.is_real()) throw std::domain_error("ExtElem: radicand is not real");
  if (r.is_zero()) return;
  if (r.embed().real_sign() < 0) throw std::domain_error("ExtElem: radicand has negative embedding");
}

// sqrt(r1) = s * sqrt(r2) with s in the base field, if possible
bool align(const CycloElem& r1, const CycloElem& r2, CycloElem& s) {
  if (r1 == r2) {
    s = CycloElem(1);
    return true;
  }
  auto root = sqrt_in_field(r1 / r2);
  if (!root) return false;
  s = *root;  // positive real root
  return true;
}

}  // namespace

ExtElem::ExtElem(const CycloElem& base, const CycloElem& coeff, const CycloElem& radicand)
    : base_(base), coeff_(coeff), rad_(radicand) {
  if (coeff_.is_zero()) {
    rad_ = CycloElem();
    return;
  }
  require_radicand(rad_);
  if (auto root = sqrt_in_field(rad_)) {
    base_ += coeff_ * *root;
    coeff_ = CycloElem();
    rad_ = CycloElem();
  }
}

ExtElem ExtElem::operator-() const {
  ExtElem r(*this);
  r.base_ = -base_;
  r.coeff_ = -coeff_;
  return r;
}

ExtElem operator+(const ExtElem& a, const ExtElem& b) {
  if (b.coeff_.is_zero()) {
    ExtElem r(a);
    r.base_ += b.base_;
    return r;
  }
  if (a.coeff_.is_zero()) return b + a;
  CycloElem s;
  if (!align(b.rad_, a.rad_, s)) throw std::domain_error("ExtElem: incompatible radicands");
  ExtElem r(a);
  r.base_ += b.base_;
  r.coeff_ += b.coeff_ * s;
  if (r.coeff_.is_zero()) r.rad_ = CycloElem();
  return r;
}

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
  if (b.coeff_.is_zero()) {
    ExtElem r(a);
    r.base_ *= b.base_;
    r.coeff_ *= b.base_;
    if (r.coeff_.is_zero()) r.rad_ = CycloElem();
    return r;
  }
  if (a.coeff_.is_zero()) return b * a;
  CycloElem s;
  if (!align(b.rad_, a.rad_, s)) throw std::domain_error("ExtElem: incompatible radicands");
  CycloElem bc = b.coeff_ * s;
  ExtElem r;
  r.base_ = a.base_ * b.base_ + a.coeff_ * bc * a.rad_;
  r.coeff_ = a.base_ * bc + a.coeff_ * b.base_;
  r.rad_ = r.coeff_.is_zero() ? CycloElem() : a.rad_;
  return r;
}

ExtElem ExtElem::inverse() const {
  if (coeff_.is_zero()) return ExtElem(base_.inverse());
  CycloElem den = base_ * base_ - coeff_ * coeff_ * rad_;
  CycloElem inv = den.inverse();
  ExtElem r;
  r.base_ = base_ * inv;
  r.coeff_ = -coeff_ * inv;
  r.rad_ = rad_;
  return r;
}

ExtElem ExtElem::conj() const {
  ExtElem r;
  r.base_ = base_.conj();
  r.coeff_ = coeff_.conj();
  r.rad_ = rad_;
  return r;
}

ExtElem ExtElem::real_part() const { return (*this + conj()) * ExtElem(cyc::half()); }

ExtElem ExtElem::imag_part() const { return (*this - conj()) * ExtElem(cyc::half() * -cyc::i()); }

ExtElem ExtElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  ExtElem base = *this, r(1);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

ComplexBall ExtElem::embed(long prec) const {
  ComplexBall b = base_.embed(prec);
  if (coeff_.is_zero()) return b;
  return b + coeff_.embed(prec) * rad_.embed(prec).sqrt_real();
}

std::string ExtElem::debug_string() const {
  if (coeff_.is_zero()) return base_.debug_string();
  return "(" + base_.debug_string() + ") + (" + coeff_.debug_string() + ")*sqrt(" + rad_.debug_string() + ")";
}

ExtElem sqrt_adjoin(const CycloElem& x) {
  if (x.is_zero()) return ExtElem();
  require_radicand(x);
  if (auto root = sqrt_in_field(x)) return ExtElem(*root);
  return ExtElem(CycloElem(), CycloElem(1), x);
}

}  // namespace z2q
