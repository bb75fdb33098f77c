#include "z2q/quad.hpp"

#include <sstream>
#include <stdexcept>

namespace z2q {

QuadElem::QuadElem(const Rational& p, const Rational& q, std::int64_t d) : p_(p), q_(q), d_(d) {
  if (d == 0) throw std::invalid_argument("QuadElem: radicand 0");
  if (!is_squarefree(d < 0 ? -d : d)) throw std::invalid_argument("QuadElem: radicand not squarefree");
  normalize();
}

QuadElem QuadElem::sqrt_of(std::int64_t n) {
  if (n == 0) return QuadElem();
  auto s = squarefree_part(n < 0 ? -n : n);
  return QuadElem(0, Rational(s.v), n < 0 ? -s.t : s.t);
}

void QuadElem::normalize() {
  p_.canonicalize();
  q_.canonicalize();
  if (d_ == 1) {
    p_ += q_;
    q_ = 0;
  }
  if (q_ == 0) d_ = 1;
}

QuadElem operator+(const QuadElem& a, const QuadElem& b) {
  if (a.q_ == 0) return QuadElem(a.p_ + b.p_, b.q_, b.d_);
  if (b.q_ == 0 || a.d_ == b.d_) return QuadElem(a.p_ + b.p_, a.q_ + b.q_, a.d_);
  throw std::domain_error("QuadElem: mixed radicands");
}

QuadElem operator*(const QuadElem& a, const QuadElem& b) {
  if (a.q_ == 0) return QuadElem(a.p_ * b.p_, a.p_ * b.q_, b.d_);
  if (b.q_ == 0) return QuadElem(a.p_ * b.p_, a.q_ * b.p_, a.d_);
  if (a.d_ != b.d_) throw std::domain_error("QuadElem: mixed radicands");
  return QuadElem(a.p_ * b.p_ + a.q_ * b.q_ * a.d_, a.p_ * b.q_ + a.q_ * b.p_, a.d_);
}

bool QuadElem::operator==(const QuadElem& o) const {
  return p_ == o.p_ && q_ == o.q_ && (q_ == 0 || d_ == o.d_);
}

QuadElem QuadElem::inverse() const {
  Rational n = norm();
  if (n == 0) throw std::domain_error("QuadElem: division by zero");
  return QuadElem(p_ / n, -q_ / n, d_);
}

QuadElem QuadElem::conj() const { return d_ < 0 ? galois() : *this; }

QuadElem QuadElem::galois() const { return QuadElem(p_, -q_, d_); }

int QuadElem::sign() const {
  if (q_ != 0 && d_ < 0) throw std::domain_error("QuadElem: sign of a non-real value");
  if (q_ == 0) return sgn(p_);
  // compare p against -q sqrt(d)
  int sp = sgn(p_), sq = sgn(q_);
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  Rational lhs = p_ * p_, rhs = q_ * q_ * d_;
  return lhs > rhs ? sp : sq;
}

bool QuadElem::in_cyclotomic() const {
  if (q_ == 0) return true;
  std::int64_t a = d_ < 0 ? -d_ : d_;
  for (auto [p, e] : factorize(a))
    if (30 % p != 0) return false;
  return true;
}

CycloElem cyclo_sqrt_int(std::int64_t d) {
  CycloElem r(1);
  if (d < 0) {
    r = cyc::i();
    d = -d;
  }
  for (auto [p, e] : factorize(d)) {
    if (p == 2) r *= cyc::sqrt2();
    else if (p == 3) r *= cyc::sqrt3();
    else if (p == 5) r *= cyc::sqrt5();
    else throw std::domain_error("sqrt outside Q(zeta_120)");
  }
  return r;
}

CycloElem QuadElem::to_cyclo() const {
  if (q_ == 0) return CycloElem(p_);
  return CycloElem(p_) + CycloElem(q_) * cyclo_sqrt_int(d_);
}

ComplexBall QuadElem::embed(long prec) const {
  ComplexBall p = ComplexBall::from_rational(p_, prec);
  if (q_ == 0) return p;
  ComplexBall root = ComplexBall::from_rational(Rational(d_ < 0 ? -d_ : d_), prec).sqrt_real();
  if (d_ < 0) root = root * ComplexBall::from_parts(0, 1, prec);
  return p + ComplexBall::from_rational(q_, prec) * root;
}

std::string QuadElem::str() const {
  std::ostringstream os;
  if (q_ == 0) return p_.get_str();
  std::string rad = "√" + std::to_string(d_ < 0 ? -d_ : d_);
  if (d_ == -1) rad = "i";
  else if (d_ < 0) rad = "i" + rad;
  if (p_ != 0) os << p_.get_str() << (q_ < 0 ? " - " : " + ");
  else if (q_ < 0) os << "-";
  Rational aq = abs(q_);
  if (aq != 1) os << aq.get_str();
  os << rad;
  return os.str();
}

}  // namespace z2q

namespace z2q {

std::optional<QuadElem> to_quadratic(const CycloElem& x) {
  if (x.is_rational()) return QuadElem(x.rational_value());
  static const std::int64_t kRadicands[] = {-1, 2, -2, 3, -3, 5, -5, 6, -6, 10, -10, 15, -15, 30, -30};
  for (std::int64_t d : kRadicands) {
    CycloElem root = cyclo_sqrt_int(d);
    for (long k : galois_group()) {
      if (root.galois(k) != -root) continue;
      CycloElem sx = x.galois(k);
      CycloElem p = (x + sx) * cyc::half();
      if (!p.is_rational()) break;
      CycloElem q = (x - sx) * cyc::half() / root;
      if (!q.is_rational()) break;
      return QuadElem(p.rational_value(), q.rational_value(), d);
    }
  }
  return std::nullopt;
}

}  // namespace z2q
