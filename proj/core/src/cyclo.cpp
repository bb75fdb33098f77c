#include "z2q/cyclo.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace z2q {

namespace {

using Poly = std::vector<long>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// exact division by a monic polynomial
Poly poly_div(Poly a, const Poly& b) {
  Poly q(a.size() - b.size() + 1, 0);
  for (size_t i = q.size(); i-- > 0;) {
    long c = a[i + b.size() - 1];
    q[i] = c;
    for (size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  return q;
}

int mobius(long n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

struct Tables {
  // x^32 = -sum phi[k] x^k
  std::array<long, kDegree> phi{};
  std::vector<std::array<long, kDegree>> red;  // red[j] = x^j mod Phi_120
  std::vector<long> units;
  // sigma[L] generates G_L over G_{L-1}, L = 1..5; members[L] lists G_L
  std::array<long, 6> sigma{};
  std::array<std::vector<long>, 6> members;

  Tables() {
    Poly num{1}, den{1};
    for (long d = 1; d <= kConductor; ++d) {
      if (kConductor % d) continue;
      int mu = mobius(kConductor / d);
      if (mu == 0) continue;
      Poly f(d + 1, 0);
      f[0] = -1;
      f[d] = 1;
      (mu > 0 ? num : den) = poly_mul(mu > 0 ? num : den, f);
    }
    Poly cyc = poly_div(num, den);
    if (cyc.size() != kDegree + 1 || cyc.back() != 1) throw std::logic_error("cyclotomic polynomial");
    for (int k = 0; k < kDegree; ++k) phi[k] = cyc[k];

    red.assign(kConductor, {});
    std::array<long, kDegree> cur{};
    cur[0] = 1;
    for (int j = 0; j < kConductor; ++j) {
      red[j] = cur;
      long top = cur[kDegree - 1];
      for (int k = kDegree - 1; k > 0; --k) cur[k] = cur[k - 1] - top * phi[k];
      cur[0] = -top * phi[0];
    }

    for (long k = 1; k < kConductor; ++k)
      if (std::gcd(k, long(kConductor)) == 1) units.push_back(k);

    members[0] = {1};
    for (int L = 1; L <= 5; ++L) {
      const auto& h = members[L - 1];
      auto in_h = [&](long g) { return std::find(h.begin(), h.end(), g) != h.end(); };
      long pick = 0;
      for (long g : units)
        if (!in_h(g) && in_h(g * g % kConductor)) {
          pick = g;
          break;
        }
      sigma[L] = pick;
      members[L] = h;
      for (long g : h) members[L].push_back(g * pick % kConductor);
    }
    if (members[5].size() != units.size()) throw std::logic_error("galois tower");
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

struct Tower {
  std::array<CycloElem, 6> r, rinv, delta;
  Tower() {
    const auto& t = tables();
    for (int L = 1; L <= 5; ++L) {
      for (long j = 1; j < kConductor; ++j) {
        CycloElem y;
        for (long g : t.members[L - 1]) y += CycloElem::zeta(j * g);
        CycloElem cand = y - y.galois(t.sigma[L]);
        if (!cand.is_zero()) {
          r[L] = cand;
          break;
        }
      }
      if (r[L].is_zero()) throw std::logic_error("tower generator");
      rinv[L] = r[L].inverse();
      delta[L] = r[L] * r[L];
    }
  }
};

const Tower& tower() {
  static const Tower t;
  return t;
}

std::optional<CycloElem> sqrt_level(const CycloElem& x, int L) {
  if (x.is_zero()) return CycloElem();
  if (L == 5) {
    Rational root;
    if (rational_sqrt(x.rational_value(), root)) return CycloElem(root);
    return std::nullopt;
  }
  const auto& tw = tower();
  long s = tables().sigma[L + 1];
  const CycloElem& r = tw.r[L + 1];
  const CycloElem& delta = tw.delta[L + 1];
  CycloElem sx = x.galois(s);
  CycloElem half = cyc::half();
  CycloElem u = (x + sx) * half;
  CycloElem v = (x - sx) * tw.rinv[L + 1] * half;
  if (v.is_zero()) {
    if (auto a = sqrt_level(u, L + 1)) return a;
    if (auto b = sqrt_level(u / delta, L + 1)) return *b * r;
    return std::nullopt;
  }
  auto n = sqrt_level(u * u - delta * v * v, L + 1);
  if (!n) return std::nullopt;
  for (int sign : {1, -1}) {
    CycloElem a2 = (u + CycloElem(sign) * *n) * half;
    if (a2.is_zero()) continue;
    auto a = sqrt_level(a2, L + 1);
    if (!a) continue;
    CycloElem b = v / (CycloElem(2) * *a);
    CycloElem cand = *a + b * r;
    if (cand * cand == x) return cand;
  }
  return std::nullopt;
}

std::map<long, std::vector<ComplexBall>>& root_cache() {
  thread_local std::map<long, std::vector<ComplexBall>> cache;
  return cache;
}

}  // namespace

const std::vector<long>& galois_group() { return tables().units; }

CycloElem::CycloElem() : den_(1) {}

CycloElem::CycloElem(long v) : den_(1) { num_[0] = v; }

CycloElem::CycloElem(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  den_ = c.get_den();
  num_[0] = c.get_num();
}

CycloElem CycloElem::zeta(long k) {
  k %= kConductor;
  if (k < 0) k += kConductor;
  CycloElem r;
  const auto& row = tables().red[k];
  for (int j = 0; j < kDegree; ++j) r.num_[j] = row[j];
  return r;
}

CycloElem CycloElem::from_coeffs(const std::vector<Rational>& c) {
  if (c.size() != kDegree) throw std::invalid_argument("CycloElem needs 32 coefficients");
  CycloElem r;
  for (int k = 0; k < kDegree; ++k) r += CycloElem(c[k]) * zeta(k);
  return r;
}

void CycloElem::normalize() {
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational CycloElem::coeff(int k) const {
  Rational q(num_.at(k), den_);
  q.canonicalize();
  return q;
}

std::vector<Rational> CycloElem::coeffs() const {
  std::vector<Rational> out;
  for (int k = 0; k < kDegree; ++k) out.push_back(coeff(k));
  return out;
}

bool CycloElem::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CycloElem::is_rational() const {
  for (int k = 1; k < kDegree; ++k)
    if (num_[k] != 0) return false;
  return true;
}

Rational CycloElem::rational_value() const {
  if (!is_rational()) throw std::domain_error("CycloElem is not rational");
  return coeff(0);
}

CycloElem CycloElem::operator-() const {
  CycloElem r(*this);
  for (auto& c : r.num_) c = -c;
  return r;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  if (den_ == o.den_) {
    for (int k = 0; k < kDegree; ++k) num_[k] += o.num_[k];
  } else {
    for (int k = 0; k < kDegree; ++k) num_[k] = num_[k] * o.den_ + o.num_[k] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) { return *this += -o; }

CycloElem& CycloElem::operator*=(const CycloElem& o) {
  const auto& phi = tables().phi;
  std::array<Integer, 2 * kDegree - 1> prod;
  for (int a = 0; a < kDegree; ++a) {
    if (num_[a] == 0) continue;
    for (int b = 0; b < kDegree; ++b)
      if (o.num_[b] != 0) mpz_addmul(prod[a + b].get_mpz_t(), num_[a].get_mpz_t(), o.num_[b].get_mpz_t());
  }
  for (int j = 2 * kDegree - 2; j >= kDegree; --j) {
    if (prod[j] == 0) continue;
    for (int k = 0; k < kDegree; ++k) {
      if (phi[k] == 0) continue;
      prod[j - kDegree + k] -= prod[j] * phi[k];
    }
  }
  for (int k = 0; k < kDegree; ++k) num_[k] = prod[k];
  den_ *= o.den_;
  normalize();
  return *this;
}

CycloElem& CycloElem::operator/=(const CycloElem& o) { return *this *= o.inverse(); }

bool CycloElem::operator==(const CycloElem& o) const { return den_ == o.den_ && num_ == o.num_; }

CycloElem CycloElem::galois(long k) const {
  k %= kConductor;
  if (k < 0) k += kConductor;
  if (std::gcd(k, long(kConductor)) != 1) throw std::invalid_argument("galois: exponent not a unit mod 120");
  const auto& red = tables().red;
  CycloElem r;
  r.den_ = den_;
  for (int j = 0; j < kDegree; ++j) {
    if (num_[j] == 0) continue;
    const auto& row = red[(j * k) % kConductor];
    for (int t = 0; t < kDegree; ++t)
      if (row[t] != 0) r.num_[t] += num_[j] * row[t];
  }
  r.normalize();
  return r;
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw std::domain_error("CycloElem: division by zero");
  const auto& t = tables();
  CycloElem y = *this, acc(1);
  for (int L = 1; L <= 5; ++L) {
    CycloElem s = y.galois(t.sigma[L]);
    acc *= s;
    y *= s;
  }
  return acc * CycloElem(1 / y.rational_value());
}

CycloElem CycloElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloElem base = *this, r(1);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

CycloElem CycloElem::real_part() const { return (*this + conj()) * cyc::half(); }

CycloElem CycloElem::imag_part() const { return (*this - conj()) * cyc::half() * -cyc::i(); }

ComplexBall CycloElem::embed(long prec) const {
  auto& roots = root_cache()[prec];
  if (roots.empty())
    for (int k = 0; k < kDegree; ++k) roots.push_back(ComplexBall::root_of_unity(k, kConductor, prec));
  ComplexBall acc(prec);
  for (int k = 0; k < kDegree; ++k)
    if (num_[k] != 0) acc += ComplexBall::from_rational(Rational(num_[k]), prec) * roots[k];
  return acc / ComplexBall::from_rational(Rational(den_), prec);
}

std::string CycloElem::debug_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < kDegree; ++k) {
    if (num_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeff(k).get_str();
    if (k) os << "*z^" << k;
  }
  if (first) os << "0";
  return os.str();
}

std::optional<CycloElem> sqrt_in_field(const CycloElem& x) {
  auto root = sqrt_level(x, 0);
  if (!root) return root;
  CycloElem re = root->real_part();
  int sign = 0;
  if (!re.is_zero()) {
    sign = re.embed().real_sign();
  } else {
    sign = root->imag_part().embed().real_sign();
  }
  if (sign < 0) *root = -*root;
  return root;
}

namespace cyc {
CycloElem i() { return CycloElem::zeta(30); }
CycloElem sqrt2() { return CycloElem::zeta(15) + CycloElem::zeta(105); }
CycloElem sqrt3() { return CycloElem::zeta(10) + CycloElem::zeta(110); }
CycloElem sqrt5() { return CycloElem(1) + CycloElem(2) * (CycloElem::zeta(24) + CycloElem::zeta(96)); }
CycloElem omega() { return CycloElem::zeta(40); }
CycloElem nu() { return CycloElem::zeta(15); }
CycloElem half() { return CycloElem(frac(1, 2)); }
CycloElem golden() { return (CycloElem(1) + sqrt5()) * half(); }
}  // namespace cyc

}  // namespace z2q
