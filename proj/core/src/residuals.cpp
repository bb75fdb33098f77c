#include <stdexcept>

#include "z2q/gauge.hpp"

namespace z2q {

Tensor4 Tensor4::from_matrix(const std::vector<std::vector<FieldElem>>& rows) {
  if (rows.size() != 4) throw std::invalid_argument("Tensor4: expected 4 rows");
  Tensor4 t(2);
  for (int r = 0; r < 4; ++r) {
    if (rows[r].size() != 4) throw std::invalid_argument("Tensor4: expected 4 columns");
    for (int c = 0; c < 4; ++c) t.v_[static_cast<size_t>(r * 4 + c)] = rows[r][c];
  }
  return t;
}

bool Tensor4::is_zero() const {
  for (const auto& x : v_)
    if (!x.is_zero()) return false;
  return true;
}

bool Tensor4::operator==(const Tensor4& o) const {
  if (m_ != o.m_) return false;
  for (size_t i = 0; i < v_.size(); ++i)
    if (v_[i] != o.v_[i]) return false;
  return true;
}

ComplexBall Num::ball() const {
  if (exact()) return value().embed();
  return std::get<ComplexBall>(v_);
}

namespace {

template <class Exact, class Approx>
Num combine(const Num& a, const Num& b, Exact ex, Approx ap) {
  if (a.exact() && b.exact()) {
    try {
      return Num(ex(a.value(), b.value()));
    } catch (const std::domain_error&) {
      // incompatible radicands: fall through to balls
    }
  }
  return Num(ap(a.ball(), b.ball()));
}

}  // namespace

Num operator+(const Num& a, const Num& b) {
  return combine(a, b, [](const FieldElem& x, const FieldElem& y) { return x + y; },
                 [](const ComplexBall& x, const ComplexBall& y) { return x + y; });
}

Num operator-(const Num& a, const Num& b) {
  return combine(a, b, [](const FieldElem& x, const FieldElem& y) { return x - y; },
                 [](const ComplexBall& x, const ComplexBall& y) { return x - y; });
}

Num operator*(const Num& a, const Num& b) {
  return combine(a, b, [](const FieldElem& x, const FieldElem& y) { return x * y; },
                 [](const ComplexBall& x, const ComplexBall& y) { return x * y; });
}

Num Num::operator-() const {
  if (exact()) return Num(-value());
  return Num(-std::get<ComplexBall>(v_));
}

Num Num::conj() const {
  if (exact()) return Num(value().conj());
  return Num(std::get<ComplexBall>(v_).conj());
}

bool ResidualEntry::zero() const {
  if (value.exact()) return value.value().is_zero();
  return value.ball().certified_zero();
}

bool Residuals::satisfied() const { return first_violation() == nullptr; }

const ResidualEntry* Residuals::first_violation() const {
  for (const auto& e : entries)
    if (!e.zero()) return &e;
  return nullptr;
}

void Residuals::add(std::string id, std::string equation, const Num& lhs, const Num& rhs) {
  entries.push_back({std::move(id), std::move(equation), lhs - rhs});
}

const char* to_string(SolveVerdict v) {
  switch (v) {
    case SolveVerdict::kUniqueSolution: return "unique_solution";
    case SolveVerdict::kTwoSolutions: return "two_solutions";
    case SolveVerdict::kInfeasible: return "infeasible";
  }
  return "?";
}

bool is_unimodular(const CycloElem& z) { return z.abs2() == CycloElem(1); }

}  // namespace z2q
