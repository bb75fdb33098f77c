#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "z2q/ball.hpp"
#include "z2q/cyclo.hpp"
#include "z2q/ext.hpp"

namespace z2q {

using FieldElem = ExtElem;

// X^{i,j}_{k,l} for indices in [0, m). For m = 2 the flat layout is the
// 4x4 matrix with row 2i+j and column 2k+l.
class Tensor4 {
 public:
  explicit Tensor4(int m = 2) : m_(m), v_(static_cast<size_t>(m * m * m * m)) {}
  static Tensor4 from_matrix(const std::vector<std::vector<FieldElem>>& rows);

  int m() const { return m_; }
  FieldElem& at(int i, int j, int k, int l) { return v_[index(i, j, k, l)]; }
  const FieldElem& at(int i, int j, int k, int l) const { return v_[index(i, j, k, l)]; }
  // 4x4 matrix view, m = 2 only
  const FieldElem& cell(int row, int col) const { return v_[static_cast<size_t>(row * 4 + col)]; }
  bool is_zero() const;
  bool operator==(const Tensor4& o) const;

 private:
  int m_;
  std::vector<FieldElem> v_;
  size_t index(int i, int j, int k, int l) const {
    return static_cast<size_t>(((i * m_ + j) * m_ + k) * m_ + l);
  }
};

struct GaugeSD {
  int m = 2;
  int lambda_alpha = 1;
  int lambda_rho = 1;
  int mu = 1;
  std::vector<CycloElem> chi_one, chi_alpha;
  std::vector<CycloElem> omega_one, omega_alpha;
  std::vector<int> tilde_one, tilde_alpha;
  Tensor4 A, B, C, D, A_hat, B_hat, C_hat, D_hat;
};

struct GaugeNSD {
  int m = 1;
  CycloElem nu;
  CycloElem mu;  // nu^2
  std::vector<int> chi;
  std::vector<CycloElem> omega;
  Tensor4 A, B, C, D, A_hat, B_hat, C_hat, D_hat;
};

// Exact field value, or a ball when the operands live in incompatible
// quadratic extensions.
class Num {
 public:
  Num(const FieldElem& x) : v_(x) {}  // NOLINT
  Num(const CycloElem& x) : v_(FieldElem(x)) {}  // NOLINT
  Num(long x) : v_(FieldElem(x)) {}  // NOLINT
  Num(const ComplexBall& b) : v_(b) {}  // NOLINT

  bool exact() const { return std::holds_alternative<FieldElem>(v_); }
  const FieldElem& value() const { return std::get<FieldElem>(v_); }
  ComplexBall ball() const;

  friend Num operator+(const Num& a, const Num& b);
  friend Num operator-(const Num& a, const Num& b);
  friend Num operator*(const Num& a, const Num& b);
  Num operator-() const;
  Num conj() const;
  Num abs2() const { return *this * conj(); }
  Num& operator+=(const Num& o) { return *this = *this + o; }

 private:
  std::variant<FieldElem, ComplexBall> v_;
};

struct ResidualEntry {
  std::string id;
  std::string equation;
  Num value{0L};
  bool zero() const;
};

struct Residuals {
  std::string system_name;
  std::vector<ResidualEntry> entries;
  bool satisfied() const;
  const ResidualEntry* first_violation() const;
  void add(std::string id, std::string equation, const Num& lhs, const Num& rhs);
};

enum class SolveVerdict { kUniqueSolution, kTwoSolutions, kInfeasible };
const char* to_string(SolveVerdict v);

struct SolveOutcome {
  SolveVerdict verdict = SolveVerdict::kInfeasible;
  std::vector<GaugeSD> sd_solutions;
  std::vector<GaugeNSD> nsd_solutions;
  std::string witness;
  std::map<std::string, FieldElem> derived;
  std::vector<std::string> trace;
  std::vector<Residuals> residuals;
};

// exact |z| = 1
bool is_unimodular(const CycloElem& z);

}  // namespace z2q
