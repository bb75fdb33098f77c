#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "z2q/fusion.hpp"

namespace z2q {

enum class LarsonRule { kRational, kSqrt2, kTotient };
const char* larson_rule_name(LarsonRule r);

struct LarsonBound {
  Integer need;
  LarsonRule rule;
};

// Minimal number of roots of unity summing to u + v sqrt(t); v integral,
// t squarefree. Throws std::invalid_argument otherwise.
LarsonBound larson_lower_bound(const Rational& u, const Integer& v, std::int64_t t);

enum class TotientCheck { kExcluded, kHolds, kFails };
// phi(2t)^2 >= 16t/5 for t outside {1,2,3,6}
TotientCheck totient_bound_holds(std::int64_t t);

enum class RKind { kRational, kInQd, kOutside };
const char* r_kind_name(RKind k);

struct RIntegrality {
  bool ok;
  RKind kind;
  QuadElem r;
};
RIntegrality r_integrality(int m, int n);

// pairs with 0 != m != n != 0, m + n <= max_sum and r in Q(d)
std::vector<std::pair<int, int>> rational_r_pairs(int max_sum);

struct CenterUnitDims {
  QuadElem x2;
  std::optional<QuadElem> x3, x4;  // absent when r lies outside Q(d)
};
CenterUnitDims center_unit_dims(int m, int n);

struct InductionAssignment {
  std::array<long, 3> x{}, x_prime{};  // x_2, x_3, x_4
  std::array<long, 4> y{}, y_prime{};
  std::vector<std::pair<long, long>> z_pairs;
};

struct AssignmentCheck {
  bool ok = true;
  std::string failed;  // first violated identity
};
AssignmentCheck check_assignment(int m, int n, const InductionAssignment& a);

// exhaustive search with entries <= cap and at most max_z extra simples
std::vector<InductionAssignment> search_assignments(int m, int n, long cap, std::size_t max_z, std::size_t limit);

Rational squares_upper_bound(int m, int n);

enum class ThetaCase { kI, kOne };
enum class DeltaCase { kZero, kPlus, kMinus };
const char* theta_name(ThetaCase t);
const char* delta_name(DeltaCase d);

struct BranchOutcome {
  ThetaCase theta;
  DeltaCase delta;
  Rational rhs_u;   // known rational part of the target
  Integer rhs_v;
  std::int64_t rhs_t;
  Integer larson_need;
  Rational budget;
  bool excluded;
  // with sum (y_j + y'_j)^2 >= (m+n)^2 folded into the rational part
  Integer need_with_cs;
  bool excluded_with_cs;
};
std::vector<BranchOutcome> branch_outcomes(int m, int n);

enum class Verdict { kFeasible, kInfeasible };

struct FeasibilityReport {
  int m = 0, n = 0;
  bool integrality_ok = true;
  RKind r_kind = RKind::kRational;
  std::vector<BranchOutcome> branches;
  bool rank2_rule_applied = false;
  Verdict verdict = Verdict::kFeasible;
  std::string witness;
};
FeasibilityReport multiplicity_feasible(int m, int n);
std::vector<FeasibilityReport> scan_bound(int max_sum);
std::vector<std::pair<int, int>> feasible_set(int max_sum);

struct FrobBudget {
  CycloElem required;
  QuadElem required_quad;
  Integer larson_need;
  bool contradiction;
};
// budget for sum p_i (p_i + q_i) theta^{2n} against the constraint value 16
FrobBudget frob_2n_budget(int lambda_alpha, const CycloElem& nu_target, int n_index);

}  // namespace z2q
