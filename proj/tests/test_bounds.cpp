#include <doctest.h>

#include <chrono>
#include <set>

#include "oracles.hpp"
#include "z2q/bounds.hpp"
#include "z2q/numtheory.hpp"

using namespace z2q;

namespace {

const std::vector<std::pair<int, int>> kFive = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}};

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("Larson lower bounds") {
  CHECK(larson_lower_bound(-4, -12, 5).need == 48);
  CHECK(larson_lower_bound(-4, -12, 5).rule == LarsonRule::kTotient);
  CHECK(larson_lower_bound(4, 8, 2).need == 20);
  CHECK(larson_lower_bound(4, 8, 2).rule == LarsonRule::kSqrt2);
  CHECK(larson_lower_bound(0, 0, 3).need == 0);
  CHECK(larson_lower_bound(frac(7, 2), 0, 1).need == 4);
  CHECK(larson_lower_bound(-4, -20, 5).need == 80);
  CHECK_THROWS_AS(larson_lower_bound(1, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(larson_lower_bound(1, 1, 0), std::invalid_argument);
  // |v| phi(2t) against a sieve for squarefree t
  auto phi = oracle::totient_table(2 * 2000);
  for (std::int64_t t = 3; t <= 2000; ++t) {
    if (!oracle::squarefree(t)) continue;
    CHECK(larson_lower_bound(5, -3, t).need == 3 * phi[static_cast<size_t>(2 * t)]);
  }
}

TEST_CASE("totient lemma for t <= 10^4") {
  auto phi = oracle::totient_table(20000);
  long checked = 0;
  for (std::int64_t t = 1; t <= 10000; ++t) {
    if (t == 1 || t == 2 || t == 3 || t == 6) {
      CHECK(totient_bound_holds(t) == TotientCheck::kExcluded);
      continue;
    }
    std::int64_t p = phi[static_cast<size_t>(2 * t)];
    // phi(2t)^2 >= 16t/5, done in integers
    CHECK(5 * p * p >= 16 * t);
    CHECK(totient_bound_holds(t) == TotientCheck::kHolds);
    ++checked;
  }
  CHECK(checked == 9996);
}

TEST_CASE("feasible set up to 50") {
  auto start = std::chrono::steady_clock::now();
  auto reports = scan_bound(50);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 30.0);
  // cells (m, n) with m + n <= 50
  CHECK(reports.size() == 51 * 52 / 2);
  std::vector<std::pair<int, int>> feasible;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::kFeasible) feasible.emplace_back(r.m, r.n);
    else CHECK_FALSE(r.witness.empty());
  }
  CHECK(feasible == kFive);
  CHECK(feasible_set(5) == kFive);
  CHECK(feasible_set(1) == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}});
}

TEST_CASE("report invariant: infeasible iff integrality fails, all branches excluded, or the rank-2 rule applies") {
  for (const auto& r : scan_bound(30)) {
    bool all_excluded = !r.branches.empty();
    for (const auto& b : r.branches) {
      CHECK(b.excluded == (Rational(b.larson_need) > b.budget));
      all_excluded = all_excluded && b.excluded;
    }
    bool expect_infeasible = !r.integrality_ok || all_excluded || r.rank2_rule_applied;
    CAPTURE(r.m);
    CAPTURE(r.n);
    CHECK((r.verdict == Verdict::kInfeasible) == expect_infeasible);
  }
}

TEST_CASE("r in Q(d) with 0 != m != n != 0 needs m + n >= 11") {
  auto lib = rational_r_pairs(40);
  auto ref = oracle::rational_r_pairs(40);
  CHECK(std::set(lib.begin(), lib.end()) == std::set(ref.begin(), ref.end()));
  REQUIRE_FALSE(lib.empty());
  int smallest = 1000;
  for (auto [m, n] : lib) smallest = std::min(smallest, m + n);
  CHECK(smallest >= 11);
  CHECK(smallest == 11);
  for (auto [m, n] : lib) CHECK(r_integrality(m, n).kind != RKind::kOutside);
  for (auto [m, n] : lib) CHECK(r_integrality(m, n).ok);
  // r^2 = 125/29 while d lies in Q(sqrt5)
  CHECK(r_integrality(8, 3).kind == RKind::kOutside);
}

TEST_CASE("centre unit dimensions") {
  CenterUnitDims u = center_unit_dims(2, 2);
  CHECK(u.x2 == QuadElem(9, 4, 5));
  REQUIRE(u.x3.has_value());
  CHECK(*u.x3 == QuadElem(5, 2, 5));
  CHECK(*u.x4 == QuadElem(5, 2, 5));
  CHECK_FALSE(center_unit_dims(2, 1).x3.has_value());
}

TEST_CASE("boundary case (2,2) with twist i is not excluded") {
  bool seen = false;
  for (const auto& b : branch_outcomes(2, 2)) {
    if (b.theta != ThetaCase::kI) continue;
    seen = true;
    CHECK(b.larson_need == 64);
    CHECK(b.budget == 64);
    CHECK_FALSE(b.excluded);
  }
  CHECK(seen);
}

TEST_CASE("squares upper bound") {
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      CHECK(squares_upper_bound(m, n) == Rational(8) + frac(3, 2) * Rational((m + n) * (m + n)));
}

TEST_CASE("induction assignments") {
  InductionAssignment bad;
  bad.x = {4, 1, 1};
  bad.x_prime = {0, 1, 1};
  bad.y = {1, 1, 1, 1};
  bad.y_prime = {1, 1, 1, 1};
  CHECK_FALSE(check_assignment(2, 2, bad).ok);

  auto found = search_assignments(0, 1, 4, 4, 64);
  REQUIRE_FALSE(found.empty());
  for (const auto& a : found) {
    CHECK(check_assignment(0, 1, a).ok);
    InductionAssignment b = a;
    b.x[0] += 1;
    CHECK_FALSE(check_assignment(0, 1, b).ok);
  }
}

TEST_CASE("Frobenius-Schur budgets") {
  // lambda_alpha = 1: nu4 = 3 tau
  FrobBudget minus = frob_2n_budget(1, CycloElem(-3), 2);
  CHECK(minus.required_quad == QuadElem(-4, -20, 5));
  CHECK(minus.larson_need == 80);
  CHECK(minus.contradiction);
  FrobBudget plus = frob_2n_budget(1, CycloElem(3), 2);
  CHECK(plus.required_quad == QuadElem(-4, 4, 5));
  CHECK(plus.larson_need == 16);
  CHECK_FALSE(plus.contradiction);
  FrobBudget m1 = frob_2n_budget(-1, CycloElem(-1), 2);
  CHECK(m1.required_quad == QuadElem(-4, -12, 5));
  CHECK(m1.larson_need == 48);
  CHECK(m1.contradiction);
}

}  // TEST_SUITE
