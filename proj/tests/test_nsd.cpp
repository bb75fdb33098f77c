#include <doctest.h>

#include <functional>

#include "oracles.hpp"
#include "z2q/nsd.hpp"

using namespace z2q;
using oracle::cld;

namespace {

CycloElem q(long a, long b) { return CycloElem(frac(a, b)); }

// least-squares residual of an affine system f(x + iy) = 0 given as complex equations
long double lsq_residual(const std::vector<std::function<cld(cld)>>& eqs) {
  // rows: Re/Im of f(a) = f(0) + x (f(1) - f(0)) + y (f(i) - f(0))
  long double ata[2][2] = {{0, 0}, {0, 0}}, atb[2] = {0, 0};
  std::vector<std::array<long double, 3>> rows;
  for (const auto& f : eqs) {
    cld f0 = f(0), fx = f(1) - f0, fy = f(cld(0, 1)) - f0;
    rows.push_back({fx.real(), fy.real(), -f0.real()});
    rows.push_back({fx.imag(), fy.imag(), -f0.imag()});
  }
  for (const auto& r : rows)
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) ata[i][j] += r[i] * r[j];
      atb[i] += r[i] * r[2];
    }
  long double det = ata[0][0] * ata[1][1] - ata[0][1] * ata[1][0];
  long double x = (atb[0] * ata[1][1] - ata[0][1] * atb[1]) / det;
  long double y = (ata[0][0] * atb[1] - atb[0] * ata[1][0]) / det;
  long double s = 0;
  for (const auto& r : rows) {
    long double e = r[0] * x + r[1] * y - r[2];
    s += e * e;
  }
  return std::sqrt(s);
}

}  // namespace

TEST_SUITE("classify-nsd") {

TEST_CASE("S(1) has exactly two solutions") {
  SolveOutcome o = nsd_classify_m1();
  CHECK(o.verdict == SolveVerdict::kTwoSolutions);
  REQUIRE(o.nsd_solutions.size() == 2);
  const CycloElem na = CycloElem(1) - cyc::sqrt2() * q(1, 2);
  const CycloElem nc = cyc::sqrt2() * q(1, 2);
  std::set<int> nu_seen;
  for (const auto& g : o.nsd_solutions) {
    const FieldElem a = g.A.at(0, 0, 0, 0), c = g.C.at(0, 0, 0, 0);
    CHECK(a.abs2() == FieldElem(na));
    CHECK(c.abs2() == FieldElem(nc));
    CHECK(g.chi[0] == 1);
    CHECK(g.omega[0] == CycloElem(1));
    CHECK(nsd_symmetry_check(g).satisfied());
    // a = nu (sqrt2 - 1)/(1 - nu) in floating point
    cld nu = oracle::embed(g.nu);
    CHECK(oracle::close(oracle::embed(a), nu * (std::sqrt(2.0L) - 1) / (1.0L - nu)));
    CHECK(oracle::close(oracle::embed(c), std::pow(2.0L, -0.25L)));
    if (g.nu == cyc::nu()) nu_seen.insert(1);
    if (g.nu == cyc::nu().conj()) nu_seen.insert(-1);
  }
  CHECK(nu_seen == std::set<int>{1, -1});
  for (const auto& r : o.residuals) CHECK(r.satisfied());
}

TEST_CASE("S(1) residuals reject perturbations") {
  SolveOutcome o = nsd_classify_m1();
  const GaugeNSD& g = o.nsd_solutions.front();
  NsdM1Vars v{g.A.at(0, 0, 0, 0), g.C.at(0, 0, 0, 0), g.nu, 1, CycloElem(1)};
  CHECK(nsd_residuals_m1(v).satisfied());
  v.chi0 = -1;
  CHECK_FALSE(nsd_residuals_m1(v).satisfied());
  v.chi0 = 1;
  v.omega0 = cyc::omega();
  CHECK_FALSE(nsd_residuals_m1(v).satisfied());
  GaugeNSD h = g;
  h.A.at(0, 0, 0, 0) = h.A.at(0, 0, 0, 0) * FieldElem(cyc::i());
  CHECK_FALSE(nsd_symmetry_check(h).satisfied());
}

TEST_CASE("S(2) with opposite chi is infeasible") {
  SolveOutcome o = nsd_classify_m2(NsdCase::kOppositeChi);
  CHECK(o.verdict == SolveVerdict::kInfeasible);
  CHECK_FALSE(o.witness.empty());
  CHECK(o.derived.at("|a1|^2") == FieldElem(q(1, 2)));
  CHECK(o.derived.at("|a0|^2") == FieldElem((CycloElem(2) - cyc::sqrt5()) * q(1, 2)));
  CHECK(oracle::embed(o.derived.at("|a0|^2")).real() < 0);
}

TEST_CASE("S(2) with equal chi: all 36 tuples certified") {
  NsdM2Report rep = nsd_classify_m2_detail(NsdCase::kEqualChi);
  CHECK(rep.outcome.verdict == SolveVerdict::kInfeasible);
  REQUIRE(rep.displayed.size() == 36);
  REQUIRE(rep.rederived.size() == 36);
  std::set<std::array<int, 4>> tuples;
  for (const auto& c : rep.displayed) {
    CHECK(c.inconsistent);
    CHECK((c.kind == "determinant" || c.kind == "parallel"));
    if (c.kind == "determinant") CHECK_FALSE(c.witness.is_zero());
    tuples.insert({c.chi0, c.nu_sign, c.w0, c.w1});
  }
  CHECK(tuples.size() == 36);
  for (const auto& c : rep.rederived) {
    CHECK(c.inconsistent);
    if (c.kind == "norm") CHECK(oracle::embed(c.witness).real() > 0);
  }
}

TEST_CASE("floating-point least squares agrees that the displayed system has no solution") {
  const cld I(0, 1);
  const long double r5 = std::sqrt(5.0L);
  const cld T = 2 - r5;
  const cld c0 = (2.0L + I - r5) / 2.0L, c1 = (2.0L - I - r5) / 2.0L;
  long double worst = 1e9;
  for (int chi : {1, -1})
    for (int ns : {1, -1})
      for (int w0 = 0; w0 < 3; ++w0)
        for (int w1 = 0; w1 < 3; ++w1) {
          cld nu = oracle::root_of_unity(ns, 8);
          std::vector<std::function<cld(cld)>> eqs;
          for (int line = 0; line < 2; ++line) {
            cld w = oracle::root_of_unity(line == 0 ? w0 : w1, 3);
            cld c = line == 0 ? c0 : c1;
            cld ii = line == 0 ? I : -I;
            cld g = nu * nu * nu * static_cast<long double>(chi) * w;
            eqs.push_back([=](cld a) { return c + 2.0L * g * (c - a) + 2.0L * std::conj(a) - T; });
            eqs.push_back([=](cld a) {
              return ii - 2.0L * g * (2.0L * nu * static_cast<long double>(chi) * w * w * std::conj(a) + 2.0L * a +
                                      (-2.0L - ii) + r5) -
                     T;
            });
          }
          worst = std::min(worst, lsq_residual(eqs));
        }
  CHECK(worst > 0.1L);
}

TEST_CASE("centre constraints for S(2)") {
  NsdCentre c = centre_nsd_constraints();
  const CycloElem r5 = cyc::sqrt5();
  const FieldElem e_plus = FieldElem((CycloElem(2) + cyc::i() - r5) * q(1, 2));
  const FieldElem e_minus = FieldElem((CycloElem(2) - cyc::i() - r5) * q(1, 2));
  CHECK(((c.eigenvalues[0] == e_plus && c.eigenvalues[1] == e_minus) ||
         (c.eigenvalues[0] == e_minus && c.eigenvalues[1] == e_plus)));
  CHECK(c.k == 1);
  CHECK(c.trace_phi == FieldElem(CycloElem(2) - r5));
  REQUIRE(c.k_cases.size() == 3);
  for (const auto& kc : c.k_cases) {
    CHECK(kc.possible == (kc.k == 1));
    // Cauchy-Schwarz rules out k = 0, 2
    if (kc.k != 1) CHECK(kc.sum_pq * kc.sum_pq > kc.sum_p2 * kc.sum_q2);
  }
  // k = 1 is met by four (1,1) pairs with (2,0) and (0,2)
  CHECK(4 * 1 + 4 == c.k_cases[1].sum_p2);
  CHECK(4 * 1 == c.k_cases[1].sum_pq);
}

}  // TEST_SUITE
