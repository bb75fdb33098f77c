// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "report.hpp"
#include "z2q/bounds.hpp"
#include "z2q/nsd.hpp"
#include "z2q/sd.hpp"

using namespace z2q;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void need(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = "failed: " + what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

CycloElem q(long a, long b) { return CycloElem(frac(a, b)); }

Outcome c1() {
  Outcome v;
  auto t0 = std::chrono::steady_clock::now();
  auto rep = cli::cmd_bound(50, true);
  double secs = seconds_since(t0);
  const auto& res = rep["results"];
  v.need(res["feasible"] == nlohmann::json::parse("[[0,0],[0,1],[1,0],[1,1],[2,2]]"), "feasible set");
  v.need(res["cells"].size() == 1326, "one report per cell");
  for (const auto& c : res["cells"]) {
    bool traced = !c["branches"].empty() || !c["witness"].get<std::string>().empty();
    v.need(traced, "branch trace for (" + c["m"].dump() + "," + c["n"].dump() + ")");
  }
  v.need(secs < 30, "runtime");
  std::ostringstream os;
  os << "feasible {(0,0),(0,1),(1,0),(1,1),(2,2)} over " << res["cells"].size() << " cells in " << secs << " s";
  if (v.ok) v.detail = os.str();
  return v;
}

Outcome c2() {
  Outcome v;
  FusionRing R = build_ring(true, 2, 2);
  CodegreeSet f = formal_codegrees(R);
  v.need(f.f[0] == QuadElem(20, 8, 5) && f.f[1] == QuadElem(20, -8, 5) && f.f[2] == QuadElem(4) && f.f[3] == QuadElem(4),
         "SD(2,2) codegrees");
  QuadElem dim = global_dim(R);
  v.need(dim / f.f[0] == QuadElem(1) && dim / f.f[1] == QuadElem(9, 4, 5) && dim / f.f[2] == QuadElem(5, 2, 5) &&
             dim / f.f[3] == QuadElem(5, 2, 5),
         "SD(2,2) centre dimensions");
  CodegreeSet g = formal_codegrees(build_ring(true, 1, 1));
  v.need(g.f[0] == QuadElem(8, 4, 2) && g.f[1] == QuadElem(8, -4, 2) && g.f[2] == QuadElem(4) && g.f[3] == QuadElem(4),
         "SD(1,1) codegrees");
  int rings = 0;
  for (bool sd : {true, false})
    for (int s = 0; s <= 20; ++s)
      for (int m = 0; m <= s; ++m) {
        if (!sd && 2 * m != s) continue;
        FusionRing X = build_ring(sd, m, s - m);
        v.need(formal_codegrees(X).f[0] == global_dim(X), "f1 = dim at m+n = " + std::to_string(s));
        ++rings;
      }
  if (v.ok) v.detail = "SD(2,2) f = {20+8√5, 20-8√5, 4, 4}, dims (1, 9+4√5, 5+2√5, 5+2√5); SD(1,1) f = {8+4√2, 8-4√2, 4, 4}; f1 = dim on " + std::to_string(rings) + " rings";
  return v;
}

Outcome c3() {
  Outcome v;
  auto lib = rational_r_pairs(40);
  auto ref = oracle::rational_r_pairs(40);
  v.need(std::set(lib.begin(), lib.end()) == std::set(ref.begin(), ref.end()), "library scan matches reference scan");
  int smallest = 1000;
  for (auto [m, n] : lib) smallest = std::min(smallest, m + n);
  v.need(!lib.empty() && smallest >= 11, "minimum m + n >= 11");
  if (v.ok) {
    std::ostringstream os;
    os << "minimal witnesses:";
    for (auto [m, n] : lib)
      if (m + n == smallest) os << " (" << m << "," << n << ")";
    os << " at m+n = " << smallest << "; " << lib.size() << " pairs up to 40";
    v.detail = os.str();
  }
  return v;
}

Outcome c4() {
  Outcome v;
  auto phi = oracle::totient_table(20000);
  long n = 0;
  for (std::int64_t t = 1; t <= 10000; ++t) {
    if (t == 1 || t == 2 || t == 3 || t == 6) continue;
    std::int64_t p = phi[static_cast<size_t>(2 * t)];
    v.need(5 * p * p >= 16 * t, "phi(2t)^2 >= 16t/5 at t = " + std::to_string(t));
    v.need(totient_bound_holds(t) == TotientCheck::kHolds, "library agrees at t = " + std::to_string(t));
    ++n;
  }
  if (v.ok) v.detail = "phi(2t)^2 >= 16t/5 for " + std::to_string(n) + " values t <= 10^4";
  return v;
}

Outcome c5() {
  Outcome v;
  auto rep = cli::cmd_classify("r2-minus");
  SolveOutcome o = sd_classify(-1);
  v.need(o.verdict == SolveVerdict::kUniqueSolution && o.sd_solutions.size() == 1, "unique solution");
  if (!v.ok) return v;
  const GaugeSD& g = o.sd_solutions.front();
  const CycloElem r5 = cyc::sqrt5();
  const FieldElem d0 = g.D.cell(0, 0), d1 = g.D.cell(1, 2), d2 = g.D.cell(3, 0);
  const FieldElem a1 = g.A.cell(3, 0), ah1 = g.A_hat.cell(3, 0);
  const CycloElem n1 = (r5 - CycloElem(1)) * q(1, 8);
  v.need(d0 == FieldElem(q(-1, 2) + cyc::i() * (CycloElem(1) - r5) * q(1, 4)), "d0");
  v.need(d1.abs2() == FieldElem(n1) && d2.abs2() == FieldElem(n1), "|d1|^2 = |d2|^2");
  v.need(a1 == FieldElem(CycloElem(3) + r5) * d1 * d2, "a1");
  v.need(ah1 == -FieldElem(CycloElem(3) + r5) * d1.conj() * d2, "ah1");
  v.need(g.omega_one[0] == CycloElem(1), "omega0");
  v.need(sd_residuals(-1, g).satisfied(), "residuals vanish");
  v.need(d1 == d2 && d1.real_part().is_zero(), "d1 = d2 purely imaginary");
  auto z = oracle::embed(d1);
  v.need(std::abs(std::abs(z) - 0.5L * std::sqrt((std::sqrt(5.0L) - 1) / 2)) < 1e-15L, "|d1|");
  v.need(nu4_sd(g) == FieldElem(1), "nu4 = 1");
  v.need(rep["results"]["verdict"] == "unique_solution", "CLI verdict");
  if (v.ok) v.detail = "unique solution, d0 = -1/2 + i(1-√5)/4, |d1|^2 = (√5-1)/8, residuals exact zero, nu4 = 1";
  return v;
}

Outcome c6() {
  Outcome v;
  SolveOutcome o = sd_classify(1);
  v.need(o.verdict == SolveVerdict::kInfeasible, "infeasible");
  v.need(o.derived.count("tau") && o.derived.at("tau") == FieldElem(1), "tau forced to 1");
  v.need(o.derived.count("larson_need(tau=-1)") && o.derived.at("larson_need(tau=-1)") == FieldElem(80), "tau=-1 needs 80");
  FrobBudget fb = frob_2n_budget(1, CycloElem(-3), 2);
  v.need(fb.larson_need == 80 && fb.contradiction, "budget 16 exceeded");
  const CycloElem r5 = cyc::sqrt5();
  v.need(o.derived.count("|d4|^2") && o.derived.at("|d4|^2") == FieldElem((CycloElem(1) + r5) * q(1, 8)), "circle");
  v.need(o.derived.count("Re(d4^2)") &&
             o.derived.at("Re(d4)^2") - o.derived.at("Im(d4)^2") == o.derived.at("Re(d4^2)"),
         "hyperbola");
  v.need(o.residuals.size() == 4, "four intersection points");
  for (const auto& r : o.residuals) {
    const ResidualEntry* bad = r.first_violation();
    v.need(bad && bad->id == "cross", "cross-evaluation violated at every point");
  }
  if (v.ok) v.detail = "tau = -1 needs 80 roots of unity against 16; 4 exact circle/hyperbola points all violate the reality of d4^2";
  return v;
}

Outcome c7() {
  Outcome v;
  SolveOutcome o = nsd_classify_m1();
  v.need(o.verdict == SolveVerdict::kTwoSolutions && o.nsd_solutions.size() == 2, "two solutions");
  std::set<int> nus;
  for (const auto& g : o.nsd_solutions) {
    v.need(g.A.at(0, 0, 0, 0).abs2() == FieldElem(CycloElem(1) - cyc::sqrt2() * q(1, 2)), "|a|^2");
    v.need(g.C.at(0, 0, 0, 0).abs2() == FieldElem(cyc::sqrt2() * q(1, 2)), "|c|^2");
    v.need(g.chi[0] == 1 && g.omega[0] == CycloElem(1), "chi0 = omega0 = 1");
    if (g.nu == cyc::nu()) nus.insert(1);
    if (g.nu == cyc::nu().conj()) nus.insert(-1);
  }
  v.need(nus.size() == 2, "nu = e^{+-i pi/4}");
  for (const auto& r : o.residuals) v.need(r.satisfied(), "residuals zero");
  if (v.ok) v.detail = "two solutions nu = e^{±iπ/4}, |a|^2 = 1 - 1/√2, |c|^2 = 1/√2, chi0 = omega0 = 1";
  return v;
}

Outcome c8() {
  Outcome v;
  auto t0 = std::chrono::steady_clock::now();
  SolveOutcome opp = nsd_classify_m2(NsdCase::kOppositeChi);
  NsdM2Report eq = nsd_classify_m2_detail(NsdCase::kEqualChi);
  double secs = seconds_since(t0);
  v.need(opp.verdict == SolveVerdict::kInfeasible && !opp.witness.empty(), "opposite chi infeasible");
  v.need(eq.outcome.verdict == SolveVerdict::kInfeasible, "equal chi infeasible");
  int certified = 0;
  for (const auto& c : eq.displayed) certified += c.inconsistent;
  v.need(certified == 36 && eq.displayed.size() == 36, "36 tuples certified");
  v.need(secs < 5, "runtime");
  std::ostringstream os;
  os << "both infeasible; " << certified << "/36 tuples certified; " << secs << " s";
  if (v.ok) v.detail = os.str();
  return v;
}

Outcome c9() {
  Outcome v;
  std::mt19937_64 rng(424242);
  int field = 0;
  for (int it = 0; it < 1000; ++it) {
    CycloElem a = oracle::random_cyclo(rng), b = oracle::random_cyclo(rng), c = oracle::random_cyclo(rng);
    bool ok = a * (b + c) == a * b + a * c && (a * b) * c == a * (b * c) && a * b == b * a &&
              (b.is_zero() || b * b.inverse() == CycloElem(1));
    v.need(ok, "field axioms");
    ++field;
  }
  int rings = 0;
  for (bool sd : {true, false})
    for (int s = 0; s <= 20; ++s)
      for (int m = 0; m <= s; ++m) {
        if (!sd && 2 * m != s) continue;
        FusionRing R = build_ring(sd, m, s - m);
        v.need(oracle::associative(R.N) && verify_axioms(R).ok, "associativity");
        ++rings;
      }
  std::uniform_int_distribution<int> bit(0, 1), cube(0, 2);
  int idem = 0;
  for (int it = 0; it < 100; ++it) {
    GaugeSD g;
    g.m = 2;
    g.lambda_alpha = it % 2 ? 1 : -1;
    g.lambda_rho = g.lambda_alpha == 1 ? 1 : (bit(rng) ? 1 : -1);
    const CycloElem unit = g.lambda_alpha == 1 ? CycloElem(1) : cyc::i();
    for (int i = 0; i < 2; ++i) {
      g.chi_one.push_back(unit * CycloElem(bit(rng) ? 1 : -1));
      g.chi_alpha.push_back(CycloElem(bit(rng) ? 1 : -1));
    }
    if (g.lambda_alpha == 1) {
      for (int i = 0; i < 2; ++i) {
        g.omega_one.push_back(cyc::omega().pow(cube(rng)));
        g.omega_alpha.push_back(cyc::omega().pow(cube(rng)));
      }
      g.tilde_one = g.tilde_alpha = {0, 1};
    } else {
      g.omega_one.assign(2, cyc::omega().pow(cube(rng)));
      g.omega_alpha.assign(2, cyc::omega().pow(cube(rng)));
      g.tilde_one = g.tilde_alpha = {1, 0};
    }
    g.A = g.B = g.C = g.D = g.A_hat = g.B_hat = g.C_hat = g.D_hat = Tensor4(2);
    v.need(sd_parameters_admissible(g) && sd_symmetry_idempotence(g).satisfied(), "idempotence");
    ++idem;
  }
  const GaugeSD sol = sd_classify(-1).sd_solutions.front();
  int gauge = 0;
  for (int it = 0; it < 20; ++it) {
    GaugeSD h = gauge_act(sol, oracle::random_unimodular(rng), oracle::random_unimodular(rng));
    v.need(sd_residuals(-1, h).satisfied() && sd_symmetry_check(h).satisfied(), "gauge invariance");
    ++gauge;
  }
  bool boundary = false;
  for (const auto& b : branch_outcomes(2, 2))
    if (b.theta == ThetaCase::kI) boundary = b.larson_need == 64 && b.budget == 64 && !b.excluded;
  v.need(boundary, "(2,2) twist-i branch needs 64 against 64 and stays");
  std::ostringstream os;
  os << field << " field cases, " << rings << " rings associative, " << idem << " idempotence draws, " << gauge
     << " gauge pairs, (2,2) boundary 64 vs 64 kept";
  if (v.ok) v.detail = os.str();
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"bound --max 50 feasible set", c1},
      {"codegrees and centre dimensions", c2},
      {"r in Q(d) scan m+n <= 40", c3},
      {"totient lemma t <= 10^4", c4},
      {"classify r2-minus", c5},
      {"classify r2-plus", c6},
      {"classify s1", c7},
      {"classify s2-opposite / s2-equal", c8},
      {"property suites", c9},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failed += !v.ok;
    std::printf("criterion %zu [%s] %s: %s\n", i + 1, v.ok ? "PASS" : "FAIL", criteria[i].first, v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
