#include "report.hpp"

#include <sstream>

#include "z2q/fusion.hpp"
#include "z2q/nsd.hpp"
#include "z2q/numtheory.hpp"
#include "z2q/sd.hpp"

#ifndef Z2Q_VERSION
#define Z2Q_VERSION "0.0.0"
#endif

namespace z2q::cli {

using render::value;

namespace {

json integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json report(const std::string& command, json inputs, json results, std::vector<std::string> citations) {
  return {{"command", command},
          {"inputs", std::move(inputs)},
          {"results", std::move(results)},
          {"citations", std::move(citations)},
          {"version", version()}};
}

std::string idx(int i, int j, int k, int l) {
  return std::to_string(i) + std::to_string(j) + std::to_string(k) + std::to_string(l);
}

json tensor_json(const Tensor4& t) {
  json out = json::array();
  const int m = t.m();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          if (!t.at(i, j, k, l).is_zero()) out.push_back({{"index", idx(i, j, k, l)}, {"value", value(t.at(i, j, k, l))}});
  return out;
}

json num_json(const Num& x) {
  if (x.exact()) return value(x.value());
  return value(x.ball());
}

json residuals_json(const std::vector<Residuals>& rs) {
  json out = json::array();
  for (const auto& r : rs) {
    json entries = json::array();
    for (const auto& e : r.entries)
      entries.push_back({{"id", e.id}, {"equation", e.equation}, {"zero", e.zero()}, {"value", num_json(e.value)}});
    const ResidualEntry* bad = r.first_violation();
    out.push_back({{"system", r.system_name},
                   {"satisfied", r.satisfied()},
                   {"first_violation", bad ? json(bad->id) : json(nullptr)},
                   {"entries", entries}});
  }
  return out;
}

template <class V>
json values_json(const std::vector<V>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(value(x));
  return out;
}

json tensors_json(const Tensor4& A, const Tensor4& B, const Tensor4& C, const Tensor4& D, const Tensor4& Ah,
                  const Tensor4& Bh, const Tensor4& Ch, const Tensor4& Dh) {
  return {{"A", tensor_json(A)},      {"B", tensor_json(B)},      {"C", tensor_json(C)},      {"D", tensor_json(D)},
          {"A_hat", tensor_json(Ah)}, {"B_hat", tensor_json(Bh)}, {"C_hat", tensor_json(Ch)}, {"D_hat", tensor_json(Dh)}};
}

json sd_solution_json(const GaugeSD& g) {
  return {{"lambda_alpha", g.lambda_alpha},
          {"lambda_rho", g.lambda_rho},
          {"mu", g.mu},
          {"chi_one", values_json(g.chi_one)},
          {"chi_alpha", values_json(g.chi_alpha)},
          {"omega_one", values_json(g.omega_one)},
          {"omega_alpha", values_json(g.omega_alpha)},
          {"tilde_one", g.tilde_one},
          {"tilde_alpha", g.tilde_alpha},
          {"tensors", tensors_json(g.A, g.B, g.C, g.D, g.A_hat, g.B_hat, g.C_hat, g.D_hat)}};
}

json nsd_solution_json(const GaugeNSD& g) {
  std::vector<CycloElem> chi;
  for (int c : g.chi) chi.emplace_back(c);
  return {{"m", g.m},
          {"nu", value(g.nu)},
          {"chi", values_json(chi)},
          {"omega", values_json(g.omega)},
          {"tensors", tensors_json(g.A, g.B, g.C, g.D, g.A_hat, g.B_hat, g.C_hat, g.D_hat)}};
}

json outcome_json(const SolveOutcome& o) {
  json derived = json::object();
  for (const auto& [k, v] : o.derived) derived[k] = value(v);
  json sols = json::array();
  for (const auto& g : o.sd_solutions) sols.push_back(sd_solution_json(g));
  for (const auto& g : o.nsd_solutions) sols.push_back(nsd_solution_json(g));
  return {{"verdict", to_string(o.verdict)},
          {"witness", o.witness},
          {"trace", o.trace},
          {"derived", derived},
          {"solutions", sols},
          {"solution_count", sols.size()},
          {"residuals", residuals_json(o.residuals)}};
}

json r2_minus_summary(const GaugeSD& g) {
  const FieldElem d0 = g.D.cell(0, 0), d1 = g.D.cell(1, 2), d2 = g.D.cell(3, 0);
  const FieldElem a1 = g.A.cell(3, 0), ah1 = g.A_hat.cell(3, 0), r = g.A.cell(1, 2);
  const FieldElem k = FieldElem(CycloElem(3) + cyc::sqrt5());
  const CycloElem target = (cyc::sqrt5() - CycloElem(1)) * CycloElem(frac(1, 8));
  return {{"d0", value(d0)},
          {"d1", value(d1)},
          {"d2", value(d2)},
          {"a1", value(a1)},
          {"ah1", value(ah1)},
          {"r", value(r)},
          {"abs2_d1", value(d1.abs2())},
          {"abs2_d2", value(d2.abs2())},
          {"omega0", value(g.omega_one[0])},
          {"nu4", value(nu4_sd(g))},
          {"checks",
           {{"a1 = (3 + sqrt5) d1 d2", a1 == k * d1 * d2},
            {"ah1 = -(3 + sqrt5) conj(d1) d2", ah1 == -k * d1.conj() * d2},
            {"|d1|^2 = |d2|^2 = (sqrt5 - 1)/8", d1.abs2() == FieldElem(target) && d2.abs2() == FieldElem(target)},
            {"d1 = d2 purely imaginary", d1 == d2 && d1.real_part().is_zero()},
            {"symmetry relations hold", sd_symmetry_check(g).satisfied()}}}};
}

json s1_summary(const GaugeNSD& g) {
  const FieldElem a = g.A.at(0, 0, 0, 0), c = g.C.at(0, 0, 0, 0);
  return {{"nu", value(g.nu)},   {"chi0", g.chi[0]},         {"omega0", value(g.omega[0])}, {"a", value(a)},
          {"c", value(c)},       {"abs2_a", value(a.abs2())}, {"abs2_c", value(c.abs2())},
          {"symmetry_relations_hold", nsd_symmetry_check(g).satisfied()}};
}

json certs_json(const std::vector<A3Certificate>& cs) {
  json out = json::array();
  for (const auto& c : cs)
    out.push_back({{"chi0", c.chi0},
                   {"nu_sign", c.nu_sign},
                   {"omega_exponents", {c.w0, c.w1}},
                   {"inconsistent", c.inconsistent},
                   {"kind", c.kind},
                   {"witness", value(c.witness)}});
  return out;
}

json centre_json() {
  NsdCentre c = centre_nsd_constraints();
  json ks = json::array();
  for (const auto& k : c.k_cases)
    ks.push_back({{"k", k.k}, {"sum_p2", k.sum_p2}, {"sum_q2", k.sum_q2}, {"sum_pq", k.sum_pq}, {"possible", k.possible}});
  return {{"trace_phi", value(c.trace_phi)},
          {"eigenvalues", {value(c.eigenvalues[0]), value(c.eigenvalues[1])}},
          {"k", c.k},
          {"k_cases", ks},
          {"trace", c.trace}};
}

json branch_json(const BranchOutcome& b) {
  QuadElem rhs = b.rhs_t == 1 ? QuadElem(b.rhs_u + Rational(b.rhs_v)) : QuadElem(b.rhs_u, Rational(b.rhs_v), b.rhs_t);
  return {{"theta", theta_name(b.theta)},
          {"delta", delta_name(b.delta)},
          {"target", render::text(rhs)},
          {"larson_need", integer(b.larson_need)},
          {"budget", render::text(b.budget)},
          {"excluded", b.excluded},
          {"need_with_squares", integer(b.need_with_cs)},
          {"excluded_with_squares", b.excluded_with_cs}};
}

json cell_json(const FeasibilityReport& r) {
  json br = json::array();
  for (const auto& b : r.branches) br.push_back(branch_json(b));
  return {{"m", r.m},
          {"n", r.n},
          {"verdict", r.verdict == Verdict::kFeasible ? "feasible" : "infeasible"},
          {"witness", r.witness},
          {"integrality_ok", r.integrality_ok},
          {"r_kind", r_kind_name(r.r_kind)},
          {"rank2_rule_applied", r.rank2_rule_applied},
          {"branches", br}};
}

json assignment_json(const InductionAssignment& a) {
  json z = json::array();
  for (auto [p, q] : a.z_pairs) z.push_back({p, q});
  return {{"x", a.x}, {"x_prime", a.x_prime}, {"y", a.y}, {"y_prime", a.y_prime}, {"z_pairs", z}};
}

}  // namespace

const char* version() { return Z2Q_VERSION; }

const std::vector<std::string>& classify_targets() {
  static const std::vector<std::string> t = {"r2-plus", "r2-minus", "s1", "s2-opposite", "s2-equal"};
  return t;
}

json cmd_ring(bool selfdual, int m, int n) {
  if (m < 0 || n < 0) throw UsageError("m and n must be nonnegative");
  FusionRing R = build_ring(selfdual, m, n);
  AxiomCheck ax = verify_axioms(R);
  json mats = json::object();
  for (int a = 0; a < kRank; ++a) mats[label_name(a)] = R.fusion_matrix(a);
  json labels = json::array();
  for (int a = 0; a < kRank; ++a) labels.push_back(label_name(a));
  json chars = json::array();
  for (const auto& c : characters(R)) {
    json vals = json::array();
    for (const auto& v : c.values) vals.push_back(value(v));
    chars.push_back({{"alpha_sign", c.alpha_sign()}, {"values", vals}});
  }
  CodegreeSet cod = formal_codegrees(R);
  const QuadElem dim = global_dim(R);
  json f = json::array(), dims = json::array();
  for (const auto& x : cod.f) {
    f.push_back(value(x));
    dims.push_back(value(dim / x));
  }
  json results = {{"labels", labels},
                  {"fusion_matrices", mats},
                  {"axioms_ok", ax.ok},
                  {"axiom_violation", ax.violation},
                  {"fp_dim", value(fp_dim(R))},
                  {"fp_dim_is_perron", fp_dim_is_perron(R)},
                  {"global_dim", value(dim)},
                  {"characters", chars},
                  {"formal_codegrees", f},
                  {"gamma", value(cod.gamma)},
                  {"gamma_bar", value(cod.gamma_bar)},
                  {"center_dims", dims},
                  {"codegree_identity", cod.f[0] == dim}};
  if (selfdual) {
    CenterUnitDims u = center_unit_dims(m, n);
    json unit = {{"X2", value(u.x2)}};
    unit["X3"] = u.x3 ? value(*u.x3) : json(nullptr);
    unit["X4"] = u.x4 ? value(*u.x4) : json(nullptr);
    results["center_unit_dims"] = unit;
  }
  return report("ring", {{"selfdual", selfdual}, {"m", m}, {"n", n}}, results,
                {"fusion rules of the rank-4 quadratic rings", "formal codegrees and centre dimensions"});
}

json cmd_bound(int max_sum, bool per_cell) {
  if (max_sum < 1) throw UsageError("--max must be at least 1");
  auto reports = scan_bound(max_sum);
  json feasible = json::array(), cells = json::array();
  long infeasible = 0;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::kFeasible) feasible.push_back({r.m, r.n});
    else ++infeasible;
    if (per_cell) cells.push_back(cell_json(r));
  }
  json results = {{"cells_evaluated", reports.size()}, {"infeasible_cells", infeasible}, {"feasible", feasible}};
  if (per_cell) results["cells"] = cells;
  return report("bound", {{"max", max_sum}}, results,
                {"pseudounitary multiplicity bound", "two-parameter bound", "centre dimension integrality",
                 "Larson bound for sums of roots of unity"});
}

json cmd_larson(const std::string& u, const std::string& v, std::int64_t t) {
  Rational uq;
  Integer vz;
  if (uq.set_str(u, 10) != 0) throw UsageError("u must be a rational number: " + u);
  uq.canonicalize();
  if (vz.set_str(v, 10) != 0) throw UsageError("v must be an integer: " + v);
  LarsonBound b;
  try {
    b = larson_lower_bound(uq, vz, t);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  QuadElem target = t == 1 ? QuadElem(uq + Rational(vz)) : QuadElem(uq, Rational(vz), t);
  return report("larson", {{"u", render::text(uq)}, {"v", vz.get_str()}, {"t", t}},
                {{"target", value(target)}, {"need", integer(b.need)}, {"rule", larson_rule_name(b.rule)}},
                {"Larson bound for sums of roots of unity"});
}

json cmd_classify(const std::string& target) {
  json results;
  std::vector<std::string> cites;
  if (target == "r2-plus" || target == "r2-minus") {
    const int la = target == "r2-plus" ? 1 : -1;
    SolveOutcome o = sd_classify(la);
    results = outcome_json(o);
    results["lambda_alpha"] = la;
    if (la == -1 && !o.sd_solutions.empty()) results["normalised"] = r2_minus_summary(o.sd_solutions.front());
    cites = {"symmetry relations for the self-dual 6j block", "coefficient equations for R(2)",
             "Frobenius-Schur indicator budget", "gauge normalisation"};
    if (la == 1) cites.push_back("cross-evaluation reality constraint");
  } else if (target == "s1") {
    SolveOutcome o = nsd_classify_m1();
    results = outcome_json(o);
    json sum = json::array();
    for (const auto& g : o.nsd_solutions) sum.push_back(s1_summary(g));
    results["normalised"] = sum;
    cites = {"symmetry relations for the non-self-dual 6j block", "equations for S(1)"};
  } else if (target == "s2-opposite" || target == "s2-equal") {
    NsdM2Report r = nsd_classify_m2_detail(target == "s2-opposite" ? NsdCase::kOppositeChi : NsdCase::kEqualChi);
    results = outcome_json(r.outcome);
    if (target == "s2-equal") {
      results["certificates"] = {{"displayed", certs_json(r.displayed)}, {"rederived", certs_json(r.rederived)}};
      long bad = 0;
      for (const auto& c : r.displayed) bad += c.inconsistent;
      results["tuples_certified"] = bad;
    }
    results["centre"] = centre_json();
    cites = {"symmetry relations for the non-self-dual 6j block", "trace and norm identities for S(2)",
             "centre constraints for S(2)"};
  } else {
    throw UsageError("unknown classify target: " + target);
  }
  results["target"] = target;
  return report("classify", {{"target", target}}, results, cites);
}

json cmd_assignment_check(int m, int n, const InductionAssignment& a) {
  if (m < 0 || n < 0) throw UsageError("m and n must be nonnegative");
  AssignmentCheck c = check_assignment(m, n, a);
  return report("assignment-check", {{"m", m}, {"n", n}, {"assignment", assignment_json(a)}},
                {{"consistent", c.ok}, {"first_violation", c.failed}, {"squares_upper_bound", render::text(squares_upper_bound(m, n))}},
                {"forgetful functor bookkeeping"});
}

json cmd_assignment_search(int m, int n, long cap, std::size_t max_z, std::size_t limit) {
  if (m < 0 || n < 0) throw UsageError("m and n must be nonnegative");
  if (cap < 0) throw UsageError("--cap must be nonnegative");
  auto found = search_assignments(m, n, cap, max_z, limit);
  json list = json::array();
  for (const auto& a : found) list.push_back(assignment_json(a));
  return report("assignment-check",
                {{"m", m}, {"n", n}, {"search", true}, {"cap", cap}, {"max_z", max_z}, {"limit", limit}},
                {{"found", found.size()}, {"assignments", list}, {"truncated", found.size() >= limit}},
                {"forgetful functor bookkeeping"});
}

std::vector<std::pair<long, long>> parse_pairs(const std::string& s) {
  std::vector<std::pair<long, long>> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("pair must look like z:z', got " + item);
    try {
      size_t p1 = 0, p2 = 0;
      long a = std::stol(item.substr(0, colon), &p1);
      long b = std::stol(item.substr(colon + 1), &p2);
      if (p1 != colon || p2 != item.size() - colon - 1 || a < 0 || b < 0) throw std::invalid_argument(item);
      out.emplace_back(a, b);
    } catch (const std::logic_error&) {
      throw UsageError("bad pair: " + item);
    }
  }
  return out;
}

namespace {

bool is_value(const json& j) { return j.is_object() && j.contains("text") && j.contains("decimal"); }

std::string scalar(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (is_value(j)) {
    std::string t = j["text"].get<std::string>();
    const json& d = j["decimal"];
    if (d.is_string()) return t + "  (" + d.get<std::string>() + ")";
    std::string im = d["im"].get<std::string>();
    std::string sep = " + ";
    if (im[0] == '-') {
      sep = " - ";
      im.erase(0, 1);
    }
    return t + "  (" + d["re"].get<std::string>() + sep + im + "i)";
  }
  return j.dump();
}

bool flat_array(const json& j) {
  for (const auto& x : j)
    if (x.is_object() || (x.is_array() && !flat_array(x))) return false;
  return true;
}

void emit(std::ostringstream& os, const json& j, int depth) {
  const std::string pad(static_cast<size_t>(depth) * 2, ' ');
  if (j.is_object() && !is_value(j)) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const json& v = it.value();
      if (it.key() == "cells" && v.is_array()) {
        os << pad << "cells:\n";
        for (const auto& c : v)
          os << pad << "  (" << c["m"] << "," << c["n"] << ") " << c["verdict"].get<std::string>()
             << (c["witness"].get<std::string>().empty() ? "" : ": " + c["witness"].get<std::string>()) << "\n";
        continue;
      }
      if ((v.is_object() && !is_value(v)) || (v.is_array() && !flat_array(v) && !v.empty())) {
        os << pad << it.key() << ":\n";
        emit(os, v, depth + 1);
      } else if (v.is_array() && v.size() > 6 && flat_array(v) && !v.empty() && v[0].is_string()) {
        os << pad << it.key() << ":\n";
        for (const auto& x : v) os << pad << "  - " << scalar(x) << "\n";
      } else {
        os << pad << it.key() << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& x : j) {
      if (is_value(x) || !x.is_structured()) {
        os << pad << "- " << scalar(x) << "\n";
      } else if (x.is_array() && flat_array(x)) {
        os << pad << "- " << x.dump() << "\n";
      } else {
        os << pad << "-\n";
        emit(os, x, depth + 1);
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string text_report(const json& r) {
  std::ostringstream os;
  os << "z2q " << r["version"].get<std::string>() << " " << r["command"].get<std::string>() << "\n";
  os << "inputs:\n";
  emit(os, r["inputs"], 1);
  os << "results:\n";
  emit(os, r["results"], 1);
  os << "citations:\n";
  for (const auto& c : r["citations"]) os << "  - " << c.get<std::string>() << "\n";
  return os.str();
}

}  // namespace z2q::cli
