#include "z2q/bounds.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <stdexcept>

namespace z2q {

namespace {

struct Sqf {
  std::int64_t S, v0, t;
};
Sqf split_s(int s) {
  std::int64_t S = 4 + std::int64_t(s) * s;
  auto sp = squarefree_part(S);
  return {S, sp.v, sp.t};
}

Integer iabs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

}  // namespace

const char* larson_rule_name(LarsonRule r) {
  switch (r) {
    case LarsonRule::kRational: return "rational";
    case LarsonRule::kSqrt2: return "sqrt2";
    case LarsonRule::kTotient: return "totient";
  }
  return "?";
}

LarsonBound larson_lower_bound(const Rational& u, const Integer& v, std::int64_t t) {
  if (t < 1 || !is_squarefree(t)) throw std::invalid_argument("larson: t must be a positive squarefree integer");
  if (v == 0 || t == 1) return {ceil_abs(u + Rational(v)), LarsonRule::kRational};
  if (t == 2) return {ceil_abs(u) + 2 * iabs(v), LarsonRule::kSqrt2};
  return {iabs(v) * Integer(euler_totient(2 * t)), LarsonRule::kTotient};
}

TotientCheck totient_bound_holds(std::int64_t t) {
  if (t == 1 || t == 2 || t == 3 || t == 6) return TotientCheck::kExcluded;
  Integer phi = euler_totient(2 * t);
  return 5 * phi * phi >= 16 * Integer(t) ? TotientCheck::kHolds : TotientCheck::kFails;
}

const char* r_kind_name(RKind k) {
  switch (k) {
    case RKind::kRational: return "rational";
    case RKind::kInQd: return "in Q(d)";
    case RKind::kOutside: return "irrational-outside";
  }
  return "?";
}

RIntegrality r_integrality(int m, int n) {
  std::int64_t S = 4 + std::int64_t(m + n) * (m + n);
  std::int64_t Sp = 4 + std::int64_t(m - n) * (m - n);
  std::int64_t t = squarefree_part(S * Sp).t;
  RKind kind = t == 1 ? RKind::kRational : (t == squarefree_part(S).t ? RKind::kInQd : RKind::kOutside);
  return {m == n || kind != RKind::kOutside, kind, r_parameter(m, n)};
}

std::vector<std::pair<int, int>> rational_r_pairs(int max_sum) {
  std::vector<std::pair<int, int>> out;
  for (int s = 1; s <= max_sum; ++s)
    for (int m = 1; m < s; ++m) {
      int n = s - m;
      if (m == n) continue;
      if (r_integrality(m, n).kind != RKind::kOutside) out.push_back({m, n});
    }
  return out;
}

CenterUnitDims center_unit_dims(int m, int n) {
  FusionRing R = build_ring(true, m, n);
  QuadElem d = fp_dim(R);
  CenterUnitDims out;
  out.x2 = QuadElem(1) + QuadElem(long(m + n)) * d;
  RIntegrality ri = r_integrality(m, n);
  if (m == n || ri.kind != RKind::kOutside) {
    QuadElem base = QuadElem(1) + QuadElem(frac(m + n, 2)) * d;
    QuadElem shift = m == n ? QuadElem() : ri.r * QuadElem(frac(m - n, 2)) * d;
    out.x3 = base - shift;
    out.x4 = base + shift;
  }
  return out;
}

AssignmentCheck check_assignment(int m, int n, const InductionAssignment& a) {
  auto fail = [](const char* id) { return AssignmentCheck{false, id}; };
  auto sum = [](const auto& v) {
    long s = 0;
    for (long e : v) s += e;
    return s;
  };
  const long s = m + n;
  if (sum(a.x) != 2L * m || sum(a.x_prime) != 2L * n) return fail("vertical-sums-x");
  if (a.x[0] + a.x_prime[0] != s) return fail("horizontal-sum-x2");
  QuadElem shift = m == n ? QuadElem() : r_parameter(m, n) * QuadElem(frac(m - n, 2));
  QuadElem half_s(frac(s, 2));
  if (QuadElem(a.x[1] + a.x_prime[1]) != half_s - shift) return fail("horizontal-sum-x3");
  if (QuadElem(a.x[2] + a.x_prime[2]) != half_s + shift) return fail("horizontal-sum-x4");
  if (sum(a.y) != 2L * n || sum(a.y_prime) != 2L * m) return fail("vertical-sums-y");
  for (long e : a.x) if (e < 0) return fail("nonnegativity");
  for (long e : a.x_prime) if (e < 0) return fail("nonnegativity");
  for (long e : a.y) if (e < 0) return fail("nonnegativity");
  for (long e : a.y_prime) if (e < 0) return fail("nonnegativity");
  for (auto [z, zp] : a.z_pairs) if (z < 0 || zp < 0) return fail("nonnegativity");

  long xx = 0, xy = 0, yy = 0, plus = 0, minus = 0;
  for (int j = 0; j < 3; ++j) {
    xx += a.x[j] * a.x[j];
    xy += a.x[j] * a.x_prime[j];
    yy += a.x_prime[j] * a.x_prime[j];
    minus += (a.x[j] - a.x_prime[j]) * (a.x[j] - a.x_prime[j]);
  }
  for (int j = 0; j < 4; ++j) {
    xx += a.y[j] * a.y[j];
    xy += a.y[j] * a.y_prime[j];
    yy += a.y_prime[j] * a.y_prime[j];
    plus += (a.y[j] + a.y_prime[j]) * (a.y[j] + a.y_prime[j]);
    minus += (a.y[j] - a.y_prime[j]) * (a.y[j] - a.y_prime[j]);
  }
  for (auto [z, zp] : a.z_pairs) {
    xx += z * z;
    xy += z * zp;
    yy += zp * zp;
    plus += (z + zp) * (z + zp);
    minus += (z - zp) * (z - zp);
  }
  const long hom = 4 + 2L * m * m + 2L * n * n;
  if (xx != hom) return fail("dim-hom-rho-rho");
  if (xy != 4L * m * n) return fail("dim-hom-rho-alpharho");
  if (yy != hom) return fail("dim-hom-alpharho-alpharho");
  std::int64_t S = 4 + std::int64_t(s) * s, Sp = 4 + std::int64_t(m - n) * (m - n);
  Rational r2 = frac(S, Sp);
  Rational plus_rhs = 8 + frac(5, 2) * s * s - r2 / 2 * (m - n) * (m - n);
  if (Rational(plus) != plus_rhs) return fail("plus-squares");
  if (minus != 8 + 4L * (m - n) * (m - n)) return fail("minus-squares");
  return {};
}

std::vector<InductionAssignment> search_assignments(int m, int n, long cap, std::size_t max_z, std::size_t limit) {
  std::vector<InductionAssignment> out;
  const long s = m + n;
  const long hom = 4 + 2L * m * m + 2L * n * n;
  auto compositions = [cap](long total, int parts) {
    std::vector<std::vector<long>> res;
    std::vector<long> cur(parts, 0);
    std::function<void(int, long)> rec = [&](int i, long left) {
      if (i == parts - 1) {
        if (left <= cap) {
          cur[i] = left;
          res.push_back(cur);
        }
        return;
      }
      for (long v = 0; v <= std::min(left, cap); ++v) {
        cur[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, total);
    return res;
  };
  // y columns are interchangeable; keep (y_j, y'_j) pairs sorted
  auto ys = compositions(2L * n, 4), yps = compositions(2L * m, 4);
  std::vector<std::pair<long, long>> zp;
  for (auto& x : compositions(2L * m, 3))
    for (auto& xp : compositions(2L * n, 3)) {
      InductionAssignment a;
      std::copy(x.begin(), x.end(), a.x.begin());
      std::copy(xp.begin(), xp.end(), a.x_prime.begin());
      if (a.x[0] + a.x_prime[0] != s) continue;
      for (auto& y : ys)
        for (auto& yp : yps) {
          bool sorted = true;
          for (int j = 0; j + 1 < 4; ++j)
            if (std::make_pair(y[j], yp[j]) > std::make_pair(y[j + 1], yp[j + 1])) sorted = false;
          if (!sorted) continue;
          std::copy(y.begin(), y.end(), a.y.begin());
          std::copy(yp.begin(), yp.end(), a.y_prime.begin());
          long A = hom, B = hom, C = 4L * m * n;
          for (int j = 0; j < 3; ++j) {
            A -= a.x[j] * a.x[j];
            B -= a.x_prime[j] * a.x_prime[j];
            C -= a.x[j] * a.x_prime[j];
          }
          for (int j = 0; j < 4; ++j) {
            A -= a.y[j] * a.y[j];
            B -= a.y_prime[j] * a.y_prime[j];
            C -= a.y[j] * a.y_prime[j];
          }
          if (A < 0 || B < 0 || C < 0) continue;
          // multisets of nonzero pairs, nondecreasing
          std::function<void(long, long, long, long, long)> rec = [&](long ra, long rb, long rc, long lz, long lzp) {
            if (out.size() >= limit) return;
            if (ra == 0 && rb == 0 && rc == 0) {
              a.z_pairs = zp;
              if (check_assignment(m, n, a).ok) out.push_back(a);
              return;
            }
            if (zp.size() >= max_z) return;
            for (long z = lz; z <= cap && z * z <= ra; ++z)
              for (long w = (z == lz ? lzp : 0); w <= cap && w * w <= rb; ++w) {
                if (z == 0 && w == 0) continue;
                if (z * w > rc) break;
                zp.push_back({z, w});
                rec(ra - z * z, rb - w * w, rc - z * w, z, w);
                zp.pop_back();
              }
          };
          rec(A, B, C, 0, 0);
        }
    }
  return out;
}

Rational squares_upper_bound(int m, int n) { return 8 + frac(3, 2) * (m + n) * (m + n); }

const char* theta_name(ThetaCase t) { return t == ThetaCase::kI ? "i" : "1"; }
const char* delta_name(DeltaCase d) {
  switch (d) {
    case DeltaCase::kZero: return "0";
    case DeltaCase::kPlus: return "+2dim";
    case DeltaCase::kMinus: return "-2dim";
  }
  return "?";
}

std::vector<BranchOutcome> branch_outcomes(int m, int n) {
  const int s = m + n;
  if (s < 1) throw std::invalid_argument("branch outcomes need m + n >= 1");
  Sqf q = split_s(s);
  std::int64_t Sp = 4 + std::int64_t(m - n) * (m - n);
  Rational r2 = frac(q.S, Sp);
  Rational diff2 = r2 * (m - n) * (m - n);
  std::vector<BranchOutcome> out;

  auto finish = [&](BranchOutcome b, const Rational& u_cs) {
    b.larson_need = larson_lower_bound(b.rhs_u, b.rhs_v, b.rhs_t).need;
    b.excluded = Rational(b.larson_need) > b.budget;
    b.need_with_cs = larson_lower_bound(u_cs, b.rhs_v, b.rhs_t).need;
    b.excluded_with_cs = Rational(b.need_with_cs) > b.budget;
    out.push_back(b);
  };

  {
    // twice the real part of the first indicator identity, over d
    BranchOutcome b{};
    b.theta = ThetaCase::kI;
    b.delta = DeltaCase::kZero;
    b.rhs_u = Rational(s) * s + diff2;
    b.rhs_v = Integer(2L * s) * Integer(q.v0);
    b.rhs_t = q.t;
    b.budget = 2 * squares_upper_bound(m, n);
    finish(b, b.rhs_u);
  }
  for (DeltaCase dc : {DeltaCase::kZero, DeltaCase::kPlus, DeltaCase::kMinus}) {
    // second indicator identity over d; the unknown sum (y + y')^2 >= 0 only
    // enters the rational part, so the proven bound drops it
    long c = s + (dc == DeltaCase::kPlus ? 2 : dc == DeltaCase::kMinus ? -2 : 0);
    BranchOutcome b{};
    b.theta = ThetaCase::kOne;
    b.delta = dc;
    b.rhs_u = 0;
    b.rhs_v = Integer(2L * c) * Integer(q.v0);
    b.rhs_t = q.t;
    b.budget = squares_upper_bound(m, n);
    Rational known = -Rational(s) * s / 2 + diff2 / 2;
    finish(b, known + Rational(s) * s);
  }
  return out;
}

FeasibilityReport multiplicity_feasible(int m, int n) {
  FeasibilityReport rep;
  rep.m = m;
  rep.n = n;
  if (m == 0 && n == 0) {
    rep.witness = "pointed";
    return rep;
  }
  RIntegrality ri = r_integrality(m, n);
  rep.integrality_ok = ri.ok;
  rep.r_kind = ri.kind;
  rep.branches = branch_outcomes(m, n);
  if (!ri.ok) {
    rep.verdict = Verdict::kInfeasible;
    rep.witness = "center dimensions not in Z[d]: r = " + ri.r.str() + " lies outside Q(d)";
    return rep;
  }
  if (std::min(m, n) == 0 && !((m == 0 && n == 1) || (m == 1 && n == 0))) {
    rep.rank2_rule_applied = true;
    rep.verdict = Verdict::kInfeasible;
    rep.witness = "rank-2 classification: only (0,0), (0,1), (1,0) occur when min(m,n) = 0";
    return rep;
  }
  bool all = std::all_of(rep.branches.begin(), rep.branches.end(), [](const BranchOutcome& b) { return b.excluded; });
  if (all) {
    rep.verdict = Verdict::kInfeasible;
    rep.witness = "every twist branch needs more roots of unity than the budget allows";
  }
  return rep;
}

std::vector<FeasibilityReport> scan_bound(int max_sum) {
  std::vector<FeasibilityReport> out;
  for (int s = 0; s <= max_sum; ++s)
    for (int m = 0; m <= s; ++m) out.push_back(multiplicity_feasible(m, s - m));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return std::tie(a.m, a.n) < std::tie(b.m, b.n); });
  return out;
}

std::vector<std::pair<int, int>> feasible_set(int max_sum) {
  std::vector<std::pair<int, int>> out;
  for (const auto& r : scan_bound(max_sum))
    if (r.verdict == Verdict::kFeasible) out.push_back({r.m, r.n});
  return out;
}

FrobBudget frob_2n_budget(int lambda_alpha, const CycloElem& nu_target, int n_index) {
  if (lambda_alpha != 1 && lambda_alpha != -1) throw std::invalid_argument("lambda_alpha must be +-1");
  CycloElem s5 = cyc::sqrt5();
  CycloElem dim = CycloElem(20) + CycloElem(8) * s5;
  CycloElem la_n = CycloElem((n_index % 2 == 0 || lambda_alpha == 1) ? 1 : -1);
  CycloElem rhs = nu_target * dim - (CycloElem(28) + CycloElem(12) * s5) - la_n * dim;
  FrobBudget out;
  out.required = rhs / (CycloElem(2) + s5);
  auto q = to_quadratic(out.required);
  if (!q) throw std::domain_error("frob budget: required sum is not quadratic");
  out.required_quad = *q;
  if (q->q().get_den() != 1) throw std::domain_error("frob budget: irrational coefficient is not integral");
  out.larson_need = larson_lower_bound(q->p(), q->q().get_num(), q->is_rational() ? 1 : q->radicand()).need;
  out.contradiction = out.larson_need > 16;
  return out;
}

}  // namespace z2q
