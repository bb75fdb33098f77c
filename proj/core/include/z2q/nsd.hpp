#pragma once

#include <array>
#include <string>
#include <vector>

#include "z2q/gauge.hpp"

namespace z2q {

struct NsdM1Vars {
  FieldElem a, c;
  CycloElem nu;  // e^{+-i pi/4}
  int chi0 = 1;
  CycloElem omega0{1};
};

Residuals nsd_residuals_m1(const NsdM1Vars& v);
GaugeNSD nsd_expand_m1(const NsdM1Vars& v);

// B, D, A^, C^, D^ from A and B^ from C.
void nsd_fill(GaugeNSD& g);
Residuals nsd_symmetry_check(const GaugeNSD& g);

SolveOutcome nsd_classify_m1();

enum class NsdCase { kOppositeChi, kEqualChi };

// Per-tuple certificate for the a3 system.
struct A3Certificate {
  int chi0 = 1;
  int nu_sign = 1;  // nu = e^{nu_sign i pi/4}
  int w0 = 0, w1 = 0;  // omega_i = e^{2 pi i w_i / 3}
  bool inconsistent = false;
  std::string kind;  // "determinant", "parallel", "norm", or "" when unresolved
  FieldElem witness;  // mismatched constant or norm excess
};

struct NsdM2Report {
  SolveOutcome outcome;
  std::vector<A3Certificate> displayed;  // the system as written in the equal-chi argument
  std::vector<A3Certificate> rederived;  // re-derived from the trace identity plus symmetry
};

NsdM2Report nsd_classify_m2_detail(NsdCase which);
SolveOutcome nsd_classify_m2(NsdCase which);

struct KCase {
  int k;
  long sum_p2, sum_q2, sum_pq;
  bool possible;
};

struct NsdCentre {
  FieldElem trace_phi;
  std::array<FieldElem, 2> eigenvalues;
  int k = -1;
  std::vector<KCase> k_cases;
  std::vector<std::string> trace;
};
NsdCentre centre_nsd_constraints();

}  // namespace z2q
