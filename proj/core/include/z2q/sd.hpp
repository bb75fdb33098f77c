#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "z2q/gauge.hpp"

namespace z2q {

// Free variables for R(2) with lambda_alpha = 1. The a's and d0..d3 are real.
struct SdPlusVars {
  FieldElem a0, a1, a2, ah0, ah1, ah2;
  FieldElem d0, d1, d2, d3, d4;
  CycloElem omega_one0{1}, omega_one1{1}, omega_alpha0{1}, omega_alpha1{1};
};

// Free variables for R(2) with lambda_alpha = -1 (lambda_rho = 1).
struct SdMinusVars {
  FieldElem r, a1, ah1, d0, d1, d2;
  CycloElem omega0{1};
};

GaugeSD sd_reduced_expand(const SdPlusVars& v);
GaugeSD sd_reduced_expand(const SdMinusVars& v);

// B, C, B^, C^, D^ from D.
void sd_fill_from_d(GaugeSD& g);

// One relation X[idx] = coeff * op(X[idx']) where op is conjugation or the
// identity.
struct SymStep {
  std::array<int, 4> target;
  CycloElem coeff;
  bool conj;
};
struct SymRelation {
  std::string id;
  std::string tensor;  // "A", "A_hat" or "D"
  int order;
  SymStep (*step)(const GaugeSD&, const std::string& tensor, const std::array<int, 4>& idx);
};
const std::vector<SymRelation>& sd_relations();

Residuals sd_symmetry_check(const GaugeSD& g);
// composing each relation with itself `order` times must give the identity
Residuals sd_symmetry_idempotence(const GaugeSD& g);
// sign/involution constraints under which the relations are stated
bool sd_parameters_admissible(const GaugeSD& g);

Residuals sd_residuals(int lambda_alpha, const GaugeSD& g);
FieldElem nu4_sd(const GaugeSD& g);

struct PhiPsi {
  std::array<std::array<FieldElem, 2>, 2> phi, psi;
  bool phi_ok = false, psi_ok = false;
};
PhiPsi sd_phi_psi(const GaugeSD& g);
// eigenvalues of a 2x2 matrix lie in {(3-sqrt5)/2, (1-sqrt5)/2}
bool phi_eigenvalues_allowed(const std::array<std::array<FieldElem, 2>, 2>& m);

struct AlphaDims {
  std::array<std::optional<FieldElem>, 4> dims;  // nullopt: zero denominator
  std::array<bool, 4> admissible{};
  bool two_invertible_lifts = false;
  bool all_admissible = false;
};
AlphaDims center_alpha_dims(int a, int lambda_alpha, int mu);

GaugeSD gauge_act(const GaugeSD& g, const CycloElem& z1, const CycloElem& z2);

SolveOutcome sd_classify(int lambda_alpha);

}  // namespace z2q
