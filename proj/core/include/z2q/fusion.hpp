#pragma once

#include <array>
#include <string>
#include <vector>

#include "z2q/quad.hpp"

namespace z2q {

// label order 1, rho, alpha rho, alpha
enum Label : int { kOne = 0, kRho = 1, kAlphaRho = 2, kAlpha = 3 };
inline constexpr int kRank = 4;
const char* label_name(int a);

using FusionTensor = std::array<std::array<std::array<int, kRank>, kRank>, kRank>;
using IntMatrix = std::array<std::array<long, kRank>, kRank>;

struct FusionRing {
  bool selfdual = true;
  int m = 0, n = 0;
  FusionTensor N{};  // N[a][b][c]: multiplicity of c in a (x) b
  std::array<int, kRank> dual{};

  IntMatrix fusion_matrix(int a) const;  // (L_a)[c][b] = N[a][b][c]
};

struct AxiomCheck {
  bool ok = true;
  std::string violation;  // first failing identity
};

struct Character {
  std::array<QuadElem, kRank> values;
  int alpha_sign() const;
};

struct CodegreeSet {
  std::array<QuadElem, 4> f;
  QuadElem gamma, gamma_bar;
};

FusionRing build_ring(bool selfdual, int m, int n);
AxiomCheck verify_axioms(const FusionRing& ring);

// d = (m + n + sqrt(4 + (m+n)^2)) / 2
QuadElem fp_dim(const FusionRing& ring);
// exact check that (1, d, d, 1) is a positive eigenvector of L_rho with eigenvalue d
bool fp_dim_is_perron(const FusionRing& ring);
QuadElem global_dim(const FusionRing& ring);

// chi_0..chi_3: (chi(alpha), root) = (+1, +), (+1, -), (-1, +), (-1, -)
std::vector<Character> characters(const FusionRing& ring);
CodegreeSet formal_codegrees(const FusionRing& ring);
// R = sum_x L_x L_{x*}
IntMatrix codegree_operator(const FusionRing& ring);
// characteristic polynomial of an integer matrix, constant term first
std::vector<Rational> char_poly(const IntMatrix& m);

// r = sqrt((4 + (m+n)^2) / (4 + (m-n)^2)), as p + q sqrt(t)
QuadElem r_parameter(int m, int n);

}  // namespace z2q
