#include <doctest.h>

#include "oracles.hpp"
#include "z2q/fusion.hpp"

using namespace z2q;

namespace {

QuadElem eval(const std::vector<long long>& c, const QuadElem& x) {
  QuadElem acc;
  for (size_t k = c.size(); k-- > 0;) acc = acc * x + QuadElem(static_cast<long>(c[k]));
  return acc;
}

}  // namespace

TEST_SUITE("fusion") {

TEST_CASE("non-self-dual rings need m = n") {
  CHECK_FALSE(verify_axioms(build_ring(false, 2, 1)).ok);
  CHECK_FALSE(verify_axioms(build_ring(false, 0, 1)).ok);
  CHECK(verify_axioms(build_ring(false, 3, 3)).ok);
  CHECK_THROWS(formal_codegrees(build_ring(false, 2, 1)));
}

TEST_CASE("every ring with m + n <= 20 is associative with a Perron eigenvector") {
  for (bool sd : {true, false})
    for (int s = 0; s <= 20; ++s)
      for (int m = 0; m <= s; ++m) {
        if (!sd && 2 * m != s) continue;
        FusionRing R = build_ring(sd, m, s - m);
        CAPTURE(sd);
        CAPTURE(m);
        CAPTURE(s - m);
        CHECK(verify_axioms(R).ok);
        CHECK(oracle::associative(R.N));
        CHECK(fp_dim_is_perron(R));
      }
}

TEST_CASE("fusion matrices transpose the tensor") {
  FusionRing R = build_ring(true, 2, 3);
  for (int a = 0; a < kRank; ++a) {
    IntMatrix L = R.fusion_matrix(a);
    for (int b = 0; b < kRank; ++b)
      for (int c = 0; c < kRank; ++c) CHECK(L[c][b] == R.N[a][b][c]);
  }
  CHECK(R.N[kRho][kRho][kRho] == 2);
  CHECK(R.N[kRho][kRho][kAlphaRho] == 3);
}

TEST_CASE("formal codegrees of SD(2,2) and SD(1,1)") {
  CodegreeSet f = formal_codegrees(build_ring(true, 2, 2));
  CHECK(f.f[0] == QuadElem(20, 8, 5));
  CHECK(f.f[1] == QuadElem(20, -8, 5));
  CHECK(f.f[2] == QuadElem(4));
  CHECK(f.f[3] == QuadElem(4));
  FusionRing R = build_ring(true, 2, 2);
  QuadElem dim = global_dim(R);
  CHECK(dim / f.f[0] == QuadElem(1));
  CHECK(dim / f.f[1] == QuadElem(9, 4, 5));
  CHECK(dim / f.f[2] == QuadElem(5, 2, 5));
  CHECK(dim / f.f[3] == QuadElem(5, 2, 5));

  CodegreeSet g = formal_codegrees(build_ring(true, 1, 1));
  CHECK(g.f[0] == QuadElem(8, 4, 2));
  CHECK(g.f[1] == QuadElem(8, -4, 2));
  CHECK(g.f[2] == QuadElem(4));
  CHECK(g.f[3] == QuadElem(4));

  CodegreeSet z = formal_codegrees(build_ring(true, 0, 0));
  for (const auto& x : z.f) CHECK(x == QuadElem(4));
}

TEST_CASE("codegrees are roots of the codegree operator and sum to one in reciprocal") {
  for (bool sd : {true, false})
    for (int s = 0; s <= 20; ++s)
      for (int m = 0; m <= s; ++m) {
        if (!sd && 2 * m != s) continue;
        FusionRing R = build_ring(sd, m, s - m);
        CodegreeSet f = formal_codegrees(R);
        auto cp = oracle::charpoly(codegree_operator(R));
        QuadElem recip;
        for (const auto& x : f.f) {
          CHECK(eval(cp, x).is_zero());
          recip = recip + x.inverse();
        }
        CHECK(recip == QuadElem(1));
        CHECK(f.f[0] == global_dim(R));
      }
}

TEST_CASE("characters are ring homomorphisms") {
  for (bool sd : {true, false})
    for (auto [m, n] : {std::pair{0, 0}, {0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 7}, {5, 5}}) {
      if (!sd && m != n) continue;
      FusionRing R = build_ring(sd, m, n);
      auto chars = characters(R);
      REQUIRE(chars.size() == 4);
      for (const auto& ch : chars) {
        CHECK(ch.values[kOne] == QuadElem(1));
        for (int a = 0; a < kRank; ++a)
          for (int b = 0; b < kRank; ++b) {
            QuadElem rhs;
            for (int c = 0; c < kRank; ++c) rhs = rhs + QuadElem(static_cast<long>(R.N[a][b][c])) * ch.values[c];
            CHECK(ch.values[a] * ch.values[b] == rhs);
          }
      }
    }
}

TEST_CASE("non-self-dual characters take the values +-i") {
  auto chars = characters(build_ring(false, 2, 2));
  int found = 0;
  for (const auto& ch : chars)
    for (const auto& v : ch.values)
      if (v == QuadElem(0, 1, -1) || v == QuadElem(0, -1, -1)) ++found;
  CHECK(found == 4);
}

TEST_CASE("Perron dimension and r parameter") {
  CHECK(fp_dim(build_ring(true, 2, 2)) == QuadElem(2, 1, 5));
  CHECK(fp_dim(build_ring(true, 0, 0)) == QuadElem(1));
  CHECK(fp_dim(build_ring(true, 1, 0)) == QuadElem(frac(1, 2), frac(1, 2), 5));
  // r^2 = (4 + (m+n)^2)/(4 + (m-n)^2)
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) {
      QuadElem r = r_parameter(m, n);
      CHECK(r * r == QuadElem(frac(4 + (m + n) * (m + n), 4 + (m - n) * (m - n))));
    }
}

}  // TEST_SUITE
