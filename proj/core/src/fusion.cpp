#include "z2q/fusion.hpp"

#include <stdexcept>

namespace z2q {

namespace {

// label <-> alpha^a rho^b
int label_of(int a, int b) {
  static const int table[2][2] = {{kOne, kRho}, {kAlpha, kAlphaRho}};
  return table[a & 1][b];
}
int alpha_part(int x) { return (x == kAlpha || x == kAlphaRho) ? 1 : 0; }
int rho_part(int x) { return (x == kRho || x == kAlphaRho) ? 1 : 0; }

std::string triple(int a, int b, int c) {
  return std::string("(") + label_name(a) + "," + label_name(b) + "," + label_name(c) + ")";
}

}  // namespace

const char* label_name(int a) {
  static const char* names[] = {"1", "rho", "alpha*rho", "alpha"};
  return names[a];
}

int Character::alpha_sign() const { return sgn(values[kAlpha].p()); }

IntMatrix FusionRing::fusion_matrix(int a) const {
  IntMatrix L{};
  for (int b = 0; b < kRank; ++b)
    for (int c = 0; c < kRank; ++c) L[c][b] = N[a][b][c];
  return L;
}

FusionRing build_ring(bool selfdual, int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("multiplicities must be nonnegative");
  FusionRing R;
  R.selfdual = selfdual;
  R.m = m;
  R.n = n;
  for (int x = 0; x < kRank; ++x)
    for (int y = 0; y < kRank; ++y) {
      int a = alpha_part(x) + alpha_part(y);
      int b = rho_part(x) + rho_part(y);
      if (b < 2) {
        R.N[x][y][label_of(a, b)] += 1;
        continue;
      }
      // alpha^a rho^2
      R.N[x][y][label_of(selfdual ? a : a + 1, 0)] += 1;
      R.N[x][y][label_of(a, 1)] += m;
      R.N[x][y][label_of(a + 1, 1)] += n;
    }
  R.dual = {kOne, kRho, kAlphaRho, kAlpha};
  if (!selfdual) std::swap(R.dual[kRho], R.dual[kAlphaRho]);
  return R;
}

AxiomCheck verify_axioms(const FusionRing& R) {
  auto fail = [](std::string s) { return AxiomCheck{false, std::move(s)}; };
  for (int b = 0; b < kRank; ++b)
    for (int c = 0; c < kRank; ++c)
      if (R.N[kOne][b][c] != (b == c ? 1 : 0)) return fail("unit " + triple(kOne, b, c));
  for (int a = 0; a < kRank; ++a) {
    if (R.dual[R.dual[a]] != a) return fail(std::string("dual is not an involution at ") + label_name(a));
    for (int b = 0; b < kRank; ++b)
      if (R.N[a][b][kOne] != (b == R.dual[a] ? 1 : 0)) return fail("duality " + triple(a, b, kOne));
  }
  for (int a = 0; a < kRank; ++a)
    for (int b = 0; b < kRank; ++b)
      for (int c = 0; c < kRank; ++c) {
        if (R.N[a][b][c] < 0) return fail("negative multiplicity " + triple(a, b, c));
        if (R.N[a][b][c] != R.N[b][a][c]) return fail("commutativity " + triple(a, b, c));
      }
  for (int a = 0; a < kRank; ++a)
    for (int b = 0; b < kRank; ++b)
      for (int c = 0; c < kRank; ++c)
        for (int d = 0; d < kRank; ++d) {
          long lhs = 0, rhs = 0;
          for (int e = 0; e < kRank; ++e) {
            lhs += long(R.N[a][b][e]) * R.N[e][c][d];
            rhs += long(R.N[b][c][e]) * R.N[a][e][d];
          }
          if (lhs != rhs)
            return fail("associativity (" + std::string(label_name(a)) + "," + label_name(b) + "," + label_name(c) +
                        "," + label_name(d) + ")");
        }
  for (int a = 0; a < kRank; ++a)
    for (int b = 0; b < kRank; ++b)
      for (int c = 0; c < kRank; ++c)
        if (R.N[a][b][c] != R.N[R.dual[a]][c][b]) return fail("Frobenius reciprocity " + triple(a, b, c));
  return {};
}

QuadElem fp_dim(const FusionRing& R) {
  int s = R.m + R.n;
  return (QuadElem(s) + QuadElem::sqrt_of(4 + std::int64_t(s) * s)) * QuadElem(frac(1, 2));
}

bool fp_dim_is_perron(const FusionRing& R) {
  QuadElem d = fp_dim(R);
  std::array<QuadElem, kRank> v{QuadElem(1), d, d, QuadElem(1)};
  for (int b = 0; b < kRank; ++b) {
    QuadElem acc;
    for (int c = 0; c < kRank; ++c) acc = acc + QuadElem(long(R.N[kRho][b][c])) * v[c];
    if (acc != d * v[b]) return false;
  }
  return true;
}

QuadElem global_dim(const FusionRing& R) { return QuadElem(4) + QuadElem(2L * (R.m + R.n)) * fp_dim(R); }

std::vector<Character> characters(const FusionRing& R) {
  std::vector<Character> out;
  for (int eps : {1, -1}) {
    std::int64_t c = R.m + eps * R.n;
    // chi(rho)^2 = chi(rho^2) = [1 or alpha] + c chi(rho)
    std::int64_t unit = R.selfdual ? 1 : eps;
    QuadElem root = QuadElem::sqrt_of(c * c + 4 * unit);
    for (int sign : {1, -1}) {
      QuadElem x = (QuadElem(Rational(c)) + QuadElem(sign) * root) * QuadElem(frac(1, 2));
      Character ch;
      ch.values = {QuadElem(1), x, QuadElem(eps) * x, QuadElem(eps)};
      out.push_back(ch);
    }
  }
  return out;
}

IntMatrix codegree_operator(const FusionRing& R) {
  IntMatrix acc{};
  for (int x = 0; x < kRank; ++x) {
    IntMatrix A = R.fusion_matrix(x), B = R.fusion_matrix(R.dual[x]);
    for (int i = 0; i < kRank; ++i)
      for (int j = 0; j < kRank; ++j)
        for (int k = 0; k < kRank; ++k) acc[i][j] += A[i][k] * B[k][j];
  }
  return acc;
}

QuadElem r_parameter(int m, int n) {
  std::int64_t S = 4 + std::int64_t(m + n) * (m + n);
  std::int64_t Sp = 4 + std::int64_t(m - n) * (m - n);
  return QuadElem::sqrt_of(S * Sp) * QuadElem(frac(1, Sp));
}

CodegreeSet formal_codegrees(const FusionRing& R) {
  AxiomCheck ax = verify_axioms(R);
  if (!ax.ok) throw std::domain_error("formal codegrees need a fusion ring: " + ax.violation);
  CodegreeSet out;
  auto chars = characters(R);
  for (int k = 0; k < 4; ++k) {
    QuadElem f;
    for (const auto& v : chars[k].values) f = f + v * v.conj();
    out.f[k] = f;
  }
  QuadElem r = r_parameter(R.m, R.n);
  QuadElem s(frac(R.m + R.n, 2));
  QuadElem shift = r * QuadElem(frac(R.m - R.n, 2));
  out.gamma = s + shift;
  out.gamma_bar = s - shift;
  return out;
}

std::vector<Rational> char_poly(const IntMatrix& A) {
  const int n = kRank;
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  std::array<std::array<Rational, kRank>, kRank> M{};  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    std::array<std::array<Rational, kRank>, kRank> next{};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational s = 0;
        for (int t = 0; t < n; ++t) s += Rational(A[i][t]) * M[t][j];
        if (i == j) s += c[n - k + 1];
        next[i][j] = s;
      }
    M = next;
    Rational tr = 0;
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t) tr += Rational(A[i][t]) * M[t][i];
    c[n - k] = -tr / k;
  }
  return c;
}

}  // namespace z2q
