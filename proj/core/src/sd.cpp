#include "z2q/sd.hpp"

#include <stdexcept>

#include "z2q/algint.hpp"
#include "z2q/bounds.hpp"
#include "z2q/quad.hpp"

namespace z2q {

namespace {

using Idx = std::array<int, 4>;

CycloElem sgn(int lam, int e) { return (lam == 1 || e % 2 == 0) ? CycloElem(1) : CycloElem(-1); }
CycloElem neg1(int e) { return sgn(-1, e); }
CycloElem sqrt_la(const GaugeSD& g) { return g.lambda_alpha == 1 ? CycloElem(1) : cyc::i(); }

bool is_cube_root_of_unity(const CycloElem& w) { return w.pow(3) == CycloElem(1); }

CycloElem s5() { return cyc::sqrt5(); }
CycloElem q(long a, long b) { return CycloElem(frac(a, b)); }

const Tensor4& tensor_of(const GaugeSD& g, const std::string& name) {
  if (name == "A") return g.A;
  if (name == "A_hat") return g.A_hat;
  if (name == "D") return g.D;
  if (name == "B") return g.B;
  if (name == "C") return g.C;
  if (name == "B_hat") return g.B_hat;
  if (name == "C_hat") return g.C_hat;
  return g.D_hat;
}

const std::vector<CycloElem>& omega_for(const GaugeSD& g, const std::string& t) {
  return t == "A" ? g.omega_one : g.omega_alpha;
}
const std::vector<int>& tilde_for(const GaugeSD& g, const std::string& t) {
  return t == "A" ? g.tilde_one : g.tilde_alpha;
}

SymStep a_rot1(const GaugeSD& g, const std::string& t, const Idx& x) {
  auto& w = omega_for(g, t);
  auto& tl = tilde_for(g, t);
  auto [i, j, k, l] = x;
  return {{j, tl[k], tl[i], l}, sgn(g.lambda_rho, 1 + i + k) * w[l], false};
}
SymStep a_rot2(const GaugeSD& g, const std::string& t, const Idx& x) {
  auto& w = omega_for(g, t);
  auto& tl = tilde_for(g, t);
  auto [i, j, k, l] = x;
  return {{tl[k], i, tl[j], l}, sgn(g.lambda_rho, 1 + j + k) * w[l] * w[l], false};
}
SymStep a_flip1(const GaugeSD& g, const std::string& t, const Idx& x) {
  auto& w = omega_for(g, t);
  auto& tl = tilde_for(g, t);
  auto [i, j, k, l] = x;
  return {{tl[k], tl[l], tl[i], tl[j]}, w[k] * w[i] * w[i], false};
}
SymStep a_flip2(const GaugeSD& g, const std::string& t, const Idx& x) {
  auto& tl = tilde_for(g, t);
  auto [i, j, k, l] = x;
  return {{k, tl[j], i, tl[l]}, sgn(g.lambda_rho, j + l), true};
}
SymStep d_flip1(const GaugeSD& g, const std::string&, const Idx& x) {
  auto& tl = g.tilde_alpha;
  auto [i, j, k, l] = x;
  return {{k, tl[j], i, tl[l]}, sgn(g.lambda_rho, j + l), true};
}
SymStep d_flip2(const GaugeSD& g, const std::string&, const Idx& x) {
  auto& tl = g.tilde_alpha;
  auto& wa = g.omega_alpha;
  auto [i, j, k, l] = x;
  return {{tl[k], tl[l], tl[i], tl[j]},
          CycloElem(g.lambda_alpha) * neg1(j + l) * wa[k] * wa[i] * wa[i], false};
}
SymStep d_flip3(const GaugeSD& g, const std::string&, const Idx& x) {
  auto& tl = g.tilde_alpha;
  auto& wa = g.omega_alpha;
  auto [i, j, k, l] = x;
  return {{tl[i], l, tl[k], j},
          sgn(g.lambda_rho, i + k) * CycloElem(g.lambda_alpha) * neg1(j + l) * wa[k] * wa[i] * wa[i],
          true};
}

std::string idx_str(const Idx& x) {
  return std::to_string(x[0]) + std::to_string(x[1]) + std::to_string(x[2]) + std::to_string(x[3]);
}

template <class F>
void for_each_index(int m, F f) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) f(Idx{i, j, k, l});
}

FieldElem at(const Tensor4& t, const Idx& x) { return t.at(x[0], x[1], x[2], x[3]); }

void require_real(const FieldElem& x, const char* name) {
  if (x.conj() != x) throw std::invalid_argument(std::string(name) + " must be real");
}

void require_omega(const CycloElem& w, const char* name) {
  if (!is_cube_root_of_unity(w)) throw std::invalid_argument(std::string(name) + " must be a cube root of unity");
}

GaugeSD base_gauge(int lambda_alpha) {
  GaugeSD g;
  g.m = 2;
  g.lambda_alpha = lambda_alpha;
  g.lambda_rho = 1;
  g.mu = 1;
  CycloElem s = lambda_alpha == 1 ? CycloElem(1) : cyc::i();
  g.chi_one = {s, -s};
  g.chi_alpha = {CycloElem(1), CycloElem(-1)};
  if (lambda_alpha == 1) {
    g.tilde_one = g.tilde_alpha = {0, 1};
  } else {
    g.tilde_one = g.tilde_alpha = {1, 0};
  }
  return g;
}

using Mat = std::array<std::array<FieldElem, 2>, 2>;

}  // namespace

void sd_fill_from_d(GaugeSD& g) {
  const int m = g.m;
  const auto& t = g.tilde_one;
  const auto& w = g.omega_one;
  const auto& wa = g.omega_alpha;
  const CycloElem la(g.lambda_alpha);
  const CycloElem sl = sqrt_la(g);
  g.B = g.C = g.B_hat = g.C_hat = g.D_hat = Tensor4(m);
  for_each_index(m, [&](const Idx& x) {
    auto [i, j, k, l] = x;
    g.B.at(i, j, k, l) = FieldElem(sgn(g.lambda_rho, 1 + i + k) * la * sl * neg1(l) * w[l]) * g.D.at(j, t[k], t[i], l);
    g.C.at(i, j, k, l) =
        FieldElem(sgn(g.lambda_rho, 1 + j + k) * la * sl * neg1(l) * w[l] * w[l]) * g.D.at(t[k], i, t[j], l);
    g.B_hat.at(i, j, k, l) = FieldElem(sgn(g.lambda_rho, 1 + j + l) * la * sl * neg1(i) * w[j] * w[i] * w[i] * wa[l]) *
                             g.D.at(t[l], i, k, t[j]);
    g.C_hat.at(i, j, k, l) =
        FieldElem(sgn(g.lambda_rho, 1 + j + k) * sl * neg1(k) * w[k] * w[j] * w[j] * wa[i]) * g.D.at(i, t[k], l, t[j]);
    g.D_hat.at(i, j, k, l) =
        FieldElem(sl * neg1(k + j) * w[i] * w[k] * w[k] * wa[l] * wa[j] * wa[j]) * g.D.at(j, i, l, k);
  });
}

const std::vector<SymRelation>& sd_relations() {
  static const std::vector<SymRelation> rels = {
      {"A.rot1", "A", 3, a_rot1},           {"A.rot2", "A", 3, a_rot2},
      {"A.flip1", "A", 2, a_flip1},         {"A.flip2", "A", 2, a_flip2},
      {"A_hat.rot1", "A_hat", 3, a_rot1},   {"A_hat.rot2", "A_hat", 3, a_rot2},
      {"A_hat.flip1", "A_hat", 2, a_flip1}, {"A_hat.flip2", "A_hat", 2, a_flip2},
      {"D.flip1", "D", 2, d_flip1},         {"D.flip2", "D", 2, d_flip2},
      {"D.flip3", "D", 2, d_flip3},
  };
  return rels;
}

GaugeSD sd_reduced_expand(const SdPlusVars& v) {
  require_omega(v.omega_one0, "omega_one0");
  require_omega(v.omega_one1, "omega_one1");
  require_omega(v.omega_alpha0, "omega_alpha0");
  require_omega(v.omega_alpha1, "omega_alpha1");
  for (auto [x, n] : {std::pair{&v.a0, "a0"}, {&v.a1, "a1"}, {&v.a2, "a2"}, {&v.ah0, "ah0"}, {&v.ah1, "ah1"},
                      {&v.ah2, "ah2"}, {&v.d0, "d0"}, {&v.d1, "d1"}, {&v.d2, "d2"}, {&v.d3, "d3"}})
    require_real(*x, n);
  const CycloElem one(1);
  if (!v.a0.is_zero() && v.omega_one0 != one) throw std::invalid_argument("a0 != 0 forces omega_one0 = 1");
  if (!v.a1.is_zero() && v.omega_one1 != one) throw std::invalid_argument("a1 != 0 forces omega_one1 = 1");
  if (!v.ah0.is_zero() && v.omega_alpha0 != one) throw std::invalid_argument("ah0 != 0 forces omega_alpha0 = 1");
  if (!v.ah1.is_zero() && v.omega_alpha1 != one) throw std::invalid_argument("ah1 != 0 forces omega_alpha1 = 1");
  if (!v.a2.is_zero() && v.omega_one0 != v.omega_one1)
    throw std::invalid_argument("a2 != 0 forces omega_one0 = omega_one1");
  if (!v.ah2.is_zero() && v.omega_alpha0 != v.omega_alpha1)
    throw std::invalid_argument("ah2 != 0 forces omega_alpha0 = omega_alpha1");

  GaugeSD g = base_gauge(1);
  g.omega_one = {v.omega_one0, v.omega_one1};
  g.omega_alpha = {v.omega_alpha0, v.omega_alpha1};
  const FieldElem z;
  const FieldElem w(v.omega_one0), w2(v.omega_one0 * v.omega_one0);
  const FieldElem u(v.omega_alpha0), u2(v.omega_alpha0 * v.omega_alpha0);
  g.A = Tensor4::from_matrix({{v.a0, z, z, w * v.a2}, {z, v.a2, w2 * v.a2, z}, {z, w2 * v.a2, v.a2, z}, {w * v.a2, z, z, v.a1}});
  g.A_hat = Tensor4::from_matrix(
      {{v.ah0, z, z, u * v.ah2}, {z, v.ah2, u2 * v.ah2, z}, {z, u2 * v.ah2, v.ah2, z}, {u * v.ah2, z, z, v.ah1}});
  const FieldElem r10(v.omega_alpha1 / v.omega_alpha0), r01(v.omega_alpha0 / v.omega_alpha1);
  const FieldElem d4b = v.d4.conj();
  g.D = Tensor4::from_matrix(
      {{v.d0, z, z, -(r10 * d4b)}, {z, v.d2, v.d4, z}, {z, -(r01 * v.d4), v.d3, z}, {d4b, z, z, v.d1}});
  sd_fill_from_d(g);
  return g;
}

GaugeSD sd_reduced_expand(const SdMinusVars& v) {
  require_omega(v.omega0, "omega0");
  require_real(v.r, "r");
  if ((!v.a1.is_zero() || !v.ah1.is_zero()) && v.omega0 != CycloElem(1))
    throw std::invalid_argument("a1 or ah1 != 0 forces omega0 = 1");
  GaugeSD g = base_gauge(-1);
  const CycloElem w = v.omega0, w2 = v.omega0 * v.omega0;
  g.omega_one = {w, w};
  g.omega_alpha = {w2, w2};
  const FieldElem z;
  const FieldElem wr = FieldElem(w) * v.r, w2r = FieldElem(w2) * v.r;
  g.A = Tensor4::from_matrix({{wr, z, z, v.a1.conj()}, {z, w2r, v.r, z}, {z, v.r, w2r, z}, {v.a1, z, z, wr}});
  g.A_hat = Tensor4::from_matrix({{w2r, z, z, v.ah1.conj()}, {z, wr, v.r, z}, {z, v.r, wr, z}, {v.ah1, z, z, w2r}});
  const FieldElem d0b = v.d0.conj();
  g.D = Tensor4::from_matrix(
      {{v.d0, z, z, v.d2.conj()}, {z, d0b, v.d1, z}, {z, v.d1.conj(), -d0b, z}, {v.d2, z, z, -v.d0}});
  sd_fill_from_d(g);
  return g;
}

Residuals sd_symmetry_check(const GaugeSD& g) {
  Residuals res;
  res.system_name = "symmetry";
  const int m = g.m;
  for (const auto& rel : sd_relations()) {
    const Tensor4& t = tensor_of(g, rel.tensor);
    for_each_index(m, [&](const Idx& x) {
      SymStep s = rel.step(g, rel.tensor, x);
      FieldElem rhs = at(t, s.target);
      if (s.conj) rhs = rhs.conj();
      res.add(rel.id + "[" + idx_str(x) + "]", rel.tensor + "[" + idx_str(x) + "] = c * " + (s.conj ? "conj " : "") +
                                                   rel.tensor + "[" + idx_str(s.target) + "]",
              at(t, x), FieldElem(s.coeff) * rhs);
    });
  }
  GaugeSD h = g;
  sd_fill_from_d(h);
  for (const char* name : {"B", "C", "B_hat", "C_hat", "D_hat"}) {
    const Tensor4& have = tensor_of(g, name);
    const Tensor4& want = tensor_of(h, name);
    for_each_index(m, [&](const Idx& x) {
      res.add(std::string(name) + ".from_D[" + idx_str(x) + "]", std::string(name) + " in terms of D", at(have, x),
              at(want, x));
    });
  }
  for (const char* name : {"A", "A_hat", "D"}) {
    const Tensor4& t = tensor_of(g, name);
    for_each_index(m, [&](const Idx& x) {
      if ((x[0] + x[1] + x[2] + x[3]) % m == 0) return;
      res.add(std::string(name) + ".vanish[" + idx_str(x) + "]", "entry vanishes off the parity lattice", at(t, x),
              FieldElem(0));
    });
  }
  return res;
}

Residuals sd_symmetry_idempotence(const GaugeSD& g) {
  Residuals res;
  res.system_name = "symmetry-idempotence";
  for (const auto& rel : sd_relations()) {
    for_each_index(g.m, [&](const Idx& x) {
      Idx cur = x;
      CycloElem c(1);
      bool conj = false;
      for (int s = 0; s < rel.order; ++s) {
        SymStep st = rel.step(g, rel.tensor, cur);
        c = c * (conj ? st.coeff.conj() : st.coeff);
        conj = conj != st.conj;
        cur = st.target;
      }
      std::string id = rel.id + "^" + std::to_string(rel.order) + "[" + idx_str(x) + "]";
      if (cur != x || conj) {
        res.add(id, "composition does not return to the same entry", FieldElem(1), FieldElem(0));
      } else {
        res.add(id, "accumulated coefficient = 1", FieldElem(c), FieldElem(1));
      }
    });
  }
  return res;
}

bool sd_parameters_admissible(const GaugeSD& g) {
  if (g.m != 2) return false;
  if (g.lambda_alpha != 1 && g.lambda_alpha != -1) return false;
  if (g.lambda_rho != 1 && g.lambda_rho != -1) return false;
  if (g.mu != 1) return false;
  for (int i = 0; i < 2; ++i) {
    if (g.chi_one[i] * g.chi_one[i] != CycloElem(g.lambda_alpha)) return false;
    if (g.chi_alpha[i] * g.chi_alpha[i] != CycloElem(1)) return false;
    if (!is_cube_root_of_unity(g.omega_one[i]) || !is_cube_root_of_unity(g.omega_alpha[i])) return false;
  }
  if (g.lambda_alpha == 1) {
    return g.tilde_one == std::vector<int>{0, 1} && g.tilde_alpha == std::vector<int>{0, 1} && g.lambda_rho == 1;
  }
  return g.tilde_one == std::vector<int>{1, 0} && g.tilde_alpha == std::vector<int>{1, 0} &&
         g.omega_one[0] == g.omega_one[1] && g.omega_alpha[0] == g.omega_alpha[1];
}

Residuals sd_residuals(int lambda_alpha, const GaugeSD& g) {
  if (g.m != 2) throw std::invalid_argument("sd_residuals: m must be 2");
  Residuals res;
  const Num rt5 = FieldElem(s5());
  if (lambda_alpha == 1) {
    res.system_name = "R(2), lambda_alpha = 1";
    const Num a0 = g.A.cell(0, 0), a1 = g.A.cell(3, 3), a2 = g.A.cell(1, 1);
    const Num h0 = g.A_hat.cell(0, 0), h1 = g.A_hat.cell(3, 3), h2 = g.A_hat.cell(1, 1);
    const Num d0 = g.D.cell(0, 0), d1 = g.D.cell(3, 3), d2 = g.D.cell(1, 1), d3 = g.D.cell(2, 2);
    const Num d4 = g.D.cell(1, 2), d4b = d4.conj();
    const CycloElem u0 = g.omega_alpha[0], u1 = g.omega_alpha[1];
    const Num n4 = d4.abs2();
    const Num c1 = Num(3L) - rt5, c3 = Num(2L) - rt5, half = FieldElem(q(1, 2));
    res.add("coef1.1", "a0^2 + a2^2 + d0^2 + d3^2 = 3 - sqrt5", a0 * a0 + a2 * a2 + d0 * d0 + d3 * d3, c1);
    res.add("coef1.2", "a1^2 + a2^2 + d1^2 + d2^2 = 3 - sqrt5", a1 * a1 + a2 * a2 + d1 * d1 + d2 * d2, c1);
    res.add("coef1.3", "ah0^2 + ah2^2 + d0^2 + d2^2 = 3 - sqrt5", h0 * h0 + h2 * h2 + d0 * d0 + d2 * d2, c1);
    res.add("coef1.4", "ah1^2 + ah2^2 + d1^2 + d3^2 = 3 - sqrt5", h1 * h1 + h2 * h2 + d1 * d1 + d3 * d3, c1);
    res.add("coef2.1", "a2^2 + |d4|^2 = 1/2", a2 * a2 + n4, half);
    res.add("coef2.2", "ah2^2 + |d4|^2 = 1/2", h2 * h2 + n4, half);
    res.add("coef2.3", "d0^2 + |d4|^2 = 1/2", d0 * d0 + n4, half);
    res.add("coef2.4", "d1^2 + |d4|^2 = 1/2", d1 * d1 + n4, half);
    res.add("coef2.5", "d2^2 + |d4|^2 = 1/2", d2 * d2 + n4, half);
    res.add("coef2.6", "d3^2 + |d4|^2 = 1/2", d3 * d3 + n4, half);
    res.add("coef3.1", "(a0 + a1) a2 - d0 d2 - d1 d3 = 2 - sqrt5", (a0 + a1) * a2 - d0 * d2 - d1 * d3, c3);
    res.add("coef3.2", "(ah0 + ah1) ah2 + d0 d3 + d1 d2 = 2 - sqrt5", (h0 + h1) * h2 + d0 * d3 + d1 * d2, c3);
    res.add("coef4.1", "a0 + a2 + d0 + d3 = 2 - sqrt5", a0 + a2 + d0 + d3, c3);
    res.add("coef4.2", "a1 + a2 - d1 - d2 = 2 - sqrt5", a1 + a2 - d1 - d2, c3);
    res.add("coef4.3", "ah0 + ah2 + d0 - d2 = 2 - sqrt5", h0 + h2 + d0 - d2, c3);
    res.add("coef4.4", "ah1 + ah2 - d1 + d3 = 2 - sqrt5", h1 + h2 - d1 + d3, c3);
    const Num s0 = FieldElem(u0 + u0 * u0);
    res.add("coef5.1", "(w0 + w0^2) a2^2 + w0 w1^2 d4^2 + w0^2 w1 conj(d4)^2 = 0",
            s0 * a2 * a2 + Num(FieldElem(u0 * u1 * u1)) * d4 * d4 + Num(FieldElem(u0 * u0 * u1)) * d4b * d4b, 0L);
    res.add("coef5.2", "(w0 + w0^2) ah2^2 + w0^2 w1 d4^2 + conj(d4)^2 = 0",
            s0 * h2 * h2 + Num(FieldElem(u0 * u0 * u1)) * d4 * d4 + d4b * d4b, 0L);
    res.add("coef6.1", "(1 - w0 w1^2)(d2 conj(d4) - d3^2) = 0",
            Num(FieldElem(CycloElem(1) - u0 * u1 * u1)) * (d2 * d4b - d3 * d3), 0L);
    res.add("coef6.2", "d4 (d1 + d0) - conj(d4)(w0^2 w1 d0 + w0 w1^2 d1) = 0",
            d4 * (d1 + d0) - d4b * (Num(FieldElem(u0 * u0 * u1)) * d0 + Num(FieldElem(u0 * u1 * u1)) * d1), 0L);
    Num s(0L);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) s += Num(g.D.at(0, 1, i, j)) * Num(g.D.at(i, j, 0, 1));
    res.add("cross", "sum_ij D^{01}_{ij} D^{ij}_{01} is real", s - s.conj(), 0L);
    return res;
  }
  if (lambda_alpha != -1) throw std::invalid_argument("lambda_alpha must be +-1");
  res.system_name = "R(2), lambda_alpha = -1";
  const CycloElem w = g.omega_one[0];
  const Num r = g.A.cell(1, 2), a1 = g.A.cell(3, 0), h1 = g.A_hat.cell(3, 0);
  const Num d0 = g.D.cell(0, 0), d1 = g.D.cell(1, 2), d2 = g.D.cell(3, 0);
  const Num im_d0 = (d0 - d0.conj()) * Num(FieldElem(-cyc::i() * q(1, 2)));
  const Num rhs1 = FieldElem((CycloElem(1) - s5()) * q(1, 4));
  res.add("eq1.1", "Im(d0) = (1 - sqrt5)/4", im_d0, rhs1);
  res.add("eq1.2", "(1 - sqrt5)/4 = -w^2/(1 + w^2) (sqrt5 - 1)/2", rhs1,
          FieldElem(-(w * w) / (CycloElem(1) + w * w) * (s5() - CycloElem(1)) * q(1, 2)));
  res.add("eq2", "r^2 + |d0|^2 = (3 - sqrt5)/2", r * r + d0.abs2(), FieldElem((CycloElem(3) - s5()) * q(1, 2)));
  res.add("eq3.1", "r^2 + |a1|^2 + |d1|^2 + |d2|^2 = 1", r * r + a1.abs2() + d1.abs2() + d2.abs2(), 1L);
  res.add("eq3.2", "r^2 + |ah1|^2 + |d1|^2 + |d2|^2 = 1", r * r + h1.abs2() + d1.abs2() + d2.abs2(), 1L);
  const Num half = FieldElem(q(1, 2));
  res.add("eq4.1", "|d1|^2 = 1/2 - |d0|^2", d1.abs2(), half - d0.abs2());
  res.add("eq4.2", "|d2|^2 = 1/2 - |d0|^2", d2.abs2(), half - d0.abs2());
  res.add("eq5", "(w + w^2) r^2 - (d0^2 + conj(d0)^2) = 2 - sqrt5",
          Num(FieldElem(w + w * w)) * r * r - (d0 * d0 + d0.conj() * d0.conj()), FieldElem(CycloElem(2) - s5()));
  res.add("eq6", "r a1 = d1 d2", r * a1, d1 * d2);
  res.add("eq7", "r ah1 = -conj(d1) d2", r * h1, -(d1.conj() * d2));
  res.add("eq8.1", "d2 conj(a1) + ah1 conj(d2) = 0", d2 * a1.conj() + h1 * d2.conj(), 0L);
  res.add("eq8.2", "d1 conj(a1) + conj(ah1) conj(d1) = 0", d1 * a1.conj() + h1.conj() * d1.conj(), 0L);
  return res;
}

FieldElem nu4_sd(const GaugeSD& g) {
  if (g.m != 2) throw std::invalid_argument("nu4_sd: m must be 2");
  FieldElem out = FieldElem((CycloElem(2) + s5()).inverse());
  FieldElem sa, sh;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      sa += FieldElem(g.omega_one[i] * g.omega_one[j]) * g.A.at(i, j, i, j);
      sh += FieldElem(neg1(i + j) * g.omega_alpha[i] * g.omega_alpha[j]) * g.A_hat.at(i, j, i, j);
    }
  out += FieldElem(CycloElem(g.lambda_rho)) * sa;
  out += FieldElem(CycloElem(g.lambda_rho * g.lambda_alpha)) * sh;
  return out;
}

bool phi_eigenvalues_allowed(const Mat& m) {
  const FieldElem e1 = FieldElem((CycloElem(3) - s5()) * q(1, 2));
  const FieldElem e2 = FieldElem((CycloElem(1) - s5()) * q(1, 2));
  const FieldElem tr = m[0][0] + m[1][1];
  const FieldElem det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  for (auto [x, y] : {std::pair{e1, e1}, {e2, e2}, {e1, e2}})
    if (tr == x + y && det == x * y) return true;
  return false;
}

PhiPsi sd_phi_psi(const GaugeSD& g) {
  if (g.m != 2) throw std::invalid_argument("sd_phi_psi: m must be 2");
  PhiPsi out;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j) {
        out.phi[i][k] += g.A.at(j, k, j, i);
        out.psi[i][k] += g.A_hat.at(j, k, j, i);
      }
  out.phi_ok = phi_eigenvalues_allowed(out.phi);
  out.psi_ok = phi_eigenvalues_allowed(out.psi);
  return out;
}

AlphaDims center_alpha_dims(int a, int lambda_alpha, int mu) {
  if (a < -4 || a > 4 || a % 2 != 0) throw std::invalid_argument("a must lie in {-4,-2,0,2,4}");
  const long lm = static_cast<long>(lambda_alpha) * mu;
  const CycloElem dim_c = CycloElem(20) + CycloElem(8) * s5();
  auto root = sqrt_in_field(CycloElem(static_cast<long>(a) * a + 4 * lm));
  if (!root) throw std::domain_error("center_alpha_dims: radical outside the field");
  const CycloElem base = CycloElem(4 + static_cast<long>(a) * a * lm);
  const CycloElem plus = base + CycloElem(a) * *root, minus = base - CycloElem(a) * *root;
  AlphaDims out;
  const CycloElem dens[4] = {plus, minus, minus, plus};
  int ones = 0;
  for (int k = 0; k < 4; ++k) {
    if (dens[k].is_zero()) continue;
    CycloElem v = dim_c / dens[k];
    out.dims[k] = FieldElem(v);
    out.admissible[k] = v.is_real() && v.embed().real_sign() > 0 && is_algebraic_integer(v);
    if (v == CycloElem(1)) ++ones;
  }
  out.two_invertible_lifts = ones >= 2;
  out.all_admissible = !out.two_invertible_lifts;
  for (int k = 0; k < 4; ++k) out.all_admissible = out.all_admissible && out.dims[k] && out.admissible[k];
  return out;
}

GaugeSD gauge_act(const GaugeSD& g, const CycloElem& z1, const CycloElem& z2) {
  if (g.m != 2) throw std::invalid_argument("gauge_act: m must be 2");
  if (!is_unimodular(z1) || !is_unimodular(z2)) throw std::invalid_argument("gauge_act: z1, z2 must be unimodular");
  auto phases = [](const CycloElem& z, const std::vector<int>& tl) {
    if (tl[0] == 1) return std::array<CycloElem, 2>{z, z.conj()};
    if (!z.is_real()) throw std::invalid_argument("gauge_act: fixed basis vectors admit only real rescaling");
    return std::array<CycloElem, 2>{z, z};
  };
  const auto gp = phases(z1, g.tilde_one);
  const auto hp = phases(z2, g.tilde_alpha);
  GaugeSD out = g;
  for_each_index(2, [&](const Idx& x) {
    auto [i, j, k, l] = x;
    out.A.at(i, j, k, l) = FieldElem(gp[i] * gp[j] * gp[k].conj() * gp[l].conj()) * g.A.at(i, j, k, l);
    out.A_hat.at(i, j, k, l) = FieldElem(hp[i] * hp[j] * hp[k].conj() * hp[l].conj()) * g.A_hat.at(i, j, k, l);
    out.D.at(i, j, k, l) = FieldElem(hp[i] * gp[j] * hp[k].conj() * gp[l].conj()) * g.D.at(i, j, k, l);
  });
  sd_fill_from_d(out);
  return out;
}

namespace {

std::string show(const FieldElem& x) {
  if (x.in_base_field())
    if (auto qd = to_quadratic(x.base())) return qd->str();
  return x.debug_string();
}

SolveOutcome classify_plus() {
  SolveOutcome out;
  const CycloElem r5 = s5();
  const FieldElem e_hi = FieldElem((CycloElem(3) - r5) * q(1, 2));
  const FieldElem e_lo = FieldElem((CycloElem(1) - r5) * q(1, 2));
  const FieldElem two_m = FieldElem(CycloElem(2) - r5);
  out.trace.push_back("coef2: a2^2 = ah2^2 = d0^2 = ... = d3^2 = 1/2 - |d4|^2, so these reals agree up to sign");

  // d1 = s1 d0, d2 = s2 d0, d3 = s3 d0; phi, psi diagonals
  // 2-sqrt5-(d0+d3), 2-sqrt5+(d1+d2), 2-sqrt5-(d0-d2), 2-sqrt5+(d1-d3) are eigenvalues.
  std::vector<FieldElem> d0_values;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1})
        for (int mask = 0; mask < 16; ++mask) {
          const long coef[4] = {1 + s3, -(s1 + s2), 1 - s2, s3 - s1};
          std::optional<FieldElem> d0;
          bool ok = true;
          for (int t = 0; t < 4 && ok; ++t) {
            FieldElem rhs = two_m - ((mask >> t) & 1 ? e_hi : e_lo);
            if (coef[t] == 0) {
              ok = rhs.is_zero();
              continue;
            }
            FieldElem v = rhs * FieldElem(frac(1, coef[t]));
            if (d0 && *d0 != v) ok = false;
            d0 = v;
          }
          if (!ok || !d0) continue;
          if (s1 != -1 || s2 != -1 || s3 != 1) throw std::logic_error("unexpected sign pattern");
          bool seen = false;
          for (auto& x : d0_values) seen = seen || x == *d0;
          if (!seen) d0_values.push_back(*d0);
        }
  out.trace.push_back("phi/psi eigenvalue constraint forces d0 = -d1 = -d2 = d3 with " +
                      std::to_string(d0_values.size()) + " candidate values");

  std::vector<int> taus;
  for (const auto& d0 : d0_values) {
    FieldElem tau = two_m - FieldElem(4) * d0;
    int t = tau == FieldElem(1) ? 1 : (tau == FieldElem(-1) ? -1 : 0);
    if (t == 0) throw std::logic_error("tau outside {-1, 1}");
    taus.push_back(t);
  }

  std::optional<SdPlusVars> survivor;
  for (int tau : taus) {
    const std::string ts = tau == 1 ? "1" : "-1";
    const FieldElem d0 = (two_m - FieldElem(tau)) * FieldElem(frac(1, 4));
    // a2 = -d0 branch
    {
      FieldElem a0 = two_m - d0;
      FieldElem lhs = a0 * a0 + FieldElem(3) * d0 * d0;
      if (lhs == FieldElem(CycloElem(3) - r5)) throw std::logic_error("a2 = -d0 branch unexpectedly consistent");
      out.trace.push_back("tau=" + ts + ": a2 = -d0 gives a0 = 2 - sqrt5 - d0, violating coef1.1");
    }
    SdPlusVars v;
    v.d0 = d0;
    v.d1 = v.d2 = -d0;
    v.d3 = d0;
    v.a2 = v.ah2 = d0;
    v.a0 = v.a1 = v.ah0 = v.ah1 = two_m - FieldElem(3) * d0;
    if (v.a0.is_zero()) throw std::logic_error("a0 vanished");
    out.trace.push_back("tau=" + ts + ": a0 = a1 = ah0 = ah1 = " + show(v.a0) + " (nonzero, so all omegas are 1), a2 = ah2 = d0 = " +
                        show(d0));
    GaugeSD g = sd_reduced_expand(v);
    FieldElem nu4 = nu4_sd(g);
    if (nu4 != FieldElem(3 * tau)) throw std::logic_error("nu4 != 3 tau");
    FrobBudget fb = frob_2n_budget(1, CycloElem(3 * tau), 2);
    out.derived["nu4(tau=" + ts + ")"] = nu4;
    out.derived["frob_required(tau=" + ts + ")"] = FieldElem(fb.required);
    out.derived["larson_need(tau=" + ts + ")"] = FieldElem(Rational(fb.larson_need));
    out.trace.push_back("tau=" + ts + ": nu4 = " + show(nu4) + ", twist sum must equal " + fb.required_quad.str() +
                        ", needing " + fb.larson_need.get_str() + " roots of unity against budget 16");
    if (fb.contradiction) continue;
    survivor = v;
    out.derived["tau"] = FieldElem(tau);
  }
  if (!survivor) throw std::logic_error("no tau survived");
  SdPlusVars v = *survivor;
  out.derived["d0"] = v.d0;
  out.derived["a0"] = v.a0;
  out.derived["a2"] = v.a2;

  // circle |d4|^2 = 1/2 - a2^2 and hyperbola d4^2 + conj(d4)^2 = -2 a2^2
  const CycloElem a2 = v.a2.base();
  const CycloElem n = CycloElem(q(1, 2)) - a2 * a2;
  const CycloElem re_sq = -(a2 * a2);
  const CycloElem x2 = (n + re_sq) * q(1, 2), y2 = (n - re_sq) * q(1, 2);
  out.derived["|d4|^2"] = FieldElem(n);
  out.derived["Re(d4^2)"] = FieldElem(re_sq);
  out.derived["Re(d4)^2"] = FieldElem(x2);
  out.derived["Im(d4)^2"] = FieldElem(y2);
  const FieldElem x = sqrt_adjoin(x2), y = sqrt_adjoin(y2);
  out.trace.push_back("circle |d4|^2 = " + show(FieldElem(n)) + ", hyperbola d4^2 + conj(d4)^2 = " +
                      show(FieldElem(CycloElem(2) * re_sq)) + ": d4 = e1 x + i e2 y with x^2 = " +
                      show(FieldElem(x2)) + ", y^2 = " + show(FieldElem(y2)));
  int excluded = 0;
  for (int e1 : {1, -1})
    for (int e2 : {1, -1}) {
      SdPlusVars w = v;
      w.d4 = FieldElem(e1) * x + FieldElem(cyc::i() * CycloElem(e2)) * y;
      GaugeSD g = sd_reduced_expand(w);
      Residuals r = sd_residuals(1, g);
      const ResidualEntry* bad = r.first_violation();
      if (bad == nullptr) throw std::logic_error("intersection point satisfied every equation");
      if (bad->id != "cross") throw std::logic_error("intersection point failed " + bad->id);
      FieldElem d4sq = w.d4 * w.d4;
      out.derived["Im(d4^2)[" + std::to_string(e1) + "," + std::to_string(e2) + "]"] = d4sq.imag_part();
      out.residuals.push_back(r);
      ++excluded;
    }
  out.trace.push_back(std::to_string(excluded) +
                      " intersection points satisfy coef1-coef6 but have Im(d4^2) != 0, so d2^2 - d4^2 is not real");
  out.verdict = SolveVerdict::kInfeasible;
  out.witness =
      "cross: d2^2 - d4^2 must be real, so d4^2 is real (d2 is real), but every circle/hyperbola point has "
      "Im(d4^2) = +-2xy != 0";
  return out;
}

SolveOutcome classify_minus() {
  SolveOutcome out;
  const CycloElem r5 = s5();
  const CycloElem w3 = cyc::omega();
  const CycloElem mu3[3] = {CycloElem(1), w3, w3 * w3};
  std::vector<std::tuple<int, int, int, int>> admissible;  // lambda_rho, w index, wa index, tau
  for (int lr : {1, -1})
    for (int wi = 0; wi < 3; ++wi)
      for (int ai = 0; ai < 3; ++ai)
        for (int tau : {1, -1}) {
          const CycloElem w = mu3[wi], wa = mu3[ai], L(lr);
          const CycloElem den1 = CycloElem(2) * (CycloElem(1) + L * w);
          const CycloElem den2 = CycloElem(2) * (CycloElem(1) + L * wa);
          if (den1.is_zero() || den2.is_zero()) continue;
          const CycloElem top = CycloElem(2) - r5 + CycloElem(tau);
          const CycloElem a00 = top / den1, h00 = top / den2;
          CycloElem nu4 = r5 - CycloElem(2) + L * w * w * a00 * (CycloElem(2) + CycloElem(2) * L * w) -
                          L * wa * wa * h00 * (CycloElem(2) - CycloElem(2) * L * wa);
          CycloElem re = nu4.real_part(), im = nu4.imag_part();
          bool gaussian = re.is_rational() && im.is_rational() && re.rational_value().get_den() == 1 &&
                          im.rational_value().get_den() == 1;
          if (!gaussian) continue;
          if (nu4 != CycloElem(tau)) throw std::logic_error("nu4 != tau on a Gaussian branch");
          admissible.emplace_back(lr, wi, ai, tau);
        }
  for (auto& [lr, wi, ai, tau] : admissible) {
    if (lr != 1 || mu3[ai] != mu3[wi] * mu3[wi]) throw std::logic_error("unexpected Gaussian branch");
  }
  out.trace.push_back("nu4 in Z[i] forces lambda_rho = 1 and omega_alpha0 = omega_one0^2 (" +
                      std::to_string(admissible.size()) + " branches), and then nu4 = tau");
  FrobBudget fb = frob_2n_budget(-1, CycloElem(-1), 2);
  out.derived["frob_required(tau=-1)"] = FieldElem(fb.required);
  out.derived["larson_need(tau=-1)"] = FieldElem(Rational(fb.larson_need));
  if (!fb.contradiction) throw std::logic_error("tau = -1 not excluded");
  out.trace.push_back("tau=-1: twist sum must equal " + fb.required_quad.str() + ", needing " +
                      fb.larson_need.get_str() + " roots of unity against budget 16; tau = 1");
  out.derived["tau"] = FieldElem(1);

  const CycloElem im_d0 = (CycloElem(1) - r5) * q(1, 4);
  std::optional<CycloElem> w;
  for (const auto& c : mu3) {
    CycloElem v = -(c * c) / (CycloElem(1) + c * c) * (r5 - CycloElem(1)) * q(1, 2);
    if (v == im_d0) {
      if (w) throw std::logic_error("eq1 admits two omegas");
      w = c;
    }
  }
  if (!w || *w != CycloElem(1)) throw std::logic_error("eq1 did not force omega = 1");
  out.trace.push_back("eq1.2 forces omega_one0 = 1");
  const CycloElem r = (CycloElem(3) - r5) / (CycloElem(2) * (*w + *w * *w));
  out.derived["r"] = FieldElem(r);
  const CycloElem n0 = (CycloElem(3) - r5) * q(1, 2) - r * r;
  const CycloElem re2 = n0 - im_d0 * im_d0;
  auto re = sqrt_in_field(re2);
  if (!re) throw std::logic_error("Re(d0) not in the field");
  out.derived["|d0|^2"] = FieldElem(n0);
  out.derived["Re(d0)^2"] = FieldElem(re2);
  for (const CycloElem& s : {*re, -*re}) {
    CycloElem d0 = s + cyc::i() * im_d0;
    CycloElem lhs = (*w + *w * *w) * r * r - (d0 * d0 + d0.conj() * d0.conj());
    if (lhs != CycloElem(2) - r5) throw std::logic_error("eq5 fails for a Re(d0) root");
  }
  out.trace.push_back("eq2 and eq1 give Re(d0)^2 = " + show(FieldElem(re2)) +
                      "; both signs satisfy eq5 and the reduced system does not separate them; Re(d0) = -1/2 is "
                      "the reported normalisation");
  const CycloElem d0 = -*re + cyc::i() * im_d0;
  const CycloElem n1 = q(1, 2) - n0;
  out.derived["|d1|^2"] = FieldElem(n1);
  const FieldElem m1 = sqrt_adjoin(n1);
  SdMinusVars v;
  v.omega0 = *w;
  v.r = FieldElem(r);
  v.d0 = FieldElem(d0);
  v.d1 = v.d2 = m1;
  const FieldElem rinv = FieldElem(r.inverse());
  v.a1 = rinv * v.d1 * v.d2;
  v.ah1 = -(rinv * v.d1.conj() * v.d2);
  const FieldElem k35 = FieldElem(CycloElem(3) + r5);
  if (v.a1 != k35 * v.d1 * v.d2 || v.ah1 != -(k35 * v.d1.conj() * v.d2))
    throw std::logic_error("1/r != 3 + sqrt5");
  GaugeSD raw = sd_reduced_expand(v);
  if (!sd_residuals(-1, raw).satisfied()) throw std::logic_error("real representative fails eq1-eq8");
  out.trace.push_back("eq4 gives |d1|^2 = |d2|^2 = " + show(FieldElem(n1)) +
                      "; eq6, eq7 give a1 = (3 + sqrt5) d1 d2, ah1 = -(3 + sqrt5) conj(d1) d2; eq3, eq8 hold");
  // z1^-2 z2^2 = i and z1^-2 z2^-2 = i: z2 = 1, z1 = conj(nu)
  GaugeSD g = gauge_act(raw, cyc::nu().conj(), CycloElem(1));
  const FieldElem gd1 = g.D.cell(1, 2), gd2 = g.D.cell(3, 0);
  if (gd1 != gd2 || gd1.real_part() != FieldElem(0)) throw std::logic_error("gauge normalisation failed");
  out.trace.push_back("gauge (z1, z2) = (e^{-i pi/4}, 1) rotates d1 = d2 onto i (1/2) sqrt((sqrt5 - 1)/2)");
  Residuals res = sd_residuals(-1, g);
  Residuals sym = sd_symmetry_check(g);
  if (!res.satisfied() || !sym.satisfied()) throw std::logic_error("normalised solution fails");
  FieldElem nu4 = nu4_sd(g);
  out.derived["nu4"] = nu4;
  out.derived["d0"] = FieldElem(d0);
  out.derived["d1"] = gd1;
  out.derived["d2"] = gd2;
  out.derived["a1"] = g.A.cell(3, 0);
  out.derived["ah1"] = g.A_hat.cell(3, 0);
  out.derived["Re(d0) alternative"] = FieldElem(*re);
  out.residuals.push_back(res);
  out.residuals.push_back(sym);
  out.sd_solutions.push_back(g);
  out.verdict = SolveVerdict::kUniqueSolution;
  return out;
}

}  // namespace

SolveOutcome sd_classify(int lambda_alpha) {
  if (lambda_alpha == 1) return classify_plus();
  if (lambda_alpha == -1) return classify_minus();
  throw std::invalid_argument("lambda_alpha must be +-1");
}

}  // namespace z2q
