#include "render.hpp"

#include <array>
#include <sstream>

namespace z2q::render {

namespace {

constexpr std::array<std::int64_t, 8> kBasis = {1, 2, 3, 5, 6, 10, 15, 30};

const std::vector<std::vector<Rational>>& basis_coeffs() {
  static const auto rows = [] {
    std::vector<std::vector<Rational>> r;
    for (auto t : kBasis) r.push_back((t == 1 ? CycloElem(1) : cyclo_sqrt_int(t)).coeffs());
    return r;
  }();
  return rows;
}

std::string coeff_times(const Rational& c, const std::string& unit, bool first) {
  std::ostringstream os;
  const bool neg = c < 0;
  if (first) {
    if (neg) os << "-";
  } else {
    os << (neg ? " - " : " + ");
  }
  Rational a = abs(c);
  if (unit.empty()) {
    os << a.get_str();
  } else {
    if (a != 1) os << a.get_str();
    os << unit;
  }
  return os.str();
}

std::string sum_text(const std::vector<std::pair<Rational, std::int64_t>>& terms) {
  std::string s;
  for (const auto& [c, t] : terms) s += coeff_times(c, t == 1 ? "" : "√" + std::to_string(t), s.empty());
  return s.empty() ? "0" : s;
}

bool single_term(const std::string& s) {
  return s.find(" + ") == std::string::npos && s.find(" - ") == std::string::npos;
}

json real_exact(const std::vector<std::pair<Rational, std::int64_t>>& terms) {
  if (terms.empty()) return {{"rational_coeffs", {"0", "0"}}, {"radicand", 1}};
  std::vector<std::pair<Rational, std::int64_t>> irr;
  Rational rat = 0;
  for (const auto& [c, t] : terms) {
    if (t == 1) rat = c;
    else irr.emplace_back(c, t);
  }
  if (irr.size() <= 1) {
    std::int64_t t = irr.empty() ? 1 : irr[0].second;
    std::string q = irr.empty() ? "0" : irr[0].first.get_str();
    return {{"rational_coeffs", {rat.get_str(), q}}, {"radicand", t}};
  }
  json arr = json::array();
  for (const auto& [c, t] : terms) arr.push_back({{"coeff", c.get_str()}, {"radicand", t}});
  return {{"terms", arr}};
}

json cyclo_exact(const CycloElem& x) {
  auto re = multiquadratic(x.real_part());
  auto im = multiquadratic(x.imag_part());
  if (re && im) {
    json j = {{"re", real_exact(*re)}};
    if (!im->empty()) j["im"] = real_exact(*im);
    return j;
  }
  json c = json::array();
  for (const auto& q : x.coeffs()) c.push_back(q.get_str());
  return {{"cyclotomic", {{"conductor", kConductor}, {"coeffs", c}}}};
}

json decimal_of(const ComplexBall& b, bool real) {
  if (real) return b.re_decimal(kDigits);
  return {{"re", b.re_decimal(kDigits)}, {"im", b.im_decimal(kDigits)}};
}

}  // namespace

std::optional<std::vector<std::pair<Rational, std::int64_t>>> multiquadratic(const CycloElem& x) {
  const auto& basis = basis_coeffs();
  const size_t n = basis.size();
  const auto target = x.coeffs();
  const size_t rows = target.size();
  // columns are basis vectors; augmented with the target
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(n + 1));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < n; ++c) m[r][c] = basis[c][r];
    m[r][n] = target[r];
  }
  size_t piv = 0;
  std::vector<size_t> pivcol;
  for (size_t c = 0; c < n && piv < rows; ++c) {
    size_t p = piv;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[piv]);
    Rational inv = 1 / m[piv][c];
    for (auto& v : m[piv]) v *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == piv || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (size_t k = c; k <= n; ++k) m[r][k] -= f * m[piv][k];
    }
    pivcol.push_back(c);
    ++piv;
  }
  for (size_t r = piv; r < rows; ++r)
    if (m[r][n] != 0) return std::nullopt;
  std::vector<std::pair<Rational, std::int64_t>> out;
  for (size_t i = 0; i < pivcol.size(); ++i) {
    Rational v = m[i][n];
    v.canonicalize();
    if (v != 0) out.emplace_back(v, kBasis[pivcol[i]]);
  }
  return out;
}

std::string text(const Rational& x) {
  Rational y = x;
  y.canonicalize();
  return y.get_str();
}

std::string text(const QuadElem& x) { return x.str(); }

std::string text(const CycloElem& x) {
  auto re = multiquadratic(x.real_part());
  auto im = multiquadratic(x.imag_part());
  if (!re || !im) return x.debug_string();
  std::string rs = sum_text(*re);
  if (im->empty()) return rs;
  std::string is = sum_text(*im);
  std::string ipart;
  if (is == "1") ipart = "i";
  else if (is == "-1") ipart = "-i";
  else if (single_term(is) && is.find('/') == std::string::npos) ipart = is + "i";
  else if (single_term(is) && is[0] == '-') ipart = "-i(" + is.substr(1) + ")";
  else ipart = "i(" + is + ")";
  if (re->empty()) return ipart;
  if (ipart[0] == '-') return rs + " - " + ipart.substr(1);
  return rs + " + " + ipart;
}

std::string text(const ExtElem& x) {
  if (x.in_base_field()) return text(x.base());
  std::string coeff = text(x.radical_coeff());
  std::string rad = "√(" + text(x.radicand()) + ")";
  std::string term;
  if (coeff == "1") term = rad;
  else if (coeff == "-1") term = "-" + rad;
  else if (single_term(coeff)) term = coeff + "·" + rad;
  else term = "(" + coeff + ")·" + rad;
  if (x.base().is_zero()) return term;
  if (term[0] == '-') return text(x.base()) + " - " + term.substr(1);
  return text(x.base()) + " + " + term;
}

json value(const CycloElem& x) {
  return {{"text", text(x)}, {"exact", cyclo_exact(x)}, {"decimal", decimal_of(x.embed(), x.is_real())}};
}

json value(const ExtElem& x) {
  if (x.in_base_field()) return value(x.base());
  json exact = {{"base", cyclo_exact(x.base())},
                {"radical_coeff", cyclo_exact(x.radical_coeff())},
                {"radical_radicand", cyclo_exact(x.radicand())}};
  const bool real = x.conj() == x;
  return {{"text", text(x)}, {"exact", exact}, {"decimal", decimal_of(x.embed(), real)}};
}

json value(const QuadElem& x) {
  json exact;
  if (x.radicand() < 0) {
    // p + q i sqrt|D|
    exact = {{"re", {{"rational_coeffs", {text(x.p()), "0"}}, {"radicand", 1}}},
             {"im", {{"rational_coeffs", {"0", text(x.q())}}, {"radicand", -x.radicand()}}}};
    if (x.radicand() == -1)
      exact["im"] = {{"rational_coeffs", {text(x.q()), "0"}}, {"radicand", 1}};
  } else {
    exact = {{"re", {{"rational_coeffs", {text(x.p()), text(x.q())}}, {"radicand", x.radicand()}}}};
  }
  const bool real = x.radicand() > 0 || x.q() == 0;
  return {{"text", text(x)}, {"exact", exact}, {"decimal", decimal_of(x.embed(), real)}};
}

json value(const ComplexBall& b) {
  std::string im = b.im_decimal(kDigits);
  std::string sep = im[0] == '-' ? " - " : " + ";
  if (im[0] == '-') im.erase(0, 1);
  return {{"text", "≈ " + b.re_decimal(kDigits) + sep + im + "i"},
          {"decimal", decimal_of(b, false)},
          {"radius", std::to_string(b.radius())}};
}

std::string decimal(const Rational& x) { return CycloElem(x).embed().re_decimal(kDigits); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace z2q::render
