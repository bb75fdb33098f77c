#include "z2q/algint.hpp"

#include <stdexcept>

namespace z2q {

std::vector<Rational> minimal_polynomial(const CycloElem& x) {
  // Reduce the Krylov vectors 1, x, x^2, ... against an echelon basis, tracking
  // each basis row as a combination of powers; the first vector that reduces
  // to zero yields the relation.
  struct Row {
    std::vector<Rational> v;    // coordinates, pivot entry normalised to 1
    std::vector<Rational> how;  // combination of powers giving v
    int pivot;
  };
  std::vector<Row> basis;
  CycloElem power(1);
  for (int k = 0; k <= kDegree; ++k) {
    std::vector<Rational> v = power.coeffs();
    std::vector<Rational> how(k + 1, 0);
    how[k] = 1;
    for (const auto& row : basis) {
      Rational c = v[row.pivot];
      if (c == 0) continue;
      for (int j = 0; j < kDegree; ++j) v[j] -= c * row.v[j];
      for (size_t j = 0; j < row.how.size(); ++j) how[j] -= c * row.how[j];
    }
    int pivot = -1;
    for (int j = 0; j < kDegree; ++j)
      if (v[j] != 0) {
        pivot = j;
        break;
      }
    if (pivot < 0) return how;  // monic since how[k] = 1
    Rational inv = 1 / v[pivot];
    for (auto& e : v) e *= inv;
    for (auto& e : how) e *= inv;
    basis.push_back({std::move(v), std::move(how), pivot});
    power *= x;
  }
  throw std::logic_error("minimal_polynomial: degree exceeds field degree");
}

bool is_algebraic_integer(const CycloElem& x) {
  for (const auto& c : minimal_polynomial(x))
    if (c.get_den() != 1) return false;
  return true;
}

}  // namespace z2q
