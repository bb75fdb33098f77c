#pragma once

#include <vector>

#include "z2q/cyclo.hpp"

namespace z2q {

// Monic minimal polynomial over Q, coefficients from constant term upward.
std::vector<Rational> minimal_polynomial(const CycloElem& x);

bool is_algebraic_integer(const CycloElem& x);

}  // namespace z2q
