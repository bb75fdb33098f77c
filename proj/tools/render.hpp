#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "z2q/ext.hpp"
#include "z2q/quad.hpp"

namespace z2q::render {

using nlohmann::json;

inline constexpr int kDigits = 30;

// x = sum c_t sqrt(t), t | 30 squarefree; nullopt when x is real but outside
// Q(sqrt2, sqrt3, sqrt5).
std::optional<std::vector<std::pair<Rational, std::int64_t>>> multiquadratic(const CycloElem& x);

std::string text(const CycloElem& x);
std::string text(const ExtElem& x);
std::string text(const QuadElem& x);
std::string text(const Rational& x);

// {"text", "exact", "decimal"}; decimal is a string for real values and
// {"re", "im"} otherwise
json value(const CycloElem& x);
json value(const ExtElem& x);
json value(const QuadElem& x);
json value(const ComplexBall& b);

std::string decimal(const Rational& x);

// parse(dump(j)) re-dumps to the same bytes
std::string dump(const json& j);

}  // namespace z2q::render
