#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "render.hpp"
#include "z2q/bounds.hpp"

namespace z2q::cli {

using nlohmann::json;

// bad user input; the front end maps it to exit code 2
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

const char* version();

json cmd_ring(bool selfdual, int m, int n);
// per_cell: include one object per (m, n) with its branch trace
json cmd_bound(int max_sum, bool per_cell);
json cmd_larson(const std::string& u, const std::string& v, std::int64_t t);
json cmd_classify(const std::string& target);
json cmd_assignment_check(int m, int n, const InductionAssignment& a);
json cmd_assignment_search(int m, int n, long cap, std::size_t max_z, std::size_t limit);

const std::vector<std::string>& classify_targets();

// parse "z:z',z:z'"
std::vector<std::pair<long, long>> parse_pairs(const std::string& s);

std::string text_report(const json& report);

}  // namespace z2q::cli
