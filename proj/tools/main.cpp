#include <iostream>

#include <CLI11.hpp>

#include "report.hpp"
#include "z2q/ball.hpp"

namespace {

std::array<long, 3> triple(const std::vector<long>& v, const char* name) {
  if (v.size() != 3) throw z2q::cli::UsageError(std::string(name) + " takes 3 entries");
  return {v[0], v[1], v[2]};
}

std::array<long, 4> quad(const std::vector<long>& v, const char* name) {
  if (v.size() != 4) throw z2q::cli::UsageError(std::string(name) + " takes 4 entries");
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace

int main(int argc, char** argv) {
  using namespace z2q::cli;

  CLI::App app{"Exact invariants and classification checks for rank-4 Z/2Z-quadratic fusion rings", "z2q"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  long precision = 0;
  int max_sum = 0;
  app.add_flag("--json", as_json, "Emit the report as canonical JSON");
  app.add_option("--precision", precision, "Ball precision in bits")->check(CLI::Range(32L, 1L << 20));
  app.add_option("--max", max_sum, "Largest m + n scanned by bound")->check(CLI::NonNegativeNumber);

  int m = 0, n = 0;
  bool nsd = false;
  auto* ring = app.add_subcommand("ring", "Fusion matrices, characters, codegrees and centre dimensions");
  auto* sd_flag = ring->add_flag("--sd", "Self-dual ring (default)");
  ring->add_flag("--nsd", nsd, "Non-self-dual ring")->excludes(sd_flag);
  ring->add_option("--m", m, "Multiplicity m")->required()->check(CLI::NonNegativeNumber);
  ring->add_option("--n", n, "Multiplicity n")->required()->check(CLI::NonNegativeNumber);

  bool cells = false;
  auto* bound = app.add_subcommand("bound", "Feasible (m, n) up to --max");
  bound->add_flag("--cells", cells, "Include per-cell branch traces (always on with --json)");

  std::string u = "0", v = "0";
  std::int64_t t = 1;
  auto* larson = app.add_subcommand("larson", "Fewest roots of unity summing to u + v sqrt(t)");
  larson->add_option("-u", u, "Rational part")->required();
  larson->add_option("-v", v, "Integer coefficient of sqrt(t)")->required();
  larson->add_option("-t", t, "Squarefree radicand")->required();

  std::string target;
  auto* classify = app.add_subcommand("classify", "Solve or refute the 6j-coefficient system");
  classify->add_option("target", target, "Which system")->required()->check(CLI::IsMember(classify_targets()));

  std::vector<long> x, xp, y, yp;
  std::string z;
  bool search = false;
  long cap = -1;
  std::size_t max_z = 4, limit = 16;
  auto* assign = app.add_subcommand("assignment-check", "Check or search induction assignments");
  assign->add_option("--m", m, "Multiplicity m")->required()->check(CLI::NonNegativeNumber);
  assign->add_option("--n", n, "Multiplicity n")->required()->check(CLI::NonNegativeNumber);
  assign->add_option("--x", x, "x2,x3,x4")->delimiter(',');
  assign->add_option("--xp", xp, "x'2,x'3,x'4")->delimiter(',');
  assign->add_option("--y", y, "y1..y4")->delimiter(',');
  assign->add_option("--yp", yp, "y'1..y'4")->delimiter(',');
  assign->add_option("--z", z, "pairs z:z' separated by commas");
  assign->add_flag("--search", search, "Enumerate consistent assignments instead");
  assign->add_option("--cap", cap, "Largest entry in the search (default 2m + 2n)");
  assign->add_option("--max-z", max_z, "Most extra simples in the search");
  assign->add_option("--limit", limit, "Stop after this many assignments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (precision > 0) z2q::set_default_precision(precision);
    nlohmann::json r;
    if (ring->parsed()) {
      r = cmd_ring(!nsd, m, n);
    } else if (bound->parsed()) {
      if (max_sum == 0) throw UsageError("bound needs --max");
      r = cmd_bound(max_sum, as_json || cells);
    } else if (larson->parsed()) {
      r = cmd_larson(u, v, t);
    } else if (classify->parsed()) {
      r = cmd_classify(target);
    } else if (assign->parsed()) {
      if (search) {
        r = cmd_assignment_search(m, n, cap < 0 ? 2L * (m + n) : cap, max_z, limit);
      } else {
        if (x.empty() || xp.empty() || y.empty() || yp.empty())
          throw UsageError("assignment-check needs --x, --xp, --y and --yp (or --search)");
        z2q::InductionAssignment a;
        a.x = triple(x, "--x");
        a.x_prime = triple(xp, "--xp");
        a.y = quad(y, "--y");
        a.y_prime = quad(yp, "--yp");
        a.z_pairs = parse_pairs(z);
        r = cmd_assignment_check(m, n, a);
      }
    }
    std::cout << (as_json ? z2q::render::dump(r) : text_report(r));
  } catch (const UsageError& e) {
    std::cerr << "z2q: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
