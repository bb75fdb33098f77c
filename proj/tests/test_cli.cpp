#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "oracles.hpp"
#include "report.hpp"

using namespace z2q;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& args) {
  std::string cmd = std::string(Z2Q_BIN) + " " + args + " >/dev/null 2>&1";
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::vector<json> all_reports() {
  std::vector<json> out = {cli::cmd_ring(true, 2, 2), cli::cmd_ring(false, 2, 2), cli::cmd_ring(true, 1, 1),
                           cli::cmd_bound(5, true), cli::cmd_larson("-4", "-12", 5), cli::cmd_larson("3/2", "0", 1)};
  for (const auto& t : cli::classify_targets()) out.push_back(cli::cmd_classify(t));
  out.push_back(cli::cmd_assignment_search(0, 1, 4, 4, 8));
  return out;
}

// every exact value's decimal agrees with a floating evaluation of its text-free exact form
void check_values(const json& j, int& seen) {
  if (j.is_object() && j.contains("text") && j.contains("decimal") && j.contains("exact")) {
    const json& e = j["exact"];
    if (e.contains("re") && e["re"].contains("rational_coeffs")) {
      auto part = [](const json& p) {
        if (!p.contains("rational_coeffs")) return std::nan("");
        Rational a(p["rational_coeffs"][0].get<std::string>()), b(p["rational_coeffs"][1].get<std::string>());
        return a.get_d() + b.get_d() * std::sqrt(static_cast<double>(p["radicand"].get<long>()));
      };
      double re = part(e["re"]);
      double im = e.contains("im") ? part(e["im"]) : 0.0;
      const json& d = j["decimal"];
      if (!std::isnan(re) && !std::isnan(im)) {
        double dr = std::stod(d.is_string() ? d.get<std::string>() : d["re"].get<std::string>());
        double di = d.is_string() ? 0.0 : std::stod(d["im"].get<std::string>());
        CHECK(std::abs(dr - re) < 1e-9 * (1 + std::abs(re)));
        CHECK(std::abs(di - im) < 1e-9 * (1 + std::abs(im)));
        ++seen;
      }
    }
    return;
  }
  if (j.is_structured())
    for (const auto& x : j) check_values(x, seen);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("reports follow the schema and round-trip byte for byte") {
  for (const auto& r : all_reports()) {
    CAPTURE(r["command"]);
    for (const char* k : {"command", "inputs", "results", "citations", "version"}) CHECK(r.contains(k));
    CHECK_FALSE(r["citations"].empty());
    std::string once = render::dump(r);
    std::string twice = render::dump(json::parse(once));
    CHECK(once == twice);
    if (r["results"].contains("verdict") && r["results"]["verdict"] == "infeasible")
      CHECK_FALSE(r["results"]["witness"].get<std::string>().empty());
  }
}

TEST_CASE("decimals agree with the exact values") {
  int seen = 0;
  for (const auto& r : all_reports()) check_values(r, seen);
  CHECK(seen > 100);
}

TEST_CASE("golden outputs") {
  const std::string dir = GOLDEN_DIR;
  CHECK(render::dump(cli::cmd_larson("-4", "-12", 5)) == read_file(dir + "/larson_48.json"));
  CHECK(render::dump(cli::cmd_ring(true, 2, 2)) == read_file(dir + "/ring_sd_2_2.json"));
  CHECK(render::dump(cli::cmd_classify("s2-opposite")) == read_file(dir + "/classify_s2_opposite.json"));
  CHECK(cli::text_report(cli::cmd_bound(5, true)) == read_file(dir + "/bound_5.txt"));
}

TEST_CASE("report contents") {
  json b = cli::cmd_bound(50, false);
  CHECK(b["results"]["cells_evaluated"] == 1326);
  CHECK(b["results"]["feasible"] == json::parse("[[0,0],[0,1],[1,0],[1,1],[2,2]]"));
  CHECK(cli::cmd_bound(1, false)["results"]["feasible"].size() == 3);
  CHECK(cli::cmd_larson("4", "8", 2)["results"]["need"] == 20);
  CHECK(cli::cmd_larson("0", "0", 3)["results"]["need"] == 0);
  json r = cli::cmd_ring(true, 2, 2)["results"];
  CHECK(r["formal_codegrees"][0]["text"] == "20 + 8√5");
  CHECK(r["formal_codegrees"][0]["exact"]["re"]["rational_coeffs"] == json::parse(R"(["20","8"])"));
  CHECK(r["formal_codegrees"][0]["exact"]["re"]["radicand"] == 5);
  CHECK(cli::cmd_ring(true, 0, 0)["results"]["formal_codegrees"][3]["text"] == "4");
  json c = cli::cmd_classify("s2-equal")["results"];
  CHECK(c["verdict"] == "infeasible");
  CHECK(c["tuples_certified"] == 36);
  json m = cli::cmd_classify("r2-minus")["results"];
  CHECK(m["verdict"] == "unique_solution");
  CHECK(m["normalised"]["d0"]["text"] == "-1/2 + i(1/4 - 1/4√5)");
  CHECK(m["normalised"]["nu4"]["text"] == "1");
  for (auto it = m["normalised"]["checks"].begin(); it != m["normalised"]["checks"].end(); ++it) CHECK(it.value() == true);
}

TEST_CASE("usage errors") {
  CHECK_THROWS_AS(cli::cmd_larson("1", "1", 4), cli::UsageError);
  CHECK_THROWS_AS(cli::cmd_larson("x", "1", 5), cli::UsageError);
  CHECK_THROWS_AS(cli::cmd_larson("1", "1.5", 5), cli::UsageError);
  CHECK_THROWS_AS(cli::cmd_bound(0, false), cli::UsageError);
  CHECK_THROWS_AS(cli::cmd_classify("r3"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_pairs("1:2,3"), cli::UsageError);
  CHECK(cli::parse_pairs("1:2,0:3") == std::vector<std::pair<long, long>>{{1, 2}, {0, 3}});
}

TEST_CASE("exit codes") {
  CHECK(run("larson -u -4 -v -12 -t 5") == 0);
  CHECK(run("larson -u 1 -v 1 -t 4") == 2);
  CHECK(run("classify r2-plus") == 0);
  CHECK(run("classify nope") == 2);
  CHECK(run("ring --m -1 --n 0") == 2);
  CHECK(run("ring --sd --nsd --m 1 --n 0") == 2);
  CHECK(run("bound") == 2);
  CHECK(run("bound --max 5 --json") == 0);
  CHECK(run("--bogus") == 2);
  CHECK(run("") == 2);
  CHECK(run("--help") == 0);
  CHECK(run("assignment-check --m 2 --n 2 --x 4,1,1 --xp 0,1,1 --y 1,1,1,1 --yp 1,1,1,1") == 0);
  CHECK(run("assignment-check --m 2 --n 2 --x 4,1") == 2);
  CHECK(run("--precision 128 classify s1 --json") == 0);
}

TEST_CASE("precision flag and environment variable") {
  std::string cmd = std::string("RING_PRECISION=512 ") + Z2Q_BIN + " larson -u 1 -v 1 -t 5 --json >/dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
}

}  // TEST_SUITE
