#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "slnchar/json_io.hpp"

using namespace slnchar;
using slnchar::json_io::Json;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> group(int n, int q, const std::string& eps) {
  return {"--n", std::to_string(n), "--q", std::to_string(q), "--epsilon", eps};
}

std::vector<std::string> cmd(const std::string& name, std::vector<std::string> g, std::vector<std::string> extra = {}) {
  std::vector<std::string> out{name};
  out.insert(out.end(), g.begin(), g.end());
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

}  // namespace

TEST_CASE("labels") {
  auto r = run(cmd("labels", group(2, 3, "+1")));
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["schema"] == 1);
  CHECK(j["records"].size() == 7);
  CHECK(r.out.back() == '\n');

  CHECK(run(cmd("labels", group(3, 2, "-1"))).json()["records"].size() == 16);
  CHECK(run(cmd("labels", group(1, 5, "+1"))).json()["records"].size() == 4);

  auto csv = run(cmd("labels", group(2, 3, "+1"), {"--csv"}));
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("s,lambda,xi,xi_mod,degree,a,a_lambda,wave_front,d_nu\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 8);

  auto series = run(cmd("labels", group(2, 3, "+1"), {"--series", R"([[["1/2"],1],[["0/1"],1]])"}));
  CHECK(series.code == 0);
  CHECK(series.json()["records"].size() == 2);

  // Degrees in the records are numbers; big ones would be strings.
  for (const auto& rec : run(cmd("labels", group(6, 8, "-1"), {"--series", R"([[["0/1"],6]])"})).json()["records"])
    CHECK((rec["degree"].is_number_integer() || rec["degree"].is_string()));
}

TEST_CASE("exit codes") {
  CHECK(run(cmd("labels", group(2, 6, "+1"))).code == cli::kUsage);
  CHECK(run(cmd("labels", group(2, 3, "0"))).code == cli::kUsage);
  CHECK(run({"labels", "--n", "2"}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run(cmd("labels", group(13, 2, "+1"))).code == cli::kResource);
  CHECK(run(cmd("verify", group(3, 5, "+1"))).code == cli::kResource);
  CHECK(run(cmd("act", group(2, 3, "+1"), {"--sigma", "1,0"}), "{\"s\":").code == cli::kMalformed);
  CHECK(run(cmd("act", group(2, 3, "+1"), {"--sigma", "1,0"}), R"({"s":[[["0/1"],1],[["1/2"],1]],"lambda":[[["0/1"],[1]],[["1/2"],[1]]],"xi":{"value":0,"mod":3}})")
            .code == cli::kMalformed);
  CHECK(run(cmd("act", group(2, 3, "+1"), {"--sigma", "x"}), "{}").code == cli::kUsage);
  CHECK(run(cmd("verify", group(2, 3, "+1"), {"--suite", "nope"})).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("act") {
  const auto g = group(3, 4, "+1");
  const std::string chi = R"({"s":[[["1/9","4/9","7/9"],1]],"lambda":[[["1/9","4/9","7/9"],[1]]],"xi":{"value":1,"mod":3}})";

  auto id = run(cmd("act", g, {"--sigma", "0,0"}), chi);
  REQUIRE(id.code == 0);
  CHECK(id.json()["records"][0] == Json::parse(chi));

  auto f2 = run(cmd("act", g, {"--sigma", "1,0"}), chi);
  auto expected = Json::parse(R"({"s":[[["2/9","5/9","8/9"],1]],"lambda":[[["2/9","5/9","8/9"],[1]]],"xi":{"value":2,"mod":3}})");
  CHECK(f2.json()["records"][0] == expected);

  // act(sigma) twice equals act(sigma^2), over every label, piping records through.
  auto all = run(cmd("labels", g)).out;
  for (std::string s : {"1,0", "0,1", "1,1"}) {
    auto once = run(cmd("act", g, {"--sigma", s}), all);
    auto twice = run(cmd("act", g, {"--sigma", s}), once.out);
    std::string sq = s == "1,0" ? "2,0" : s == "0,1" ? "0,0" : "2,0";
    auto direct = run(cmd("act", g, {"--sigma", sq}), all);
    REQUIRE(twice.code == 0);
    CHECK(twice.json()["records"] == direct.json()["records"]);
  }
}

TEST_CASE("gggc and degrees") {
  auto r = run(cmd("gggc", group(2, 3, "+1"), {"--nu", "2"}));
  REQUIRE(r.code == 0);
  auto recs = r.json()["records"];
  CHECK(recs.size() == 6);  // all but the trivial character
  for (const auto& rec : recs) CHECK(rec["contained_in"].size() == rec["d_nu"].get<int>() / rec["a_lambda"].get<int>());

  auto d = run(cmd("degrees", group(2, 3, "+1"))).json();
  CHECK(d["sum_of_squares"] == d["order"]);
  CHECK(d["class_number"] == 7);
}

TEST_CASE("verify and oracle tables") {
  auto r = run(cmd("verify", group(2, 3, "+1"), {"--suite", "all", "--json"}));
  CHECK(r.code == 0);
  auto j = r.json();
  CHECK(j["passed"] == true);
  CHECK(j["calibrated_unit"] == 1);

  auto text = run(cmd("verify", group(3, 2, "-1"), {"--suite", "ggc"}));
  CHECK(text.code == 0);
  CHECK(text.out.find("FAIL") == std::string::npos);

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("slnchar_cli_cache_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  auto plain = run(cmd("oracle-table", group(2, 5, "+1")));
  auto cold = run(cmd("oracle-table", group(2, 5, "+1"), {"--cache", dir.string()}));
  auto warm = run(cmd("oracle-table", group(2, 5, "+1"), {"--cache", dir.string(), "--threads", "3"}));
  CHECK(plain.code == 0);
  CHECK(plain.out == cold.out);
  CHECK(plain.out == warm.out);
  CHECK(plain.json()["records"].size() == 9);

  fs::path file = dir / "table.json";
  CHECK(run(cmd("oracle-table", group(2, 5, "+1"), {"--group", "gl", "--out", file.string()})).code == 0);
  std::ifstream in(file);
  CHECK(Json::parse(in)["records"].size() == 24);
  fs::remove_all(dir);
}
