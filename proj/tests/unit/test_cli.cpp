#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ordlen/io.hpp"
#include "ordlen_cli/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ordlen::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(ORDLEN_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const std::vector<std::string> bivalent{"--vars", "x,y", "--ideal", "x^2,x*y"};

std::vector<std::string> cmd(std::string c, std::vector<std::string> extra = bivalent) {
  extra.insert(extra.begin(), std::move(c));
  return extra;
}

std::vector<std::string> as_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  return args;
}

} // namespace

TEST_CASE("length of the bivalent ring") {
  const Run r = run(cmd("len"));
  CHECK(r.code == 0);
  CHECK(r.out == "w + 1\n");
}

TEST_CASE("length of the polynomial ring") {
  const Run r = run({"len", "--vars", "x,y", "--ideal", ""});
  CHECK(r.code == 0);
  CHECK(r.out == "w^2\n");
}

TEST_CASE("text goldens") {
  CHECK(run(cmd("profile")).out == golden("profile_bivalent.txt"));
  CHECK(run(cmd("filtration")).out == golden("filtration_bivalent.txt"));
  CHECK(run(cmd("endo", {"--vars", "x,y", "--ideal", "x^2,x*y", "--mult", "y"})).out ==
        golden("endo_y_bivalent.txt"));
  CHECK(run(cmd("prim", {"--vars", "x,y", "--ideal", "x^2,x*y", "--prime", "x"})).out ==
        golden("prim_x_bivalent.txt"));
}

TEST_CASE("json goldens") {
  CHECK(json::parse(run(as_json(cmd("fcyc"))).out) == json::parse(golden("fcyc_bivalent.json")));
  CHECK(json::parse(run(as_json(cmd("profile"))).out) ==
        json::parse(golden("profile_bivalent.json")));
}

TEST_CASE("text and json carry the same data") {
  const std::vector<std::vector<std::string>> inputs{
      bivalent,
      {"--vars", "x,y,z", "--ideal", "x*y, x*z^2"},
      {"--module", "vars: x,y ; I: x, y ; J: x^3, x*y^2"},
      {"--vars", "x,y", "--ideal", "x^2"}};
  for (const auto& in : inputs) {
    const Run t = run(cmd("len", in));
    const Run j = run(as_json(cmd("len", in)));
    REQUIRE(t.code == 0);
    REQUIRE(j.code == 0);
    const json doc = json::parse(j.out);
    const auto text_value = ordlen::parse_ordinal(t.out.substr(0, t.out.size() - 1));
    CHECK(ordlen::io::ordinal_from_json(doc["result"]["length"]) == text_value);

    const Run ft = run(cmd("fcyc", in));
    const json fj = json::parse(run(as_json(cmd("fcyc", in))).out);
    const auto module = ordlen::io::module_from_json(doc["module"]);
    CHECK(ordlen::io::format_cycle(ordlen::io::cycle_from_json(fj["result"]["fcyc"]), module.vars) +
              "\n" ==
          ft.out);

    const Run at = run(cmd("ass", in));
    const json aj = json::parse(run(as_json(cmd("ass", in))).out);
    std::string joined;
    for (const auto& p : aj["result"]["ass"]) joined += p.get<std::string>() + "\n";
    CHECK(joined == at.out);
  }
}

TEST_CASE("input file and stdin forms agree with inline flags") {
  const std::string path = "ordlen_cli_module.txt";
  {
    std::ofstream f(path);
    f << "vars: x,y ; J: x^2, x*y\n";
  }
  CHECK(run({"len", "--input", path}).out == "w + 1\n");
  {
    std::ofstream f(path);
    f << R"({"I":{"vars":["x","y"],"gens":[[0,0]]},"J":{"vars":["x","y"],"gens":[[2,0],[1,1]]}})";
  }
  CHECK(run({"len", "--input", path}).out == "w + 1\n");
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(run({"len", "--vars", "x,y", "--ideal", "x^^2"}).code == ordlen::cli::kExitParse);
  CHECK(run({"len", "--vars", "x,y", "--ideal", "z"}).code == ordlen::cli::kExitParse);
  CHECK(run({"len", "--ideal", "x"}).code == ordlen::cli::kExitParse);
  CHECK(run({"len", "--module", "vars: x ; I: x^2 ; J: x"}).code == ordlen::cli::kExitParse);
  CHECK(run({"len", "--input", "/nonexistent/file"}).code == ordlen::cli::kExitParse);
  CHECK(run({"frobnicate"}).code == ordlen::cli::kExitParse);
  CHECK(run({"check", "nope"}).code == ordlen::cli::kExitParse);
  const Run guard = run({"len", "--vars", "x", "--ideal", "x^99999999999"});
  CHECK(guard.code == ordlen::cli::kExitGuard);
  CHECK(guard.err.find("guard") != std::string::npos);
  const Run located = run({"len", "--vars", "x,y", "--ideal", "x, q"});
  CHECK(located.err.find("offset 3") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("check reports") {
  const Run r = run({"check", "examples"});
  CHECK(r.code == 0);
  CHECK(r.out.find("CHECK examples") != std::string::npos);
  CHECK(r.out.find("ALL PASS") != std::string::npos);
  const json doc = json::parse(run({"check", "examples", "--format", "json"}).out);
  CHECK(doc["pass"] == true);
  CHECK(doc["checks"].size() > 0);
}

TEST_CASE("oracle dimension guard override") {
  setenv("ORDLEN_MAX_DIM", "4", 1);
  const Run r = run({"check", "oracle-artinian"});
  unsetenv("ORDLEN_MAX_DIM");
  CHECK(r.code == ordlen::cli::kExitGuard);
  setenv("ORDLEN_MAX_DIM", "abc", 1);
  CHECK(run({"check", "oracle-artinian"}).code == ordlen::cli::kExitParse);
  unsetenv("ORDLEN_MAX_DIM");
}
