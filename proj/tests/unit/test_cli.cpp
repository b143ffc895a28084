#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "crspan/builtins.hpp"
#include "crspan/json_io.hpp"

using namespace crspan;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "crspan");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = 0;
  const auto cfg = cli::parse_args(static_cast<int>(argv.size()), argv.data(), out, err, code);
  if (cfg) code = cli::run(*cfg, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("crspan_test_" + name);
  std::ofstream(p) << text;
  return p.string();
}

json::json parse(const std::string& s) { return json::json::parse(s); }

}  // namespace

TEST_CASE("analyze builtin dt") {
  const Outcome o = run_cli({"analyze", "--builtin", "dt", "--n", "2", "--u", "1/2", "--format", "json"});
  CHECK(o.code == cli::kExitOk);
  const auto j = parse(o.out);
  CHECK(j["d"] == 2);
  CHECK(j["k"] == 1);
  CHECK(j["plane_bound"] == 6);
  CHECK(j["image_span"] == 6);
  CHECK(j["sharp"] == true);
  CHECK(j["l0"] == 2);

  const Outcome t = run_cli({"analyze", "--builtin", "dt", "--n", "2", "--u", "1/2", "--approx"});
  CHECK(t.code == 0);
  CHECK(t.out.find("plane bound") != std::string::npos);
  CHECK(t.out.find(" ~ ") != std::string::npos);
}

TEST_CASE("analyze output is deterministic") {
  const std::vector<std::string> args{"analyze", "--builtin", "hst", "--n", "3", "--format", "json", "--seed", "5",
                                      "--trials", "4"};
  const Outcome a = run_cli(args), b = run_cli(args);
  CHECK(a.out == b.out);
  CHECK(a.code == 0);
  // the report re-parses into the verdict that produced it
  const auto j = parse(a.out);
  const auto v = json::verdict_from_json(j);
  CHECK(v.image_span() == 12);
  CHECK(json::to_json(v)["plane_bound"] == j["plane_bound"]);
}

TEST_CASE("hypothesis failure exits 2 with a report") {
  const Outcome o = run_cli({"analyze", "--builtin", "hst", "--n", "2", "--format", "json"});
  CHECK(o.code == cli::kExitHypothesisFailed);
  CHECK(parse(o.out)["hypothesis_ok"] == false);
  CHECK(o.err.find("hypothesis") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  const std::string good = write_temp("dt.json", json::to_json(builtin_dt(2, Rational(1, 2))).dump());
  CHECK(run_cli({"verify", "--input", good}).code == cli::kExitOk);

  const std::string bad =
      write_temp("dt_bad.json", json::to_json(dt_family(2, Rational(3, 5), Rational(3, 5))).dump());
  const Outcome o = run_cli({"verify", "--input", bad, "--format", "json"});
  CHECK(o.code == cli::kExitNotSphereMap);
  CHECK(parse(o.out)["verified"] == false);
  CHECK(!parse(o.out)["remainder"].empty());
  CHECK(o.err.find("remainder") != std::string::npos);

  CHECK(run_cli({"analyze", "--input", bad}).code == cli::kExitNotSphereMap);
}

TEST_CASE("malformed input exits 3") {
  CHECK(run_cli({"analyze", "--input", write_temp("junk.json", "{not json")}).code == cli::kExitMalformedInput);
  CHECK(run_cli({"analyze", "--input", write_temp("short.json", R"({"n":2,"N":5,"components":[]})")}).code ==
        cli::kExitMalformedInput);
  CHECK(run_cli({"analyze", "--input", "/nonexistent/file.json"}).code == cli::kExitMalformedInput);
  CHECK(run_cli({"analyze"}).code == cli::kExitMalformedInput);
  CHECK(run_cli({"analyze", "--builtin", "dt", "--trials", "0"}).code == cli::kExitMalformedInput);
  CHECK(run_cli({"analyze", "--builtin", "nope"}).code == cli::kExitMalformedInput);
  CHECK(run_cli({}).code == cli::kExitMalformedInput);
  CHECK(run_cli({"analyze", "--builtin", "dt", "--u", "1/0"}).code == cli::kExitMalformedInput);
  CHECK(run_cli({"identity-solve", "--input",
                 write_temp("dep.json", R"({"n":2,"degree":1,"p":[[{"coeff":1,"z":[1,0]}],[{"coeff":2,"z":[1,0]}]]})")})
            .code == cli::kExitMalformedInput);
}

TEST_CASE("help exits 0") {
  const Outcome o = run_cli({"--help"});
  CHECK(o.code == 0);
  CHECK(o.out.find("identity-sharp") != std::string::npos);
}

TEST_CASE("identity commands") {
  const Outcome sharp = run_cli({"identity-sharp", "--n", "3", "--k", "2", "--format", "json"});
  CHECK(sharp.code == 0);
  const auto j = parse(sharp.out);
  CHECK(j["dim"] == 2);
  CHECK(j["solutions"].size() == 2);
  CHECK(j["lemma_bound"] == 2);
  CHECK(j["tight"] == true);
  CHECK(j["long_prefix"]["m"] == 6);

  const std::string prob = write_temp("prob.json", j["problem"].dump());
  const Outcome solve = run_cli({"identity-solve", "--input", prob, "--form", "both", "--format", "json"});
  CHECK(solve.code == 0);
  CHECK(parse(solve.out)["matrix_form"]["dim"] == 2);
  CHECK(parse(solve.out)["conjugate_form"]["dim"] == 2);

  const Outcome check = run_cli({"identity-check", "--input", prob, "--format", "json"});
  CHECK(check.code == 0);
  CHECK(parse(check.out)["tight"] == true);

  const Outcome dec = run_cli({"decompose", "--input", prob, "--format", "json"});
  CHECK(dec.code == 0);
  CHECK(parse(dec.out)["reconstructs"] == true);
  const Outcome dec2 = run_cli({"decompose", "--n", "4", "--k", "3"});
  CHECK(dec2.code == 0);
  CHECK(dec2.out.find("reconstructs p") != std::string::npos);

  CHECK(run_cli({"identity-sharp", "--n", "3", "--k", "3"}).code == cli::kExitMalformedInput);
  CHECK(run_cli({"decompose"}).code == cli::kExitMalformedInput);
}

TEST_CASE("builtin command prints a loadable map") {
  const Outcome o = run_cli({"builtin", "--builtin", "hst", "--n", "2", "--u-s", "1/3", "--u-t", "2", "--format",
                             "json"});
  CHECK(o.code == 0);
  const CRMap f = json::crmap_from_json(parse(o.out));
  CHECK(f == builtin_hst(2, Rational(1, 3), 2));
  const Outcome lin = run_cli({"builtin", "--builtin", "linear", "--n", "2", "--N", "4"});
  CHECK(lin.code == 0);
  CHECK(lin.out.find("f_5") != std::string::npos);
}
