// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "subsec/cli.hpp"
#include "subsec/errors.hpp"
#include "subsec/harness.hpp"
#include "subsec/io.hpp"

using namespace subsec;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  fs::path dir = fs::temp_directory_path() / "subsec_cli_io_tests";
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  std::string command = std::string(SUBSEC_CLI_PATH) + " " + args;
  int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Instance sample_cardinality_instance() {
  GenParams params;
  params.variant = Variant::kCardinality;
  params.n = 8;
  params.k = 2;
  params.family = "coverage";
  params.seed = 12;
  return gen_instance(params);
}

}  // namespace

TEST_CASE("twelve digit rounding is idempotent and tight") {
  double value = 0.3189570961282427;
  double rounded = round_sig12(value);
  CHECK(round_sig12(rounded) == rounded);
  CHECK(std::abs(rounded - value) < 1e-12);
  CHECK(round_sig12(0.25) == 0.25);
  CHECK(round_sig12(0.0) == 0.0);
}

TEST_CASE("generator determinism") {
  GenParams params;
  params.variant = Variant::kCardinality;
  params.n = 10;
  params.family = "coverage";
  params.seed = 7;
  std::string first = instance_to_json(gen_instance(params)).dump(2);
  std::string second = instance_to_json(gen_instance(params)).dump(2);
  CHECK(first == second);
  params.seed = 8;
  CHECK(instance_to_json(gen_instance(params)).dump(2) != first);
}

TEST_CASE("packing generator hits the sparsity target") {
  GenParams params;
  params.variant = Variant::kPacking;
  params.n = 15;
  params.m = 5;
  params.capacity_ratio = 2.0;
  params.column_sparsity = 3;
  params.seed = 90;
  Instance instance = gen_instance(params);
  const PackingInstance& pi = instance.packing().core;
  int max_nonzeros = 0;
  for (int j = 0; j < pi.n(); ++j) {
    int nonzeros = 0;
    for (int i = 0; i < pi.m(); ++i) {
      if (pi.a[i][j] != 0.0) ++nonzeros;
    }
    CHECK(nonzeros <= 3);
    max_nonzeros = std::max(max_nonzeros, nonzeros);
  }
  CHECK(max_nonzeros == 3);
  CHECK(pi.capacity_ratio() == 2.0);
}

TEST_CASE("matching generator endpoints in range") {
  GenParams params;
  params.variant = Variant::kMatching;
  params.n = 7;
  params.r_size = 3;
  params.seed = 41;
  Instance instance = gen_instance(params);
  const MatchingInstance& mi = instance.matching();
  CHECK_FALSE(mi.edges.empty());
  for (const Edge& e : mi.edges) {
    CHECK(e.l >= 0);
    CHECK(e.l < mi.l_size);
    CHECK(e.r >= 0);
    CHECK(e.r < mi.r_size);
  }
}

TEST_CASE("instance save/load round trip") {
  fs::path dir = temp_dir();
  for (int which = 0; which < 3; ++which) {
    GenParams params;
    params.seed = 600 + which;
    params.n = 9;
    if (which == 0) {
      params.variant = Variant::kCardinality;
      params.family = "concave-cap";
    } else if (which == 1) {
      params.variant = Variant::kMatching;
      params.r_size = 4;
    } else {
      params.variant = Variant::kPacking;
      params.m = 3;
      params.capacity_ratio = 2.0;
      params.column_sparsity = 2;
      params.declare_parameters = true;
    }
    Instance original = gen_instance(params);
    fs::path file = dir / ("roundtrip_" + std::to_string(which) + ".json");
    save_instance(original, file.string());
    Instance loaded = load_instance(file.string());
    // Structural equality via canonical serialization.
    CHECK(instance_to_json(loaded).dump(2) ==
          instance_to_json(original).dump(2));
    // Byte identity of save -> load -> save.
    fs::path second = dir / ("roundtrip_bis_" + std::to_string(which) +
                             ".json");
    save_instance(loaded, second.string());
    CHECK(slurp(file) == slurp(second));
  }
}

TEST_CASE("validation errors name the offending field") {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["variant"] = "packing";
  j["n"] = 2;
  j["oracle"] = {{"family", "modular"}, {"weights", {1.0, 2.0}}};
  j["packing"] = {{"a", {{-0.5, 0.0}}}, {"b", {1.0}}};
  try {
    instance_from_json(j);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    std::string message = e.what();
    CHECK(message.find("nonnegative coefficients required") !=
          std::string::npos);
    CHECK(message.find("packing.a[0][0]") != std::string::npos);
  }

  j["packing"] = {{"a", {{0.5, 1.0}}},
                  {"b", {2.0}},
                  {"declared_capacity_ratio", 7.0}};
  CHECK_THROWS_AS(instance_from_json(j), ValidationError);

  j["packing"] = {{"a", {{0.5, 1.0}}},
                  {"b", {2.0}},
                  {"declared_column_sparsity", 2}};
  CHECK_THROWS_AS(instance_from_json(j), ValidationError);

  // Consistent declarations load.
  j["packing"] = {{"a", {{0.5, 1.0}}},
                  {"b", {2.0}},
                  {"declared_capacity_ratio", 2.0},
                  {"declared_column_sparsity", 1}};
  Instance ok = instance_from_json(j);
  CHECK(ok.packing().declared_capacity_ratio == 2.0);

  j["schema_version"] = 99;
  CHECK_THROWS_AS(instance_from_json(j), ValidationError);
}

TEST_CASE("malformed files raise parse errors with position info") {
  fs::path file = temp_dir() / "broken.json";
  save_text("{ \"variant\": ", file.string());
  try {
    load_instance(file.string());
    FAIL("expected a parse error");
  } catch (const ValidationError& e) {
    std::string message = e.what();
    CHECK(message.find("parse error") != std::string::npos);
  }
  CHECK_THROWS_AS(load_instance("/nonexistent/path.json"), InputError);
}

TEST_CASE("report json round trip and csv numeric agreement") {
  Instance instance = sample_cardinality_instance();
  AlgoConfig config;
  EstimateResult result = estimate_ratio(instance, config, 200, 99);
  Report report = make_report(instance, config, 200, 99, result);
  nlohmann::ordered_json j = report_to_json(report);
  Report loaded = report_from_json(j);
  CHECK(report_to_json(loaded).dump(2) == j.dump(2));

  // CSV carries the same numbers at 12 significant digits.
  std::string csv = report_to_csv(report);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // # stats
  std::getline(lines, line);  // header
  std::getline(lines, line);  // values
  std::istringstream fields(line);
  std::string field;
  std::getline(fields, field, ',');
  CHECK(std::stol(field) == report.stats.trials);
  std::getline(fields, field, ',');
  CHECK(std::strtod(field.c_str(), nullptr) ==
        j["stats"]["mean_ratio"].get<double>());
  std::getline(fields, field, ',');
  CHECK(std::strtod(field.c_str(), nullptr) ==
        j["stats"]["std_err"].get<double>());
}

TEST_CASE("cli bounds table shows the classic constant") {
  fs::path out = temp_dir() / "bounds.txt";
  int code = run_cli("bounds --variant k-secretary --k 1..10 --alpha 1 --out " +
                     out.string());
  CHECK(code == 0);
  std::string table = slurp(out);
  CHECK(table.find("0.36788") != std::string::npos);

  fs::path csv = temp_dir() / "bounds.csv";
  code = run_cli("bounds --variant k-secretary --k 1..3 --format csv --out " +
                 csv.string());
  CHECK(code == 0);
  std::string csv_text = slurp(csv);
  CHECK(csv_text.find("0.367879441171") != std::string::npos);
}

TEST_CASE("cli gen then check exits zero on a coverage instance") {
  fs::path dir = temp_dir();
  fs::path inst = dir / "coverage_instance.json";
  int code = run_cli("gen --variant cardinality --n 9 --k 3 "
                     "--family coverage --seed 5 --out " + inst.string());
  REQUIRE(code == 0);
  Instance loaded = load_instance(inst.string());
  CHECK(loaded.variant == Variant::kCardinality);

  fs::path report = dir / "check.txt";
  code = run_cli("check --instance " + inst.string() + " --out " +
                 report.string());
  CHECK(code == 0);
  std::string text = slurp(report);
  CHECK(text.find("monotone: pass") != std::string::npos);
  CHECK(text.find("submodular: pass") != std::string::npos);
}

TEST_CASE("cli estimate reports are byte identical for equal seeds") {
  fs::path dir = temp_dir();
  fs::path inst = dir / "estimate_instance.json";
  REQUIRE(run_cli("gen --variant cardinality --n 8 --k 2 --family modular "
                  "--seed 10 --out " + inst.string()) == 0);
  fs::path r1 = dir / "report1.json";
  fs::path r2 = dir / "report2.json";
  std::string base = "estimate --instance " + inst.string() +
                     " --trials 300 --seed 77 --out ";
  REQUIRE(run_cli(base + r1.string()) == 0);
  REQUIRE(run_cli(base + r2.string()) == 0);
  CHECK(slurp(r1) == slurp(r2));
}

TEST_CASE("cli replay reproduces and detects tampering") {
  fs::path dir = temp_dir();
  fs::path inst = dir / "replay_instance.json";
  REQUIRE(run_cli("gen --variant cardinality --n 7 --k 2 --family coverage "
                  "--seed 20 --out " + inst.string()) == 0);
  fs::path report = dir / "replay_report.json";
  REQUIRE(run_cli("estimate --instance " + inst.string() +
                  " --trials 250 --seed 5 --out " + report.string()) == 0);
  CHECK(run_cli("replay --report " + report.string()) == 0);

  // Tamper with the stored mean and expect a mismatch exit code.
  nlohmann::ordered_json j =
      nlohmann::ordered_json::parse(slurp(report));
  j["stats"]["mean_ratio"] = 0.123456789;
  save_text(j.dump(2) + "\n", report.string());
  CHECK(run_cli("replay --report " + report.string()) == 2);
}

TEST_CASE("cli error paths") {
  CHECK(run_cli("estimate --instance /missing.json 2>/dev/null") == 1);
  CHECK(run_cli("frobnicate 2>/dev/null") == 1);
  CHECK(run_cli("bounds --no-such-flag 2>/dev/null") == 1);
  CHECK(run_cli("gen --variant packing --n 4 --m 5 --column-sparsity 9 "
                "2>/dev/null") == 1);
}

TEST_CASE("cli run prints a full trace") {
  fs::path dir = temp_dir();
  fs::path inst = dir / "run_instance.json";
  REQUIRE(run_cli("gen --variant matching --n 6 --r-size 3 --seed 3 --out " +
                  inst.string()) == 0);
  fs::path trace = dir / "trace.json";
  REQUIRE(run_cli("run --instance " + inst.string() +
                  " --solver brute-force --seed 9 --out " + trace.string()) ==
          0);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(slurp(trace));
  CHECK(j["variant"] == "matching");
  CHECK(j["rounds"].size() == 6);
  CHECK(j.contains("final_value"));
}

TEST_CASE("cli estimate on a packing instance emits audits") {
  fs::path dir = temp_dir();
  fs::path inst = dir / "packing_instance.json";
  REQUIRE(run_cli("gen --variant packing --n 10 --m 3 --capacity-ratio 2 "
                  "--column-sparsity 2 --declare --seed 6 --out " +
                  inst.string()) == 0);
  fs::path report = dir / "packing_report.json";
  REQUIRE(run_cli("estimate --instance " + inst.string() +
                  " --trials 40 --cg-steps 25 --seed 2 --out " +
                  report.string()) == 0);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(slurp(report));
  CHECK(j["benchmark"]["kind"] == "fractional-continuous-greedy");
  CHECK(j["benchmark"].contains("integral_value"));
  CHECK(j.contains("packing_audit"));
  CHECK(j["packing_audit"]["violations"] == 0);
  CHECK(run_cli("replay --report " + report.string()) == 0);
}

TEST_CASE("cli check runs the collision audit") {
  fs::path dir = temp_dir();
  fs::path inst = dir / "audit_instance.json";
  REQUIRE(run_cli("gen --variant matching --n 8 --r-size 4 --seed 13 --out " +
                  inst.string()) == 0);
  fs::path out = dir / "audit.txt";
  REQUIRE(run_cli("check --instance " + inst.string() +
                  " --audit-trials 300 --out " + out.string()) == 0);
  std::string text = slurp(out);
  CHECK(text.find("collision-rate audit: pass") != std::string::npos);
}

TEST_CASE("cli estimate csv format") {
  fs::path dir = temp_dir();
  fs::path inst = dir / "csv_instance.json";
  REQUIRE(run_cli("gen --variant cardinality --n 8 --k 2 --family modular "
                  "--seed 44 --out " + inst.string()) == 0);
  fs::path json_out = dir / "r.json";
  fs::path csv_out = dir / "r.csv";
  std::string base = "estimate --instance " + inst.string() +
                     " --trials 100 --seed 1 ";
  REQUIRE(run_cli(base + "--out " + json_out.string()) == 0);
  REQUIRE(run_cli(base + "--format csv --out " + csv_out.string()) == 0);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(slurp(json_out));
  std::string csv = slurp(csv_out);
  // The csv contains the same mean at 12 significant digits.
  char expected[48];
  std::snprintf(expected, sizeof(expected), "%.12g",
                j["stats"]["mean_ratio"].get<double>());
  CHECK(csv.find(expected) != std::string::npos);
}
