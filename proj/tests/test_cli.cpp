#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "cuntz/json_io.hpp"

using cuntz::io::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code{};
  std::string out;
};

RunResult run_tool(const std::string& args) {
  std::string cmd = std::string(CUNTZREP_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

fs::path scratch_dir() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / "cuntzrep-cli-test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
  fs::path p = scratch_dir() / name;
  std::ofstream(p) << content;
  return p;
}

const char* kHaarTuple =
    R"({"N": 2, "d": 1, "Z": [[["1/2*sqrt2", 0]], [["1/2*sqrt2", 0]]]})";
const char* kHaarBank =
    R"({"N": 2, "filters": [{"coeffs": {"0": ["1/2*sqrt2", 0], "1": ["1/2*sqrt2", 0]}},
                            {"coeffs": {"0": ["1/2*sqrt2", 0], "1": ["-1/2*sqrt2", 0]}}]})";
const char* kShiftBank =
    R"({"N": 2, "filters": [{"coeffs": {"0": [1, 0]}}, {"coeffs": {"1": [1, 0]}}]})";
const char* kFourierTriple = R"({"R": 2, "B": [0, 1], "L": [0, 1]})";

}  // namespace

TEST_CASE("analyze-fincorr on the exact Haar tuple") {
  auto input = write_file("haar_tuple.json", kHaarTuple);
  auto r = run_tool("analyze-fincorr " + input.string() + " --exact --measure-depth 3");
  CHECK(r.exit_code == 0);
  json report = json::parse(r.out);
  CHECK(report["validation"]["ok"] == true);
  CHECK(report["classification"]["purely_atomic"]["verdict"] == "refuted");
  CHECK(report["classification"]["purely_atomic"]["mass_deficit"] == 1.0);
  for (const auto& entry : report["cylinder_measures"]) {
    double expected = std::pow(0.5, entry["letters"].size());
    CHECK(entry["measure"][0][0].get<double>() == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("analyze-fincorr rejects invalid tuples with exit code 2") {
  auto input = write_file("bad_tuple.json", R"({"N": 2, "d": 1, "Z": [[[1, 0]], [[1, 0]]]})");
  auto r = run_tool("analyze-fincorr " + input.string());
  CHECK(r.exit_code == 2);
  json report = json::parse(r.out);
  CHECK(report["validation"]["ok"] == false);
  CHECK(report["validation"]["defect"] == 1.0);
}

TEST_CASE("malformed input exits 1") {
  auto input = write_file("broken.json", "{not json");
  CHECK(run_tool("analyze-fincorr " + input.string()).exit_code == 1);
  auto wrong = write_file("wrong_schema.json", R"({"N": 2})");
  CHECK(run_tool("analyze-fincorr " + wrong.string()).exit_code == 1);
  CHECK(run_tool("analyze-fincorr " + std::string("/nonexistent.json")).exit_code == 1);
}

TEST_CASE("analyze-qmf on the Haar bank") {
  auto input = write_file("haar_bank.json", kHaarBank);
  auto r = run_tool("analyze-qmf " + input.string() + " --exact");
  CHECK(r.exit_code == 0);
  json report = json::parse(r.out);
  CHECK(report["qmf"]["ok"] == true);
  CHECK(report["low_pass"] == true);
  CHECK(report["atom_certificates"].empty());
  CHECK(report["invariant_exponents"] == json::array({0}));
  CHECK(report["classification"]["purely_atomic"]["verdict"] == "refuted");
  CHECK(report["pipelines_agree"] == true);
  // The same file runs on the floating-point path: string scalars evaluate
  // numerically there.
  auto rf = run_tool("analyze-qmf " + input.string());
  CHECK(rf.exit_code == 0);
  json fr = json::parse(rf.out);
  CHECK(fr["qmf"]["ok"] == true);
  CHECK(fr["low_pass"] == true);
}

TEST_CASE("analyze-qmf on the shift bank finds both atoms") {
  auto input = write_file("shift_bank.json", kShiftBank);
  auto r = run_tool("analyze-qmf " + input.string() + " --exact");
  CHECK(r.exit_code == 0);
  json report = json::parse(r.out);
  REQUIRE(report["atom_certificates"].size() == 2);
  CHECK(report["atom_certificates"][0]["cycle"] == json::array({0}));
  CHECK(report["atom_certificates"][0]["eigen_exponent"] == 0);
  CHECK(report["atom_certificates"][1]["cycle"] == json::array({1}));
  CHECK(report["atom_certificates"][1]["eigen_exponent"] == -1);
  CHECK(report["classification"]["purely_atomic"]["verdict"] == "proven");
  CHECK(report["classification"]["permutative"] == true);
  CHECK(report["pipelines_agree"] == true);
}

TEST_CASE("analyze-qmf rejects non-QMF banks with exit code 2") {
  auto input = write_file(
      "bad_bank.json",
      R"({"N": 2, "filters": [{"coeffs": {"0": [1, 0]}}, {"coeffs": {"0": [1, 0]}}]})");
  auto r = run_tool("analyze-qmf " + input.string() + " --exact");
  CHECK(r.exit_code == 2);
  json report = json::parse(r.out);
  CHECK(report["qmf"]["ok"] == false);
  CHECK(!report["qmf"]["violations"].empty());
}

TEST_CASE("hadamard-spectrum reproduces the Fourier-series example") {
  auto input = write_file("fourier.json", kFourierTriple);
  auto r = run_tool("hadamard-spectrum " + input.string() + " --bound 100 --depth 30");
  CHECK(r.exit_code == 0);
  json report = json::parse(r.out);
  REQUIRE(report["extreme_cycles"].size() == 2);
  const auto& c0 = report["extreme_cycles"][0];
  const auto& c1 = report["extreme_cycles"][1];
  CHECK(c0["points"] == json::array({0}));
  CHECK(c1["points"] == json::array({1}));
  CHECK(c0["lambda_slice"].size() == 101);
  CHECK(c0["lambda_slice"][0] == 0);
  CHECK(c0["lambda_slice"][100] == 100);
  CHECK(c1["lambda_slice"].size() == 100);
  CHECK(c1["lambda_slice"][0] == -100);
  CHECK(report["descriptor"]["orbits"].size() == 2);
  for (const auto& o : report["extreme_cycles"][0]["fourier_orthogonality"])
    CHECK(o["value"].get<double>() <= 1e-8);
}

TEST_CASE("hadamard-spectrum rejects non-Hadamard data with exit code 2") {
  auto input = write_file("bad_triple.json", R"({"R": 2, "B": [0, 1], "L": [0, 2]})");
  auto r = run_tool("hadamard-spectrum " + input.string());
  CHECK(r.exit_code == 2);
  json report = json::parse(r.out);
  CHECK(report["check"]["ok"] == false);
}

TEST_CASE("walsh subcommand") {
  auto input = write_file(
      "walsh.json",
      R"({"N": 2, "A": [[["1/2*sqrt2", 0], ["1/2*sqrt2", 0]],
                        [["1/2*sqrt2", 0], ["-1/2*sqrt2", 0]]]})");
  auto r = run_tool("walsh " + input.string() + " --exact --max-len 3");
  CHECK(r.exit_code == 0);
  json report = json::parse(r.out);
  CHECK(report["valid"] == true);
  CHECK(report["gram"]["size"] == 8);
  CHECK(report["gram"]["is_identity"] == true);
  CHECK(report["gram"]["max_defect"] == 0.0);
  CHECK(report["descriptor"]["orbits"].size() == 1);
  auto bad = write_file("walsh_bad.json",
                        R"({"N": 2, "A": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]})");
  CHECK(run_tool("walsh " + bad.string() + " --exact").exit_code == 2);
}

TEST_CASE("encode-word") {
  auto input = write_file("fourier2.json", kFourierTriple);
  auto r = run_tool("encode-word " + input.string() + " --lambda 5");
  CHECK(r.exit_code == 0);
  json report = json::parse(r.out);
  CHECK(report["encodable"] == true);
  CHECK(report["word"]["pre"] == json::array({1, 0, 1}));
  CHECK(report["word"]["cyc"] == json::array({0}));
  auto gap = write_file("gap4.json", R"({"R": 4, "B": [0, 2], "L": [0, 1]})");
  auto r2 = run_tool("encode-word " + gap.string() + " --lambda 2");
  CHECK(r2.exit_code == 0);
  json report2 = json::parse(r2.out);
  CHECK(report2["encodable"] == false);
  CHECK(report2["failed_at_step"] == 0);
}

TEST_CASE("compare subcommand") {
  json d1{{"N", 2},
          {"orbits", json::array({json{{"rep", {{"N", 2}, {"pre", json::array()},
                                                {"cyc", json::array({0})}}},
                                       {"mult", 1},
                                       {"spectrum", json::array({json::array({1.0, 0.0})})}}})}};
  json d2 = d1;
  d2["orbits"][0]["rep"]["cyc"] = json::array({1});
  auto p1 = write_file("desc1.json", d1.dump());
  auto p2 = write_file("desc2.json", d2.dump());
  auto same = run_tool("compare " + p1.string() + " " + p1.string());
  CHECK(same.exit_code == 0);
  json sr = json::parse(same.out);
  CHECK(sr["equivalent"] == true);
  CHECK(sr["disjoint"] == false);
  CHECK(sr["irreducible"] == json::array({true, true}));
  auto diff = run_tool("compare " + p1.string() + " " + p2.string());
  json dr = json::parse(diff.out);
  CHECK(dr["equivalent"] == false);
  CHECK(dr["disjoint"] == true);
}

TEST_CASE("reports are byte-identical across runs") {
  auto tuple = write_file("det_tuple.json", kHaarTuple);
  auto a = run_tool("analyze-fincorr " + tuple.string() + " --exact");
  auto b = run_tool("analyze-fincorr " + tuple.string() + " --exact");
  CHECK(a.out == b.out);
  auto triple = write_file("det_triple.json", kFourierTriple);
  auto c = run_tool("hadamard-spectrum " + triple.string());
  auto d = run_tool("hadamard-spectrum " + triple.string());
  CHECK(c.out == d.out);
  CHECK(!json::parse(a.out).empty());
}

TEST_CASE("emitted descriptors re-parse and compare equal to themselves") {
  auto input = write_file("rt_triple.json", kFourierTriple);
  auto r = run_tool("hadamard-spectrum " + input.string());
  json report = json::parse(r.out);
  auto descriptor = cuntz::io::descriptor_from_json(report["descriptor"]);
  auto reparsed = cuntz::io::descriptor_from_json(
      json::parse(cuntz::io::descriptor_to_json(descriptor).dump()));
  CHECK(cuntz::classify::equivalent(descriptor, reparsed));
}

TEST_CASE("text format renders") {
  auto input = write_file("text_tuple.json", kHaarTuple);
  auto r = run_tool("analyze-fincorr " + input.string() + " --exact --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict") != std::string::npos);
  CHECK(r.out.find("refuted") != std::string::npos);
}
