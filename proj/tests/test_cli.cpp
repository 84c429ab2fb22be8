// Copyright 2026 The qgc Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <catch2/catch_amalgamated.hpp>

#include "qgc/cli.hpp"
#include "qgc/random.hpp"

using namespace qgc;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(QGC_SAMPLES_DIR) + "/specs/" + name; }

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("qgc_cli_test_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string line_starting(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(prefix, 0) == 0) return line;
  return "";
}

}  // namespace

TEST_CASE("analyze a named channel as JSON", "[cli]") {
  const Run r = run({"analyze", "--named", "amplitude_damping", "--param", "n=0.75", "--json"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("source").at("name") == "amplitude_damping");
  CHECK(j.at("gaussian").at("is_gaussian") == true);
  CHECK(j.at("degradability").at("verdict").at("kind") == "weakly_degradable");
  CHECK(j.at("degradability").at("prediction") == "weakly_degradable");
  CHECK(j.at("degradability").at("dilation").at("environment_pure") == true);
  CHECK(j.at("green_function").at("coefficients").size() == 16);
  CHECK(j.at("green_function").at("pretty") ==
        "ζζ* - 0.866025403784·ζξ* + 0.866025403784·ζ*ξ + 0.75·ξξ* + 0.125·ζζ*ξξ*");
  CHECK(j.at("cptp").at("ok") == true);
}

TEST_CASE("analyze the identity spec file", "[cli]") {
  const Run r = run({"analyze", sample("identity.json"), "--json"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  const Json& gp = j.at("gaussian").at("params");
  CHECK(gp.at("a") == Json::array({1.0, 0.0}));
  CHECK(gp.at("b") == Json::array({0.0, 0.0}));
  CHECK(gp.at("c") == 0.0);
  const Json& v = j.at("degradability").at("verdict");
  CHECK(v.at("kind") == "weakly_degradable");
  // D∘id = Ñ makes the witness the replacement channel onto |0⟩⟨0|.
  CHECK(v.at("witness") == Json::array({Json::array({1.0, 0.0, 0.0, 0.0}), Json::array({0.0, 0.0, 0.0, 0.0}),
                                        Json::array({0.0, 0.0, 0.0, 0.0}), Json::array({1.0, 0.0, 0.0, 0.0})}));
}

TEST_CASE("analyze a non-Gaussian channel as text", "[cli]") {
  const Run r = run({"analyze", "--named", "depolarizing", "--param", "s=0.3"});
  REQUIRE(r.code == 0);
  CHECK(line_starting(r.out, "gaussian:") == "gaussian: no");
  CHECK(line_starting(r.out, "gaussian equivalent:") == "gaussian equivalent: none");
  CHECK(line_starting(r.out, "note:").find("not discussed") != std::string::npos);
  CHECK(line_starting(r.out, "green function:") == "green function: ζζ* - 0.7·ζξ* + 0.7·ζ*ξ + 0.7·ξξ*");
  CHECK(line_starting(r.out, "verdict:").empty());
}

TEST_CASE("text report layout", "[cli][format]") {
  const Run r = run({"analyze", "--named", "amplitude_damping", "--param", "n=0.64"});
  REQUIRE(r.code == 0);
  CHECK(line_starting(r.out, "channel:") == "channel: amplitude_damping(n=0.64)");
  CHECK(line_starting(r.out, "canonical:") == "canonical: t = (0, 0, 0.36), lambda = (0.8, 0.8, 0.64)");
  CHECK(line_starting(r.out, "gaussian:") == "gaussian: yes (a = 0.8, b = 0, c = 0.18)");
  CHECK(line_starting(r.out, "prediction:") == "prediction: weakly_degradable");
  CHECK(line_starting(r.out, "verdict:").rfind("verdict: weakly_degradable (residual ", 0) == 0);
  CHECK(r.out.find("witness ptm:\n") != std::string::npos);
}

TEST_CASE("Kraus spec input", "[cli]") {
  const Run r = run({"analyze", sample("bit_phase_flip_kraus.json"), "--json"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  const auto l = j.at("channel").at("lambda");
  CHECK(l[0].get<double>() == Catch::Approx(0.4).margin(1e-12));
  CHECK(l[1].get<double>() == Catch::Approx(1.0).margin(1e-12));
  CHECK(j.at("degradability").at("verdict").at("kind") == "weakly_degradable");
}

TEST_CASE("catalog listing", "[cli]") {
  Run r = run({"catalog"});
  REQUIRE(r.code == 0);
  for (auto n : kAllChannels) CHECK(r.out.find(to_string(n) + "\n") != std::string::npos);
  r = run({"catalog", "--json"});
  REQUIRE(r.code == 0);
  CHECK(r.json().at("channels").size() == 6);
  r = run({"catalog", "--name", "bit_flip"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("λ = (1, 2s−1, 2s−1)") != std::string::npos);
  CHECK(r.out.find("phase_flip") == std::string::npos);
  r = run({"catalog", "--name", "nope", "--json"});
  CHECK(r.code == kExitParse);
  CHECK(r.json().at("error").at("kind") == "parse_error");
}

TEST_CASE("verify subcommand", "[cli]") {
  Run r = run({"verify", "--trials", "1000", "--seed", "42", "--json"});
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(j.at("passed") == true);
  CHECK(j.at("seed") == 42);
  for (const auto& s : j.at("suites")) CHECK(s.at("max_residual").get<double>() < 1e-12);

  r = run({"verify", "--trials", "0"});
  CHECK(r.code == 0);
  CHECK(r.err.find("vacuous") != std::string::npos);

  r = run({"verify", "--trials", "50", "--tol", "1e-20"});
  CHECK(r.code == kExitSuiteFailure);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("exit codes and error documents", "[cli]") {
  TempDir tmp;
  const std::string bad = tmp.write("bad.json", "{\"type\": \"canonical\", \"t\": [0, 0]");
  Run r = run({"analyze", bad, "--json"});
  CHECK(r.code == kExitParse);
  CHECK(r.json().at("error").at("kind") == "parse_error");

  r = run({"analyze", sample("not_cptp.json"), "--json"});
  CHECK(r.code == kExitValidation);
  CHECK(r.json().at("error").at("kind") == "validation_error");

  r = run({"analyze", sample("not_cptp.json")});
  CHECK(r.code == kExitValidation);
  CHECK(r.err.find("not CPTP") != std::string::npos);

  CHECK(run({"analyze", "--named", "bit_flip", "--param", "s=1.5"}).code == kExitValidation);
  CHECK(run({"analyze", "--named", "bit_flip", "--param", "s=abc"}).code == kExitParse);
  CHECK(run({"analyze", "--named", "erasure", "--param", "s=0.1"}).code == kExitParse);
  CHECK(run({"analyze", "--param", "s=0.1"}).code == kExitParse);
  CHECK(run({"analyze"}).code == kExitParse);
  CHECK(run({"analyze", "--named", "bit_flip", "--param", "s=0.1", "--tol", "-1"}).code == kExitParse);
  CHECK(run({"frobnicate"}).code == kExitParse);
  CHECK(run({}).code == kExitParse);
  CHECK(run({"analyze", tmp.path("missing.json")}).code == kExitParse);
  CHECK(run({"analyze", tmp.write("odd.json", R"({"type": "canonical", "t": [0, 0, 0], "lambda": [1, 1, "x"]})")}).code ==
        kExitParse);
  CHECK(run({"analyze", tmp.write("kind.json", R"({"type": "stinespring"})")}).code == kExitParse);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("report channel block round-trips", "[cli][property]") {
  TempDir tmp;
  Rng rng(71);
  for (int i = 0; i < 40; ++i) {
    const CanonicalParams c = random_canonical(rng);
    const std::string spec = tmp.write("in.json", Json{{"schema_version", 1}, {"channel", canonical_json(c)}}.dump());
    const Run first = run({"analyze", spec, "--json"});
    REQUIRE(first.code == 0);
    const Json block = first.json().at("channel");
    const std::string again = tmp.write("again.json", block.dump());
    const Run second = run({"analyze", again, "--json"});
    REQUIRE(second.code == 0);
    const ChannelSpec back = parse_channel_spec(block);
    const auto cb = canonical_from_ptm(back.channel.ptm());
    CHECK((cb.t - c.t).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((cb.lambda - c.lambda).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(second.json().at("channel") == block);
  }
}

TEST_CASE("output is deterministic and ordered by input", "[cli]") {
  const std::vector<std::string> args{"analyze", sample("identity.json"), sample("amplitude_damping.json"),
                                      sample("bit_phase_flip_kraus.json"), "--json"};
  const Run a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const Json j = a.json();
  REQUIRE(j.at("reports").size() == 3);
  CHECK(j.at("reports")[0].at("input") == sample("identity.json"));
  CHECK(j.at("reports")[1].at("result").at("source").at("name") == "amplitude_damping");
  CHECK(j.at("reports")[2].at("input") == sample("bit_phase_flip_kraus.json"));
  CHECK(run({"verify", "--trials", "20", "--seed", "9"}).out == run({"verify", "--trials", "20", "--seed", "9"}).out);

  // A failing input does not disturb the others; the first failure sets the exit code.
  const Run mixed = run({"analyze", sample("identity.json"), sample("not_cptp.json"), "--json"});
  CHECK(mixed.code == kExitValidation);
  CHECK(mixed.json().at("reports")[0].at("result").contains("channel"));
  CHECK(mixed.json().at("reports")[1].at("result").contains("error"));
}

TEST_CASE("--out writes the report to a file", "[cli]") {
  TempDir tmp;
  const std::string path = tmp.path("report.json");
  const Run r = run({"analyze", "--named", "bit_flip", "--param", "s=0.2", "--json", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  CHECK(j.at("source").at("params").at("s") == 0.2);
}
