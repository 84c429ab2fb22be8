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

/**
 * @file cli.hpp
 * @brief The `qgc` command line: analyze, catalog and verify.
 *
 * Exit codes: 0 ok, 2 parse error, 3 validation error, 4 suite failure.
 * run_cli writes only to the streams it is given, so tests can drive it
 * in-process.
 */
#pragma once

#include <cstdint>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qgc/catalog.hpp"
#include "qgc/io.hpp"
#include "qgc/verify.hpp"

namespace qgc {

enum ExitCode : int { kExitOk = 0, kExitParse = 2, kExitValidation = 3, kExitSuiteFailure = 4 };

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
  if (dynamic_cast<const ValidationError*>(&e)) return kExitValidation;
  return 1;
}

/// "key=value" with a fully consumed real value.
inline std::pair<std::string, double> parse_param_assignment(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) throw ParseError("--param expects key=value, got '" + s + "'");
  const std::string value = s.substr(eq + 1);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw ParseError("--param " + s.substr(0, eq) + ": '" + value + "' is not a number");
  return {s.substr(0, eq), v};
}

namespace detail {

struct AnalyzeOptions {
  std::vector<std::string> files;
  std::string named;
  std::vector<std::string> params;
  bool json = false;
  double tol = kCertificateTol;
  std::string out;
};

struct VerifyOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  double tol = 1e-12;
  bool json = false;
};

struct CatalogOptions {
  bool json = false;
  std::string name;
};

// One input of a batch: where it came from plus its rendered output.
struct AnalysisJob {
  std::string label;
  std::optional<NamedChannel> named;
  std::optional<std::string> file;
};

struct AnalysisOutcome {
  int code = kExitOk;
  Json json;
  std::string text;
};

inline AnalysisOutcome run_job(const AnalysisJob& job, const AnalysisOptions& opt) {
  AnalysisOutcome o;
  try {
    AnalysisReport r;
    if (job.named) {
      r = analyze(*job.named, opt);
    } else {
      const ChannelSpec spec = parse_channel_spec(read_json_file(*job.file));
      if (spec.named) {
        r = analyze(*spec.named, opt);
      } else {
        r = analyze_channel(spec.channel, opt);
      }
    }
    o.json = report_json(r);
    std::ostringstream ss;
    write_report_text(ss, r);
    o.text = ss.str();
  } catch (const std::exception& e) {
    o.code = exit_code_for(e);
    o.json = error_json(e);
    o.text = std::string("error (") + error_kind(e) + "): " + e.what() + "\n";
  }
  return o;
}

inline int cmd_analyze(const AnalyzeOptions& a, std::ostream& out, std::ostream& err) {
  std::vector<AnalysisJob> jobs;
  try {
    if (!a.params.empty() && a.named.empty()) throw ParseError("--param requires --named");
    if (!a.named.empty()) {
      NamedChannel nc{channel_name_from_string(a.named), {}};
      for (const auto& p : a.params) {
        auto [k, v] = parse_param_assignment(p);
        nc.params[k] = v;
      }
      jobs.push_back({a.named, nc, std::nullopt});
    }
    for (const auto& f : a.files) jobs.push_back({f, std::nullopt, f});
    if (jobs.empty()) throw ParseError("analyze: give at least one spec file or --named");
  } catch (const std::exception& e) {
    if (a.json) {
      out << error_json(e).dump(2) << '\n';
    } else {
      err << "error (" << error_kind(e) << "): " << e.what() << '\n';
    }
    return exit_code_for(e);
  }

  const AnalysisOptions opt{a.tol};
  std::vector<std::future<AnalysisOutcome>> pending;
  pending.reserve(jobs.size());
  for (const auto& job : jobs) pending.push_back(std::async(std::launch::async, run_job, job, opt));
  std::vector<AnalysisOutcome> outcomes;
  for (auto& f : pending) outcomes.push_back(f.get());

  int code = kExitOk;
  for (const auto& o : outcomes)
    if (code == kExitOk) code = o.code;

  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) {
      err << "error (parse_error): cannot write '" << a.out << "'\n";
      return kExitParse;
    }
  }
  std::ostream& dest = a.out.empty() ? out : file;

  if (a.json) {
    if (outcomes.size() == 1) {
      dest << outcomes.front().json.dump(2) << '\n';
    } else {
      Json list = Json::array();
      for (std::size_t i = 0; i < outcomes.size(); ++i) {
        list.push_back(Json{{"input", jobs[i].label}, {"result", outcomes[i].json}});
      }
      dest << Json{{"schema_version", kSchemaVersion}, {"reports", list}}.dump(2) << '\n';
    }
  } else {
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (outcomes.size() > 1) dest << (i ? "\n" : "") << "== " << jobs[i].label << " ==\n";
      if (outcomes[i].code == kExitOk) {
        dest << outcomes[i].text;
      } else {
        err << (outcomes.size() > 1 ? jobs[i].label + ": " : "") << outcomes[i].text;
      }
    }
  }
  return code;
}

inline int cmd_catalog(const CatalogOptions& c, std::ostream& out, std::ostream& err) {
  std::vector<CatalogEntry> entries;
  try {
    if (c.name.empty()) {
      entries = catalog_entries();
    } else {
      entries.push_back(catalog_entry(channel_name_from_string(c.name)));
    }
  } catch (const std::exception& e) {
    if (c.json) {
      out << error_json(e).dump(2) << '\n';
    } else {
      err << "error (" << error_kind(e) << "): " << e.what() << '\n';
    }
    return exit_code_for(e);
  }
  if (c.json) {
    out << catalog_json(entries).dump(2) << '\n';
  } else {
    write_catalog_text(out, entries);
  }
  return kExitOk;
}

inline int cmd_verify(const VerifyOptions& v, std::ostream& out, std::ostream& err) {
  std::vector<std::string> warnings;
  if (v.trials == 0) warnings.push_back("no trials run; the pass is vacuous");
  const auto suites = run_all_suites(v.trials, v.seed, v.tol);
  bool passed = true;
  for (const auto& s : suites) passed = passed && s.passed;

  if (v.json) {
    out << suites_json(suites, v.seed, v.trials, v.tol, warnings).dump(2) << '\n';
  } else {
    for (const auto& w : warnings) err << "warning: " << w << '\n';
    out << "seed " << v.seed << ", trials " << v.trials << ", tolerance " << format_real(v.tol) << '\n';
    for (const auto& s : suites) {
      out << (s.passed ? "PASS " : "FAIL ") << s.name << ": max residual " << format_real(s.max_residual) << '\n';
    }
    out << (passed ? "all suites passed" : "suite failure") << '\n';
  }
  return passed ? kExitOk : kExitSuiteFailure;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grassmann-calculus analysis of qubit channels", "qgc"};
  app.require_subcommand(1);

  detail::AnalyzeOptions a;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze channel specs or a named catalog channel");
  analyze_cmd->add_option("files", a.files, "Channel spec JSON files");
  analyze_cmd->add_option("--named", a.named, "Catalog channel name");
  analyze_cmd->add_option("--param", a.params, "Parameter key=value for --named (repeatable)");
  analyze_cmd->add_flag("--json", a.json, "Emit JSON");
  analyze_cmd->add_option("--tol", a.tol, "Certificate tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  analyze_cmd->add_option("--out", a.out, "Write the report to this path");

  detail::CatalogOptions c;
  auto* catalog_cmd = app.add_subcommand("catalog", "List the named channels");
  catalog_cmd->add_flag("--json", c.json, "Emit JSON");
  catalog_cmd->add_option("--name", c.name, "Show a single channel");

  detail::VerifyOptions v;
  auto* verify_cmd = app.add_subcommand("verify", "Run the randomized self-check suites");
  verify_cmd->add_option("--trials", v.trials, "Trials per suite")->capture_default_str();
  verify_cmd->add_option("--seed", v.seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--tol", v.tol, "Residual tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  verify_cmd->add_flag("--json", v.json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  if (*analyze_cmd) return detail::cmd_analyze(a, out, err);
  if (*catalog_cmd) return detail::cmd_catalog(c, out, err);
  return detail::cmd_verify(v, out, err);
}

/// Convenience overload taking arguments without the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qgc"};
  for (const auto& s : args) argv.push_back(s.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qgc
