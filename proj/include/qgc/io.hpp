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
 * @file io.hpp
 * @brief JSON channel specs and report documents (schema_version 1).
 *
 * A channel spec is either bare or wrapped as
 * `{"schema_version": 1, "channel": {...}}`, with one of
 *
 *   {"type": "canonical", "t": [t1, t2, t3], "lambda": [l1, l2, l3]}
 *   {"type": "named", "name": "amplitude_damping", "params": {"n": 0.75}}
 *   {"type": "kraus", "matrices": [K1, K2, ...]}
 *   {"type": "ptm", "ptm": [[...4], [...4], [...4], [...4]]}
 *
 * A Kraus matrix is four entries in row-major order or two rows of two; an
 * entry is a real number or a [re, im] pair. "kraus" is accepted as an
 * alias of "matrices". The "channel" block of every report is a canonical spec,
 * so reports can be fed back in.
 */
#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "qgc/catalog.hpp"
#include "qgc/errors.hpp"
#include "qgc/verify.hpp"

namespace qgc {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// A parsed channel spec; `named` is set for catalog channels.
struct ChannelSpec {
  QubitChannel channel;
  std::optional<NamedChannel> named;
};

namespace detail {

inline const Json& require_field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline double require_number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  return j.get<double>();
}

inline Vector3 parse_vector3(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) throw ParseError(where + ": expected an array of 3 numbers");
  return Vector3(require_number(j[0], where), require_number(j[1], where), require_number(j[2], where));
}

inline Complex parse_complex(const Json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2) return Complex(require_number(j[0], where), require_number(j[1], where));
  throw ParseError(where + ": expected a number or [re, im]");
}

// Either four entries in row-major order or two rows of two.
inline Matrix2 parse_matrix2(const Json& j, const std::string& where) {
  Matrix2 m;
  if (j.is_array() && j.size() == 4) {
    for (int k = 0; k < 4; ++k) m(k / 2, k % 2) = parse_complex(j[k], where);
    return m;
  }
  if (!j.is_array() || j.size() != 2) throw ParseError(where + ": expected 4 entries or 2 rows");
  for (int r = 0; r < 2; ++r) {
    if (!j[r].is_array() || j[r].size() != 2) throw ParseError(where + ": expected 2 entries per row");
    for (int c = 0; c < 2; ++c) m(r, c) = parse_complex(j[r][c], where);
  }
  return m;
}

inline Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

template <class M>
Json real_matrix_json(const M& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(static_cast<double>(std::real(m(r, c))));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json vector3_json(const Vector3& v) { return Json::array({v(0), v(1), v(2)}); }

}  // namespace detail

inline ChannelSpec parse_channel_spec(const Json& doc) {
  const Json* ch = &doc;
  if (doc.is_object() && doc.contains("channel")) {
    if (doc.contains("schema_version") && doc.at("schema_version") != kSchemaVersion) {
      throw ParseError("channel spec: unsupported schema_version " + doc.at("schema_version").dump());
    }
    ch = &doc.at("channel");
  }
  const Json& type = detail::require_field(*ch, "type", "channel spec");
  if (!type.is_string()) throw ParseError("channel spec: 'type' must be a string");
  const std::string kind = type.get<std::string>();

  if (kind == "canonical") {
    const Vector3 t = detail::parse_vector3(detail::require_field(*ch, "t", "canonical"), "canonical.t");
    const Vector3 l = detail::parse_vector3(detail::require_field(*ch, "lambda", "canonical"), "canonical.lambda");
    return {QubitChannel::canonical(t, l), std::nullopt};
  }
  if (kind == "named") {
    const Json& name = detail::require_field(*ch, "name", "named");
    if (!name.is_string()) throw ParseError("named: 'name' must be a string");
    NamedChannel nc{channel_name_from_string(name.get<std::string>()), {}};
    if (ch->contains("params")) {
      const Json& params = ch->at("params");
      if (!params.is_object()) throw ParseError("named: 'params' must be an object");
      for (const auto& [key, value] : params.items()) nc.params[key] = detail::require_number(value, "named.params." + key);
    }
    return {build(nc), nc};
  }
  if (kind == "kraus") {
    const Json& list = detail::require_field(*ch, ch->contains("kraus") ? "kraus" : "matrices", "kraus");
    if (!list.is_array() || list.empty()) throw ParseError("kraus: expected a non-empty array of matrices");
    std::vector<Matrix2> ops;
    for (const auto& m : list) ops.push_back(detail::parse_matrix2(m, "kraus"));
    return {QubitChannel::from_kraus(std::move(ops)), std::nullopt};
  }
  if (kind == "ptm") {
    const Json& rows = detail::require_field(*ch, "ptm", "ptm");
    if (!rows.is_array() || rows.size() != 4) throw ParseError("ptm: expected 4 rows");
    Ptm m;
    for (int r = 0; r < 4; ++r) {
      if (!rows[r].is_array() || rows[r].size() != 4) throw ParseError("ptm: expected 4 entries per row");
      for (int c = 0; c < 4; ++c) m(r, c) = detail::require_number(rows[r][c], "ptm");
    }
    return {QubitChannel::from_ptm(m), std::nullopt};
  }
  throw ParseError("channel spec: unknown type '" + kind + "'");
}

inline Json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

// ---------------------------------------------------------------------------
// Report documents
// ---------------------------------------------------------------------------

inline Json canonical_json(const CanonicalParams& c) {
  return Json{{"type", "canonical"}, {"t", detail::vector3_json(c.t)}, {"lambda", detail::vector3_json(c.lambda)}};
}

inline Json named_json(const NamedChannel& nc) {
  Json params = Json::object();
  for (const auto& [k, v] : nc.params) params[k] = v;
  return Json{{"type", "named"}, {"name", to_string(nc.name)}, {"params", params}};
}

/// Pretty form plus all 16 coefficients indexed by monomial mask.
inline Json green_json(const GrassmannElement& g) {
  Json basis = Json::array();
  Json coeffs = Json::array();
  for (unsigned m = 0; m < kMonomials; ++m) {
    basis.push_back(monomial_label(static_cast<Mask>(m)));
    coeffs.push_back(detail::complex_json(g[static_cast<Mask>(m)]));
  }
  return Json{{"pretty", to_string(g)}, {"basis", basis}, {"coefficients", coeffs}};
}

inline GrassmannElement green_from_json(const Json& j) {
  const Json& coeffs = detail::require_field(j, "coefficients", "green_function");
  if (!coeffs.is_array() || coeffs.size() != kMonomials) throw ParseError("green_function: expected 16 coefficients");
  GrassmannElement g;
  for (unsigned m = 0; m < kMonomials; ++m) g[static_cast<Mask>(m)] = detail::parse_complex(coeffs[m], "coefficient");
  return g;
}

inline Json cptp_json(const CptpDiagnostics& d) {
  return Json{{"ok", d.ok},
              {"min_choi_eigenvalue", d.min_choi_eigenvalue},
              {"trace_preservation_error", d.trace_preservation_error}};
}

inline Json attempt_json(const CertificateAttempt& a) {
  return Json{{"accepted", a.accepted},
              {"residual", a.residual},
              {"min_choi_eigenvalue", a.cptp.min_choi_eigenvalue},
              {"ptm", detail::real_matrix_json(a.map.ptm())}};
}

inline Json verdict_json(const DegradabilityVerdict& v) {
  Json j{{"kind", to_string(v.kind)},
         {"residual", v.residual},
         {"min_choi_eigenvalue", v.min_choi_eigenvalue},
         {"witness", v.witness ? detail::real_matrix_json(v.witness->ptm()) : Json(nullptr)}};
  j["attempts"] = Json{{"weakly_degradable", attempt_json(v.weak)},
                       {"anti_degradable", v.anti ? attempt_json(*v.anti) : Json(nullptr)}};
  return j;
}

inline Json gaussian_params_json(const GaussianParams& gp) {
  return Json{{"a", detail::complex_json(gp.a)}, {"b", detail::complex_json(gp.b)}, {"c", gp.c}};
}

inline Json report_json(const AnalysisReport& r) {
  Json j{{"schema_version", kSchemaVersion}};
  j["source"] = r.source ? named_json(*r.source) : Json(nullptr);
  j["channel"] = canonical_json(r.canonical);
  j["cptp"] = cptp_json(r.cptp);
  j["green_function"] = green_json(r.green.body);
  Json gauss{{"is_gaussian", r.gaussian.has_value()}};
  if (r.gaussian) gauss["params"] = gaussian_params_json(*r.gaussian);
  j["gaussian"] = gauss;
  if (r.equivalent) {
    const auto& p = r.equivalent->permutation;
    j["equivalent"] = Json{{"axes", p.axes},
                           {"lambda_signs", p.lambda_signs},
                           {"t_signs", p.t_signs},
                           {"channel", canonical_json(canonical_from_ptm(r.equivalent->channel.ptm()))}};
  } else {
    j["equivalent"] = nullptr;
  }
  if (r.degradability) {
    const auto& d = *r.degradability;
    j["degradability"] = Json{
        {"subject", r.gaussian ? "channel" : "equivalent"},
        {"gaussian_params", gaussian_params_json(d.params)},
        {"angles", Json{{"theta", d.angles.theta}, {"phi", d.angles.phi}, {"q", d.angles.q}}},
        {"dilation", Json{{"unitary", detail::real_matrix_json(d.dilation.unitary)},
                          {"environment_q", d.angles.q},
                          {"environment_pure", is_pure_environment(d.angles)}}},
        {"prediction", to_string(d.prediction)},
        {"verdict", verdict_json(d.verdict)}};
  } else {
    j["degradability"] = nullptr;
  }
  j["notes"] = r.notes;
  return j;
}

inline Json catalog_entry_json(const CatalogEntry& e) {
  Json params = Json::array();
  for (const auto& p : e.params) params.push_back(Json{{"name", p}, {"range", Json::array({0.0, 1.0})}});
  return Json{{"name", to_string(e.name)},
              {"params", params},
              {"canonical", e.canonical},
              {"green_function", e.green_function},
              {"gaussian", e.gaussian},
              {"claim", e.claim}};
}

inline Json catalog_json(const std::vector<CatalogEntry>& entries) {
  Json list = Json::array();
  for (const auto& e : entries) list.push_back(catalog_entry_json(e));
  return Json{{"schema_version", kSchemaVersion}, {"channels", list}};
}

inline Json suites_json(const std::vector<SuiteResult>& suites, std::uint64_t seed, std::size_t trials, double tol,
                        const std::vector<std::string>& warnings) {
  Json list = Json::array();
  bool passed = true;
  for (const auto& s : suites) {
    passed = passed && s.passed;
    list.push_back(Json{{"name", s.name},
                        {"trials", s.trials},
                        {"max_residual", s.max_residual},
                        {"tolerance", s.tolerance},
                        {"passed", s.passed}});
  }
  return Json{{"schema_version", kSchemaVersion}, {"seed", seed},   {"trials", trials}, {"tolerance", tol},
              {"passed", passed},                 {"suites", list}, {"warnings", warnings}};
}

inline std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse_error";
  if (dynamic_cast<const ValidationError*>(&e)) return "validation_error";
  return "internal_error";
}

inline Json error_json(const std::exception& e) {
  return Json{{"schema_version", kSchemaVersion}, {"error", Json{{"kind", error_kind(e)}, {"message", e.what()}}}};
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

namespace detail {

inline std::string format_complex(Complex z) {
  if (std::abs(z.imag()) < kPrintFloor) return format_real(std::abs(z.real()) < kPrintFloor ? 0.0 : z.real());
  return "(" + format_real(z.real()) + (z.imag() < 0 ? "-" : "+") + format_real(std::abs(z.imag())) + "i)";
}

inline std::string format_vector3(const Vector3& v) {
  return "(" + format_real(v(0)) + ", " + format_real(v(1)) + ", " + format_real(v(2)) + ")";
}

inline std::string format_params(const ParamMap& params) {
  std::string s;
  for (const auto& [k, v] : params) s += (s.empty() ? "" : ", ") + k + "=" + format_real(v);
  return s;
}

inline void write_matrix(std::ostream& os, const Ptm& m, const std::string& indent) {
  for (int r = 0; r < 4; ++r) {
    os << indent;
    for (int c = 0; c < 4; ++c) os << (c ? "  " : "") << format_real(std::abs(m(r, c)) < kPrintFloor ? 0.0 : m(r, c));
    os << '\n';
  }
}

}  // namespace detail

inline void write_report_text(std::ostream& os, const AnalysisReport& r) {
  
  os << "channel: ";
  if (r.source) {
    os << to_string(r.source->name) << "(" << detail::format_params(r.source->params) << ")\n";
  } else {
    os << "canonical\n";
  }
  os << "canonical: t = " << detail::format_vector3(r.canonical.t)
     << ", lambda = " << detail::format_vector3(r.canonical.lambda) << '\n';
  os << "cptp: " << (r.cptp.ok ? "yes" : "no") << " (min Choi eigenvalue " << format_real(r.cptp.min_choi_eigenvalue)
     << ", trace-preservation error " << format_real(r.cptp.trace_preservation_error) << ")\n";
  os << "green function: " << to_string(r.green.body) << '\n';
  if (r.gaussian) {
    os << "gaussian: yes (a = " << detail::format_complex(r.gaussian->a)
       << ", b = " << detail::format_complex(r.gaussian->b) << ", c = " << format_real(r.gaussian->c) << ")\n";
  } else {
    os << "gaussian: no\n";
  }
  if (r.equivalent) {
    const auto c = canonical_from_ptm(r.equivalent->channel.ptm());
    os << "gaussian equivalent: t = " << detail::format_vector3(c.t) << ", lambda = " << detail::format_vector3(c.lambda)
       << '\n';
  } else if (!r.gaussian) {
    os << "gaussian equivalent: none\n";
  }
  if (r.degradability) {
    const auto& d = *r.degradability;
    os << "angles: theta = " << format_real(d.angles.theta) << ", phi = " << format_real(d.angles.phi)
       << ", q = " << format_real(d.angles.q) << '\n';
    os << "dilation: environment " << (is_pure_environment(d.angles) ? "pure" : "mixed")
       << ", unitarity error " << format_real(unitarity_error(d.dilation.unitary)) << '\n';
    os << "prediction: " << to_string(d.prediction) << '\n';
    os << "verdict: " << to_string(d.verdict.kind) << " (residual " << format_real(d.verdict.residual)
       << ", min Choi eigenvalue " << format_real(d.verdict.min_choi_eigenvalue) << ")\n";
    if (d.verdict.witness) {
      os << "witness ptm:\n";
      detail::write_matrix(os, d.verdict.witness->ptm(), "  ");
    }
  }
  for (const auto& n : r.notes) os << "note: " << n << '\n';
}

inline void write_catalog_text(std::ostream& os, const std::vector<CatalogEntry>& entries) {
  bool first = true;
  for (const auto& e : entries) {
    if (!first) os << '\n';
    first = false;
    os << to_string(e.name) << '\n';
    os << "  params: ";
    for (std::size_t i = 0; i < e.params.size(); ++i) os << (i ? ", " : "") << e.params[i] << " in [0, 1]";
    os << '\n';
    os << "  canonical: " << e.canonical << '\n';
    os << "  green function: " << e.green_function << '\n';
    os << "  gaussian: " << e.gaussian << '\n';
    os << "  claim: " << e.claim << '\n';
  }
}

}  // namespace qgc
