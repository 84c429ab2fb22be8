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
 * @file catalog.hpp
 * @brief The six textbook qubit channels and the analysis pipeline.
 *
 * Parameters: s ∈ [0, 1] for the flip and depolarizing families,
 * n ∈ [0, 1] for amplitude damping (1 − n is the decay probability), and
 * (n, s) for generalized amplitude damping, where s is the weight of the
 * |0⟩ environment state.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgc/degradability.hpp"
#include "qgc/errors.hpp"
#include "qgc/green.hpp"
#include "qgc/qubit.hpp"

namespace qgc {

enum class ChannelName {
  bit_flip,
  phase_flip,
  bit_phase_flip,
  depolarizing,
  amplitude_damping,
  generalized_amplitude_damping,
};

inline constexpr std::array<ChannelName, 6> kAllChannels{
    ChannelName::bit_flip,     ChannelName::phase_flip,        ChannelName::bit_phase_flip,
    ChannelName::depolarizing, ChannelName::amplitude_damping, ChannelName::generalized_amplitude_damping};

inline std::string to_string(ChannelName n) {
  switch (n) {
    case ChannelName::bit_flip: return "bit_flip";
    case ChannelName::phase_flip: return "phase_flip";
    case ChannelName::bit_phase_flip: return "bit_phase_flip";
    case ChannelName::depolarizing: return "depolarizing";
    case ChannelName::amplitude_damping: return "amplitude_damping";
    case ChannelName::generalized_amplitude_damping: return "generalized_amplitude_damping";
  }
  return "?";
}

inline ChannelName channel_name_from_string(const std::string& s) {
  for (auto n : kAllChannels)
    if (to_string(n) == s) return n;
  throw ParseError("unknown channel name '" + s + "'");
}

using ParamMap = std::map<std::string, double>;

struct NamedChannel {
  ChannelName name;
  ParamMap params;
};

/// Static description used by the catalog listing.
struct CatalogEntry {
  ChannelName name;
  std::vector<std::string> params;
  std::string canonical;
  std::string green_function;
  std::string gaussian;
  std::string claim;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries{
      {ChannelName::bit_flip, {"s"}, "t = 0, λ = (1, 2s−1, 2s−1)", "δ²(ζ − sξ − (s−1)ξ*)", "gaussian",
       "weakly degradable for every s"},
      {ChannelName::phase_flip, {"s"}, "t = 0, λ = (2s−1, 2s−1, 1)", "δ²(ζ − (2s−1)ξ) + 4s(1−s)ξξ*",
       "unitarily_equivalent",
       "not Gaussian; unitarily equivalent to bit_flip(s) by permuting λ, hence weakly degradable"},
      {ChannelName::bit_phase_flip, {"s"}, "t = 0, λ = (2s−1, 1, 2s−1)", "δ²(ζ − sξ − (1−s)ξ*)", "gaussian",
       "weakly degradable for every s"},
      {ChannelName::depolarizing, {"s"}, "t = 0, λ = (1−s, 1−s, 1−s)", "δ²(ζ − (1−s)ξ) + s(1−s)ξξ*",
       "non_gaussian", "not Gaussian; degradability not addressed in this formalism"},
      {ChannelName::amplitude_damping, {"n"}, "t = (0, 0, 1−n), λ = (√n, √n, n)",
       "δ²(ζ − √n ξ)·exp[−((1−n)/2)ξ*ξ]", "gaussian",
       "weakly degradable for n ≥ 1/2, anti-degradable for n ≤ 1/2"},
      {ChannelName::generalized_amplitude_damping, {"n", "s"}, "t = (0, 0, (1−n)(2s−1)), λ = (√n, √n, n)",
       "δ²(ζ − √n ξ)·exp[−(2s−1)((1−n)/2)ξ*ξ]", "gaussian",
       "weakly degradable for n ≥ 1/2, null quantum capacity claimed for n ≤ 1/2 (mixed environment q = s)"},
  };
  return entries;
}

inline const CatalogEntry& catalog_entry(ChannelName n) {
  for (const auto& e : catalog_entries())
    if (e.name == n) return e;
  throw ParseError("catalog entry missing");
}

namespace detail {

inline double param(const NamedChannel& nc, const std::string& key) {
  auto it = nc.params.find(key);
  if (it == nc.params.end()) throw ParameterOutOfRangeError(to_string(nc.name) + ": missing parameter '" + key + "'");
  const double v = it->second;
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ParameterOutOfRangeError(to_string(nc.name) + ": parameter " + key + " = " + format_real(v) +
                                   " outside [0, 1]");
  }
  return v;
}

inline void check_param_names(const NamedChannel& nc) {
  const auto& allowed = catalog_entry(nc.name).params;
  for (const auto& [key, value] : nc.params) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ParameterOutOfRangeError(to_string(nc.name) + ": unknown parameter '" + key + "'");
    }
  }
}

}  // namespace detail

inline CanonicalParams canonical_params(const NamedChannel& nc) {
  detail::check_param_names(nc);
  switch (nc.name) {
    case ChannelName::bit_flip: {
      const double x = 2.0 * detail::param(nc, "s") - 1.0;
      return {Vector3::Zero(), Vector3(1.0, x, x)};
    }
    case ChannelName::phase_flip: {
      const double x = 2.0 * detail::param(nc, "s") - 1.0;
      return {Vector3::Zero(), Vector3(x, x, 1.0)};
    }
    case ChannelName::bit_phase_flip: {
      const double x = 2.0 * detail::param(nc, "s") - 1.0;
      return {Vector3::Zero(), Vector3(x, 1.0, x)};
    }
    case ChannelName::depolarizing: {
      const double x = 1.0 - detail::param(nc, "s");
      return {Vector3::Zero(), Vector3(x, x, x)};
    }
    case ChannelName::amplitude_damping: {
      const double n = detail::param(nc, "n");
      return {Vector3(0.0, 0.0, 1.0 - n), Vector3(std::sqrt(n), std::sqrt(n), n)};
    }
    case ChannelName::generalized_amplitude_damping: {
      const double n = detail::param(nc, "n");
      const double s = detail::param(nc, "s");
      return {Vector3(0.0, 0.0, (1.0 - n) * (2.0 * s - 1.0)), Vector3(std::sqrt(n), std::sqrt(n), n)};
    }
  }
  throw ParseError("unreachable channel name");
}

inline QubitChannel build(const NamedChannel& nc) { return QubitChannel::canonical(canonical_params(nc)); }

inline QubitChannel build(ChannelName name, const ParamMap& params) { return build(NamedChannel{name, params}); }

/// Kraus lists for the families that come with one (bit-phase flip,
/// amplitude damping and its generalized form).
inline std::optional<std::vector<Matrix2>> kraus_operators(const NamedChannel& nc) {
  using namespace std::complex_literals;
  detail::check_param_names(nc);
  auto gad = [](double n, double s) {
    Matrix2 a0, a1, a2, a3;
    a0 << 1.0, 0.0, 0.0, std::sqrt(n);
    a1 << 0.0, std::sqrt(1.0 - n), 0.0, 0.0;
    a2 << std::sqrt(n), 0.0, 0.0, 1.0;
    a3 << 0.0, 0.0, std::sqrt(1.0 - n), 0.0;
    return std::vector<Matrix2>{std::sqrt(s) * a0, std::sqrt(s) * a1, std::sqrt(1.0 - s) * a2,
                                std::sqrt(1.0 - s) * a3};
  };
  switch (nc.name) {
    case ChannelName::bit_phase_flip: {
      const double s = detail::param(nc, "s");
      return std::vector<Matrix2>{std::sqrt(s) * pauli(0), std::sqrt(1.0 - s) * pauli(2)};
    }
    case ChannelName::amplitude_damping: return gad(detail::param(nc, "n"), 1.0);
    case ChannelName::generalized_amplitude_damping:
      return gad(detail::param(nc, "n"), detail::param(nc, "s"));
    default: return std::nullopt;
  }
}

/// Remarks attached to in-range but unusual parameter choices.
inline std::vector<std::string> catalog_flags(const NamedChannel& nc) {
  std::vector<std::string> flags;
  if (nc.name == ChannelName::generalized_amplitude_damping) {
    auto it = nc.params.find("s");
    if (it != nc.params.end() && it->second == 1.0) {
      flags.push_back("s = 1 is excluded from the generalized amplitude damping family (s != 1); "
                      "it reduces to plain amplitude damping");
    }
  }
  return flags;
}

/// Green function assembled from each family's printed formula, independent
/// of the generic canonical-form construction.
inline GrassmannElement printed_green_function(const NamedChannel& nc) {
  using detail::gen;
  const GrassmannElement xi_xic = gen(Generator::xi) * gen(Generator::xi_conj);
  const GrassmannElement xic_xi = gen(Generator::xi_conj) * gen(Generator::xi);
  auto delta = [](Complex a, Complex b) { return delta_pair(detail::pair_argument(a, b)); };
  detail::check_param_names(nc);
  switch (nc.name) {
    case ChannelName::bit_flip: {
      const double s = detail::param(nc, "s");
      return delta(s, s - 1.0);
    }
    case ChannelName::phase_flip: {
      const double s = detail::param(nc, "s");
      return delta(2.0 * s - 1.0, 0.0) + 4.0 * s * (1.0 - s) * xi_xic;
    }
    case ChannelName::bit_phase_flip: {
      const double s = detail::param(nc, "s");
      return delta(s, 1.0 - s);
    }
    case ChannelName::depolarizing: {
      const double s = detail::param(nc, "s");
      return delta(1.0 - s, 0.0) + s * (1.0 - s) * xi_xic;
    }
    case ChannelName::amplitude_damping: {
      const double n = detail::param(nc, "n");
      return delta(std::sqrt(n), 0.0) * exp(-((1.0 - n) / 2.0) * xic_xi);
    }
    case ChannelName::generalized_amplitude_damping: {
      const double n = detail::param(nc, "n");
      const double s = detail::param(nc, "s");
      return delta(std::sqrt(n), 0.0) * exp(-(2.0 * s - 1.0) * ((1.0 - n) / 2.0) * xic_xi);
    }
  }
  throw ParseError("unreachable channel name");
}

enum class GaussianClass { gaussian, unitarily_equivalent, non_gaussian };

inline std::string to_string(GaussianClass g) {
  switch (g) {
    case GaussianClass::gaussian: return "gaussian";
    case GaussianClass::unitarily_equivalent: return "unitarily_equivalent";
    case GaussianClass::non_gaussian: return "non_gaussian";
  }
  return "?";
}

/// The claims each family is expected to satisfy.
struct Expectation {
  CanonicalParams canonical;
  GaussianClass gaussian;
  std::optional<PredictedKind> verdict;
};

inline Expectation expectation(const NamedChannel& nc) {
  Expectation e{canonical_params(nc), GaussianClass::gaussian, std::nullopt};
  auto damping_claim = [](double n, PredictedKind below) {
    if (n == 0.5) return PredictedKind::boundary;
    return n > 0.5 ? PredictedKind::weakly_degradable : below;
  };
  switch (nc.name) {
    case ChannelName::bit_flip:
    case ChannelName::bit_phase_flip: e.verdict = PredictedKind::weakly_degradable; break;
    case ChannelName::phase_flip: {
      const double s = detail::param(nc, "s");
      e.gaussian = (s == 0.0 || s == 1.0) ? GaussianClass::gaussian : GaussianClass::unitarily_equivalent;
      e.verdict = PredictedKind::weakly_degradable;
      break;
    }
    case ChannelName::depolarizing: {
      const double s = detail::param(nc, "s");
      e.gaussian = (s == 0.0 || s == 1.0) ? GaussianClass::gaussian : GaussianClass::non_gaussian;
      break;
    }
    case ChannelName::amplitude_damping:
      e.verdict = damping_claim(detail::param(nc, "n"), PredictedKind::anti_degradable);
      break;
    case ChannelName::generalized_amplitude_damping: {
      const double s = detail::param(nc, "s");
      const bool pure = (s == 0.0 || s == 1.0);
      e.verdict = damping_claim(detail::param(nc, "n"),
                                pure ? PredictedKind::anti_degradable : PredictedKind::null_capacity_claimed);
      break;
    }
  }
  return e;
}

// ---------------------------------------------------------------------------
// Analysis pipeline
// ---------------------------------------------------------------------------

struct AnalysisOptions {
  double certificate_tol = kCertificateTol;
};

struct GaussianAnalysis {
  GaussianParams params;
  AngleParams angles;
  Dilation dilation;
  PredictedKind prediction;
  DegradabilityVerdict verdict;
};

struct AnalysisReport {
  std::optional<NamedChannel> source;
  CanonicalParams canonical;
  CptpDiagnostics cptp;
  GreenFunction green;
  std::optional<GaussianParams> gaussian;
  std::optional<GaussianEquivalent> equivalent;
  /// Angles, dilation and verdict of the channel itself when Gaussian, else
  /// of its Gaussian equivalent.
  std::optional<GaussianAnalysis> degradability;
  std::vector<std::string> notes;
};

inline GaussianAnalysis analyze_gaussian(const GaussianParams& gp, const AnalysisOptions& opt) {
  const AngleParams angles = angles_from_gaussian(gp);
  const Dilation d = dilation_from_angles(angles);
  const QubitChannel n = system_channel(d);
  const QubitChannel comp = weakly_complementary(d);
  GaussianAnalysis g{gp, angles, d, classify_by_angles(angles), certify(n, comp, opt.certificate_tol)};
  if (g.prediction == PredictedKind::boundary && !g.verdict.anti) {
    g.verdict.anti = certificate_attempt(comp, n, opt.certificate_tol);
  }
  return g;
}

inline AnalysisReport analyze_channel(const QubitChannel& ch, const AnalysisOptions& opt = {}) {
  AnalysisReport r;
  r.canonical = canonical_from_ptm(ch.ptm());
  r.cptp = is_cptp(ch);
  require_cptp(ch, "analyze");
  r.green = green_from_canonical(r.canonical);
  r.gaussian = detect_gaussian(r.green);

  if (r.gaussian) {
    r.degradability = analyze_gaussian(*r.gaussian, opt);
  } else {
    r.equivalent = gaussian_equivalent(r.canonical);
    if (r.equivalent) {
      const auto gp = detect_gaussian(green_from_canonical(canonical_from_ptm(r.equivalent->channel.ptm())));
      if (gp) r.degradability = analyze_gaussian(*gp, opt);
      r.notes.push_back("not Gaussian; angles, dilation and verdict refer to the unitarily equivalent "
                        "Gaussian channel obtained by relabelling Bloch axes");
    } else {
      r.notes.push_back("not Gaussian and not unitarily equivalent to a Gaussian channel by axis relabelling; "
                        "degradability is not discussed in the Green-function formalism");
    }
  }

  if (r.degradability) {
    switch (r.degradability->prediction) {
      case PredictedKind::boundary:
        r.notes.push_back("cos(2phi) = 0: the ratio criterion is at its pole; both certificates attempted");
        break;
      case PredictedKind::null_capacity_claimed:
        r.notes.push_back("mixed environment with cos(2theta)/cos(2phi) < 0: null quantum capacity is claimed "
                          "for this regime, not computed");
        break;
      default: break;
    }
  }
  return r;
}

inline AnalysisReport analyze(const NamedChannel& nc, const AnalysisOptions& opt = {}) {
  AnalysisReport r = analyze_channel(build(nc), opt);
  r.source = nc;
  for (auto& f : catalog_flags(nc)) r.notes.push_back(std::move(f));
  return r;
}

inline AnalysisReport analyze(ChannelName name, const ParamMap& params, const AnalysisOptions& opt = {}) {
  return analyze(NamedChannel{name, params}, opt);
}

}  // namespace qgc
