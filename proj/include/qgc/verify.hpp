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
 * @file verify.hpp
 * @brief Randomized self-check suites run by `qgc verify`.
 *
 * Each suite compares two independent routes and reports the largest
 * discrepancy seen; it passes when that stays within the tolerance.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "qgc/charfunc.hpp"
#include "qgc/degradability.hpp"
#include "qgc/green.hpp"
#include "qgc/random.hpp"

namespace qgc {

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

/// 1 + (2p−1)ξξ*/2 + γξ − γ*ξ*, written out coefficient by coefficient.
inline GrassmannElement closed_form_char_function(const QubitState& rho) {
  GrassmannElement chi = GrassmannElement::scalar(1.0);
  chi[mask_of(Generator::xi) | mask_of(Generator::xi_conj)] = (2.0 * rho.p() - 1.0) / 2.0;
  chi[mask_of(Generator::xi)] = rho.gamma();
  chi[mask_of(Generator::xi_conj)] = -std::conj(rho.gamma());
  return chi;
}

namespace detail {

template <class Trial>
SuiteResult run_suite(std::string name, std::size_t trials, std::uint64_t seed, double tol, Trial trial) {
  Rng rng(seed);
  SuiteResult r{std::move(name), trials, 0.0, tol, true};
  for (std::size_t i = 0; i < trials; ++i) r.max_residual = std::max(r.max_residual, trial(rng));
  r.passed = r.max_residual <= tol;
  return r;
}

}  // namespace detail

/// Symbolic Tr[ρD(ξ)] against the closed form.
inline SuiteResult run_calibration_suite(std::size_t trials, std::uint64_t seed, double tol) {
  return detail::run_suite("calibration", trials, seed, tol, [](Rng& rng) {
    const QubitState rho = random_state(rng);
    return max_abs_diff(char_function(rho).body(), closed_form_char_function(rho));
  });
}

/// Berezin convolution with the canonical Green function against the Bloch map.
inline SuiteResult run_oracle_suite(std::size_t trials, std::uint64_t seed, double tol) {
  return detail::run_suite("oracle_equivalence", trials, seed, tol, [](Rng& rng) {
    const CanonicalParams c = random_canonical(rng);
    const QubitState rho = random_state(rng);
    const QubitState via_green = state_from_char(apply_green(green_from_canonical(c), char_function(rho)));
    const QubitState via_bloch = apply_channel(QubitChannel::canonical(c), rho);
    return max_abs_diff(via_green, via_bloch);
  });
}

/// Closed-form kernel against Tr[N(σ3 D(−ζ)) D(ξ)].
inline SuiteResult run_green_definition_suite(std::size_t trials, std::uint64_t seed, double tol) {
  return detail::run_suite("green_definition", trials, seed, tol, [](Rng& rng) {
    const CanonicalParams c = random_canonical(rng);
    return max_abs_diff(green_from_canonical(c).body, green_from_definition(QubitChannel::canonical(c)).body);
  });
}

/// ∫d²ζ δ²(ζ − η) f(ζ, ζ*) = f(η, η*) for random f and linear η.
inline SuiteResult run_sifting_suite(std::size_t trials, std::uint64_t seed, double tol) {
  return detail::run_suite("sifting", trials, seed, tol, [](Rng& rng) {
    const GrassmannElement f = random_element(rng);
    const GrassmannElement eta = random_linear_xi(rng);
    const GrassmannElement zeta = GrassmannElement::generator(Generator::zeta);
    const GrassmannElement lhs = integrate_pair(delta_pair(zeta - eta) * f);
    const GrassmannElement rhs = substitute(f, {eta, adjoint(eta), GrassmannElement::generator(Generator::xi),
                                                GrassmannElement::generator(Generator::xi_conj)});
    return max_abs_diff(lhs, rhs);
  });
}

/// Dilation marginal against the Gaussian channel it is built for.
inline SuiteResult run_dilation_suite(std::size_t trials, std::uint64_t seed, double tol) {
  return detail::run_suite("dilation", trials, seed, tol, [](Rng& rng) {
    const AngleParams ap = random_angles(rng, uniform(rng, 0.0, 1.0) < 0.5);
    const Ptm expected = ptm_from_canonical(canonical_from_gaussian(gaussian_from_angles(ap)));
    return (system_channel(dilation_from_angles(ap)).ptm() - expected).cwiseAbs().maxCoeff();
  });
}

inline std::vector<SuiteResult> run_all_suites(std::size_t trials, std::uint64_t seed, double tol) {
  return {run_calibration_suite(trials, seed, tol), run_sifting_suite(trials, seed + 1, tol),
          run_green_definition_suite(trials, seed + 2, tol), run_oracle_suite(trials, seed + 3, tol),
          run_dilation_suite(trials, seed + 4, tol)};
}

}  // namespace qgc
