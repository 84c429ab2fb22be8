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

// Random sampling of states, channels and algebra elements for the
// property suites.

#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "qgc/grassmann.hpp"
#include "qgc/green.hpp"
#include "qgc/qubit.hpp"

namespace qgc {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline Vector3 random_unit_vector(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vector3 v;
  do {
    v = Vector3(n(rng), n(rng), n(rng));
  } while (v.norm() < 1e-6);
  return v.normalized();
}

/// Uniform in the Bloch ball.
inline QubitState random_state(Rng& rng) {
  const double r = std::cbrt(uniform(rng, 0.0, 1.0));
  return QubitState::from_bloch(r * random_unit_vector(rng));
}

inline GrassmannElement random_element(Rng& rng) {
  GrassmannElement::Coefficients c;
  for (auto& v : c) v = Complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
  return GrassmannElement(c);
}

/// Random odd element linear in ξ, ξ*.
inline GrassmannElement random_linear_xi(Rng& rng) {
  return Complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)) * GrassmannElement::generator(Generator::xi) +
         Complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)) * GrassmannElement::generator(Generator::xi_conj);
}

inline AngleParams random_angles(Rng& rng, bool pure_environment) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double q = pure_environment ? (uniform(rng, 0.0, 1.0) < 0.5 ? 0.0 : 1.0) : uniform(rng, 0.0, 1.0);
  return AngleParams{uniform(rng, 0.0, two_pi), uniform(rng, 0.0, two_pi), q};
}

/// CPTP canonical channel with generic t (including t1, t2 ≠ 0) and
/// independent λ, by rejection against the Choi test.
inline CanonicalParams random_generic_canonical(Rng& rng) {
  for (;;) {
    CanonicalParams c{uniform(rng, 0.0, 0.6) * random_unit_vector(rng),
                      Vector3(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0))};
    if (is_cptp(QubitChannel::canonical(c))) return c;
  }
}

/// Gaussian canonical channel drawn through random angles.
inline CanonicalParams random_gaussian_canonical(Rng& rng) {
  return canonical_from_gaussian(gaussian_from_angles(random_angles(rng, uniform(rng, 0.0, 1.0) < 0.5)));
}

/// One in four draws is Gaussian, the rest generic.
inline CanonicalParams random_canonical(Rng& rng) {
  return uniform(rng, 0.0, 1.0) < 0.25 ? random_gaussian_canonical(rng) : random_generic_canonical(rng);
}

}  // namespace qgc
