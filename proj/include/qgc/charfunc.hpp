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

#pragma once

#include <cmath>

#include "qgc/grassmann.hpp"
#include "qgc/operator_element.hpp"
#include "qgc/qubit.hpp"

namespace qgc {

inline constexpr double kNormalizationTol = 1e-10;

/// Characteristic function χ(ξ) = Tr[ρD(ξ)]; lives on the (ξ, ξ*) subalgebra
/// with unit constant term.
class CharFunction {
 public:
  explicit CharFunction(const GrassmannElement& body) : body_(body) {
    if (!body.free_of(pair_mask(GeneratorPair::zeta))) {
      throw ValidationError("CharFunction: body must not contain zeta generators");
    }
    if (std::abs(body.scalar_part() - 1.0) > kNormalizationTol) {
      throw NotNormalizedError("CharFunction: constant term is " + format_real(body.scalar_part().real()) + ", expected 1");
    }
  }

  const GrassmannElement& body() const { return body_; }

 private:
  GrassmannElement body_;
};

/// D(±g) = exp(σ+(±g) − (±g)*σ−) for the requested generator pair.
template <Grading G = CommutingGrading>
OperatorElement<G> displacement(int sign, GeneratorPair pair) {
  const Generator g = first_of(pair);
  const GrassmannElement v = static_cast<double>(sign) * GrassmannElement::generator(g);
  const GrassmannElement v_conj = static_cast<double>(sign) * GrassmannElement::generator(conjugate(g));
  const auto x = OperatorElement<G>::right(sigma_plus(), v) - OperatorElement<G>::left(v_conj, sigma_minus());
  return exp_nilpotent(x);
}

/// Tr[ρ·D(ξ)], computed symbolically.
template <Grading G = CommutingGrading>
CharFunction char_function(const QubitState& rho) {
  const auto product = OperatorElement<G>::from_matrix(rho.matrix()) * displacement<G>(+1, GeneratorPair::xi);
  return CharFunction(product.trace());
}

/// Linear inversion of χ = 1 + (2p−1)ξξ*/2 + γξ − γ*ξ*.
inline QubitState state_from_char(const CharFunction& chi) {
  constexpr Mask xi = mask_of(Generator::xi);
  constexpr Mask xixc = mask_of(Generator::xi) | mask_of(Generator::xi_conj);
  const double p = (2.0 * chi.body()[xixc].real() + 1.0) / 2.0;
  const Complex gamma = chi.body()[xi];
  if (!(p >= -kStateTol && p <= 1.0 + kStateTol) || std::norm(gamma) > p * (1.0 - p) + kStateTol) {
    throw NotPhysicalError("state_from_char: recovered (p, gamma) is not a valid state");
  }
  return QubitState(p, gamma);
}

/// Validating overload for raw Grassmann input.
inline QubitState state_from_char(const GrassmannElement& body) { return state_from_char(CharFunction(body)); }

}  // namespace qgc
