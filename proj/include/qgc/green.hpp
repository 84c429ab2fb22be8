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
 * @file green.hpp
 * @brief Green-function kernels G(ζ, ξ) of qubit channels.
 *
 * A channel acts on characteristic functions by Berezin convolution,
 *   χ'(ξ) = ∫d²ζ χ(ζ) G(ζ, ξ),   G(ζ, ξ) = Tr[N(σ3 D(−ζ)) D(ξ)].
 * For a canonical channel (t, λ) the kernel has the closed form
 *   G = δ²(ζ − aξ − bξ*)·exp[−(t3/2)ξ*ξ] + (λ3 − λ1λ2)ξξ*
 *       + ((t1 − i t2)/2)ζζ*ξ − ((t1 + i t2)/2)ζζ*ξ*,
 * a = (λ1 + λ2)/2, b = (λ2 − λ1)/2, with the last three terms added to the
 * delta/exponential product. Gaussian channels are those for which only the
 * first term survives: G = δ²(ζ − aξ − bξ*)·exp[−cξ*ξ].
 */
#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "qgc/charfunc.hpp"
#include "qgc/grassmann.hpp"
#include "qgc/qubit.hpp"

namespace qgc {

inline constexpr double kGaussianTol = 1e-10;
inline constexpr double kAngleTol = 1e-9;

struct GreenFunction {
  GrassmannElement body;
  std::optional<CanonicalParams> provenance;
};

struct GaussianParams {
  Complex a;
  Complex b;
  double c = 0.0;
};

/// Angle parametrization: a = cosθ cosφ, b = −sinθ sinφ,
/// c = (2q − 1)(cos2θ − cos2φ)/4.
struct AngleParams {
  double theta = 0.0;
  double phi = 0.0;
  double q = 1.0;
};

namespace detail {

inline GrassmannElement gen(Generator g) { return GrassmannElement::generator(g); }

inline GrassmannElement pair_argument(Complex a, Complex b) {
  return gen(Generator::zeta) - a * gen(Generator::xi) - b * gen(Generator::xi_conj);
}

}  // namespace detail

/// δ²(ζ − aξ − bξ*)·exp[−cξ*ξ]
inline GrassmannElement gaussian_green(const GaussianParams& gp) {
  using detail::gen;
  const GrassmannElement xic_xi = gen(Generator::xi_conj) * gen(Generator::xi);
  return delta_pair(detail::pair_argument(gp.a, gp.b)) * exp(-gp.c * xic_xi);
}

inline GreenFunction green_from_canonical(const CanonicalParams& c) {
  require_cptp(QubitChannel::canonical(c), "green_from_canonical");
  using detail::gen;
  using namespace std::complex_literals;
  const double l1 = c.lambda(0), l2 = c.lambda(1), l3 = c.lambda(2);
  const double t1 = c.t(0), t2 = c.t(1), t3 = c.t(2);

  const GrassmannElement xi_xic = gen(Generator::xi) * gen(Generator::xi_conj);
  const GrassmannElement zzc = gen(Generator::zeta) * gen(Generator::zeta_conj);

  GrassmannElement body = gaussian_green({(l1 + l2) / 2.0, (l2 - l1) / 2.0, t3 / 2.0});
  body += (l3 - l1 * l2) * xi_xic;
  body += ((t1 - 1.0i * t2) / 2.0) * (zzc * gen(Generator::xi));
  body -= ((t1 + 1.0i * t2) / 2.0) * (zzc * gen(Generator::xi_conj));
  return GreenFunction{body, c};
}

inline GreenFunction green_from_canonical(const Vector3& t, const Vector3& lambda) {
  return green_from_canonical(CanonicalParams{t, lambda});
}

/// Tr[N(σ3 D(−ζ)) D(ξ)] evaluated symbolically; valid for any channel,
/// canonical or not.
inline GreenFunction green_from_definition(const QubitChannel& ch) {
  using Op = OperatorElement<CommutingGrading>;
  const Op input = Op::from_matrix(pauli(3)) * displacement(-1, GeneratorPair::zeta);
  const Op image = input.map_operator([&](const Matrix2& m) { return ch.apply_to_operator(m); });
  return GreenFunction{(image * displacement(+1, GeneratorPair::xi)).trace(), std::nullopt};
}

/// χ'(ξ) = ∫d²ζ χ(ζ) G(ζ, ξ).
inline CharFunction apply_green(const GreenFunction& g, const CharFunction& chi) {
  using detail::gen;
  const std::array<GrassmannElement, kGenerators> relabel{gen(Generator::zeta), gen(Generator::zeta_conj),
                                                          gen(Generator::zeta), gen(Generator::zeta_conj)};
  const GrassmannElement chi_zeta = substitute(chi.body(), relabel);
  return CharFunction(integrate_pair(chi_zeta * g.body));
}

/// Matches δ²(ζ − aξ − bξ*)·exp[−cξ*ξ] coefficient by coefficient.
inline std::optional<GaussianParams> detect_gaussian(const GreenFunction& g, double tol = kGaussianTol) {
  constexpr Mask zc_xi = mask_of(Generator::zeta_conj) | mask_of(Generator::xi);
  constexpr Mask zc_xic = mask_of(Generator::zeta_conj) | mask_of(Generator::xi_conj);
  constexpr Mask top = 0b1111;
  const Complex c = g.body[top];
  if (std::abs(c.imag()) > tol) return std::nullopt;
  GaussianParams gp{g.body[zc_xi], g.body[zc_xic], c.real()};
  if (max_abs_diff(gaussian_green(gp), g.body) > tol) return std::nullopt;
  return gp;
}

inline GaussianParams gaussian_from_angles(const AngleParams& ap) {
  return GaussianParams{std::cos(ap.theta) * std::cos(ap.phi), -std::sin(ap.theta) * std::sin(ap.phi),
                        (2.0 * ap.q - 1.0) * (std::cos(2.0 * ap.theta) - std::cos(2.0 * ap.phi)) / 4.0};
}

/// Canonical channel with λ1 = a − b, λ2 = a + b, λ3 = λ1λ2, t = (0, 0, 2c).
inline CanonicalParams canonical_from_gaussian(const GaussianParams& gp) {
  if (std::abs(gp.a.imag()) > kGaussianTol || std::abs(gp.b.imag()) > kGaussianTol) {
    throw NoSolutionError("canonical_from_gaussian: complex a or b describes a non-canonical (rotated) channel");
  }
  const double a = gp.a.real(), b = gp.b.real();
  return CanonicalParams{Vector3(0.0, 0.0, 2.0 * gp.c), Vector3(a - b, a + b, (a - b) * (a + b))};
}

namespace detail {

inline double wrap_two_pi(double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  x = std::fmod(x, two_pi);
  if (x < 0.0) x += two_pi;
  if (x >= two_pi) x -= two_pi;
  return x;
}

inline double clamp_unit(double x, const char* what) {
  if (std::abs(x) > 1.0 + kAngleTol) throw NoSolutionError(std::string("angles_from_gaussian: |") + what + "| > 1");
  return std::clamp(x, -1.0, 1.0);
}

}  // namespace detail

/// Solves for (θ, φ, q). Representative: θ ∈ [0, π/2], φ ∈ [0, 2π),
/// q ≥ 1/2, and q = 1 whenever cos2θ = cos2φ.
inline AngleParams angles_from_gaussian(const GaussianParams& gp) {
  if (std::abs(gp.a.imag()) > kAngleTol || std::abs(gp.b.imag()) > kAngleTol) {
    throw NoSolutionError("angles_from_gaussian: a and b must be real");
  }
  const double a = detail::clamp_unit(gp.a.real(), "a");
  const double b = detail::clamp_unit(gp.b.real(), "b");
  // θ + φ = ±u, θ − φ = ±v.
  const double u = std::acos(detail::clamp_unit(a + b, "a + b"));
  double v = std::acos(detail::clamp_unit(a - b, "a - b"));

  // cos2θ − cos2φ for θ = (u + v)/2, φ = (u − v)/2.
  double spread = -2.0 * std::sin(u) * std::sin(v);
  double q = 1.0;
  if (std::abs(spread) <= 1e-12) {
    if (std::abs(gp.c) > kAngleTol) throw NoSolutionError("angles_from_gaussian: c must vanish when cos2θ = cos2φ");
  } else {
    q = (1.0 + 4.0 * gp.c / spread) / 2.0;
    if (q < 0.5) {
      v = -v;
      q = 1.0 - q;
    }
    if (q > 1.0 + kAngleTol) throw NoSolutionError("angles_from_gaussian: environment weight q outside [0, 1]");
    // Round-off near a pure environment is snapped so purity is exact.
    if (q > 1.0 - 1e-12) q = 1.0;
  }

  double theta = (u + v) / 2.0;
  double phi = (u - v) / 2.0;
  // (θ, φ) ~ (−θ, −φ) ~ (π − θ, π − φ) leave a, b and c unchanged.
  if (theta < 0.0) {
    theta = -theta;
    phi = -phi;
  }
  if (theta > std::numbers::pi / 2.0) {
    theta = std::numbers::pi - theta;
    phi = std::numbers::pi - phi;
  }
  return AngleParams{theta, detail::wrap_two_pi(phi), q};
}

/// Signed relabelling of Bloch axes: λ'_i = lambda_signs[i]·λ[axes[i]],
/// t'_i = t_signs[i]·t[axes[i]]. Only proper rotations are generated, so
/// the relabelled channel is unitarily equivalent to the original.
struct AxisPermutation {
  std::array<int, 3> axes{0, 1, 2};
  std::array<int, 3> lambda_signs{1, 1, 1};
  std::array<int, 3> t_signs{1, 1, 1};

  CanonicalParams apply(const CanonicalParams& c) const {
    CanonicalParams r;
    for (int i = 0; i < 3; ++i) {
      r.lambda(i) = lambda_signs[i] * c.lambda(axes[i]);
      r.t(i) = t_signs[i] * c.t(axes[i]);
    }
    return r;
  }

  bool is_identity() const {
    return axes == std::array<int, 3>{0, 1, 2} && lambda_signs == std::array<int, 3>{1, 1, 1} &&
           t_signs == std::array<int, 3>{1, 1, 1};
  }

  friend bool operator==(const AxisPermutation&, const AxisPermutation&) = default;
};

struct GaussianEquivalent {
  AxisPermutation permutation;
  QubitChannel channel;
};

inline bool satisfies_gaussian_condition(const CanonicalParams& c, double tol = kGaussianTol) {
  return std::abs(c.t(0)) <= tol && std::abs(c.t(1)) <= tol &&
         std::abs(c.lambda(2) - c.lambda(0) * c.lambda(1)) <= tol;
}

namespace detail {

// Sign vectors with a prescribed product, all-positive first.
inline std::vector<std::array<int, 3>> sign_vectors(int product) {
  if (product > 0) return {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  return {{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {-1, -1, -1}};
}

}  // namespace detail

/// Searches signed axis relabellings (proper rotations on both sides of the
/// Bloch map) for one satisfying the Gaussian condition. The identity wins
/// if it matches; otherwise the first match with |λ'1| ≥ |λ'2| ≥ |λ'3|,
/// otherwise the first match in enumeration order.
inline std::optional<GaussianEquivalent> gaussian_equivalent(const CanonicalParams& c, double tol = kGaussianTol) {
  struct Perm {
    std::array<int, 3> axes;
    int sign;
  };
  static constexpr std::array<Perm, 6> perms{{{{0, 1, 2}, 1},
                                              {{2, 0, 1}, 1},
                                              {{1, 2, 0}, 1},
                                              {{0, 2, 1}, -1},
                                              {{2, 1, 0}, -1},
                                              {{1, 0, 2}, -1}}};
  std::vector<AxisPermutation> matches;
  for (const auto& p : perms) {
    // Output-side rotation R2 carries t; input-side R1 = diag(rho)·P contributes
    // the remaining λ signs. det R1 = det R2 = +1.
    for (const auto& t_signs : detail::sign_vectors(p.sign)) {
      for (const auto& rho : detail::sign_vectors(p.sign)) {
        AxisPermutation cand{p.axes, {t_signs[0] * rho[0], t_signs[1] * rho[1], t_signs[2] * rho[2]}, t_signs};
        if (satisfies_gaussian_condition(cand.apply(c), tol)) matches.push_back(cand);
      }
    }
  }
  if (matches.empty()) return std::nullopt;

  auto pick = [&]() -> AxisPermutation {
    if (matches.front().is_identity()) return matches.front();
    for (const auto& m : matches) {
      const auto l = m.apply(c).lambda.cwiseAbs();
      if (l(0) >= l(1) && l(1) >= l(2)) return m;
    }
    return matches.front();
  };
  const AxisPermutation chosen = pick();
  return GaussianEquivalent{chosen, QubitChannel::canonical(chosen.apply(c))};
}

}  // namespace qgc
