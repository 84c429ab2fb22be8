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

// Shared generators and oracles for the test binaries. The oracles here
// are written against plain arrays and do not call the library code they
// are used to check.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "qgc/grassmann.hpp"

namespace qgc_test {

using Complex = std::complex<double>;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double real(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Complex complex() { return {real(), real()}; }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  qgc::GrassmannElement element() {
    qgc::GrassmannElement x;
    for (unsigned m = 0; m < qgc::kMonomials; ++m) x[static_cast<qgc::Mask>(m)] = complex();
    return x;
  }

  // Element with a random subset of monomials switched off.
  qgc::GrassmannElement sparse_element() {
    qgc::GrassmannElement x;
    for (unsigned m = 0; m < qgc::kMonomials; ++m)
      if (integer(0, 2) == 0) x[static_cast<qgc::Mask>(m)] = complex();
    return x;
  }

  // Bloch vector uniform in the unit ball, by rejection.
  std::array<double, 3> bloch() {
    for (;;) {
      std::array<double, 3> r{real(), real(), real()};
      if (r[0] * r[0] + r[1] * r[1] + r[2] * r[2] <= 1.0) return r;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// (p, gamma) of the state with Bloch vector r.
inline std::pair<double, Complex> p_gamma(const std::array<double, 3>& r) {
  return {(1.0 + r[2]) / 2.0, Complex(r[0], -r[1]) / 2.0};
}

// Bloch map r -> t + diag(lambda) r.
inline std::array<double, 3> bloch_map(const std::array<double, 3>& t, const std::array<double, 3>& lambda,
                                       const std::array<double, 3>& r) {
  return {t[0] + lambda[0] * r[0], t[1] + lambda[1] * r[1], t[2] + lambda[2] * r[2]};
}

// 1 + (2p-1)/2 ξξ* + γξ - γ*ξ*, set coefficient by coefficient.
inline qgc::GrassmannElement closed_form_chi(double p, Complex gamma) {
  qgc::GrassmannElement x;
  x[0] = 1.0;
  x[0b0100] = gamma;
  x[0b1000] = -std::conj(gamma);
  x[0b1100] = (2.0 * p - 1.0) / 2.0;
  return x;
}

inline qgc::GrassmannElement closed_form_chi(const std::array<double, 3>& r) {
  const auto [p, gamma] = p_gamma(r);
  return closed_form_chi(p, gamma);
}

// The same function on the (ζ, ζ*) pair.
inline qgc::GrassmannElement closed_form_chi_zeta(const std::array<double, 3>& r) {
  const auto [p, gamma] = p_gamma(r);
  qgc::GrassmannElement x;
  x[0] = 1.0;
  x[0b0001] = gamma;
  x[0b0010] = -std::conj(gamma);
  x[0b0011] = (2.0 * p - 1.0) / 2.0;
  return x;
}

}  // namespace qgc_test
