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

#include <array>
#include <concepts>

#include <Eigen/Dense>

#include "qgc/grassmann.hpp"

namespace qgc {

using Matrix2 = Eigen::Matrix2cd;

/// Grassmann scalars commute with every operator. This is the convention
/// under which Tr[ρD(ξ)] takes the closed form 1 + (2p−1)ξξ*/2 + γξ − γ*ξ*.
struct CommutingGrading {
  static constexpr bool graded = false;
  static constexpr bool odd(int, int) { return false; }
};

/// Fermionic reading: σ± = off-diagonal matrix units are odd and
/// anticommute with odd Grassmann elements. Kept for the calibration tests,
/// which show that it flips the sign of the γ*ξ* term of χ.
struct FermionicGrading {
  static constexpr bool graded = true;
  static constexpr bool odd(int i, int j) { return i != j; }
};

template <class G>
concept Grading = requires(int i, int j) {
  { G::graded } -> std::convertible_to<bool>;
  { G::odd(i, j) } -> std::convertible_to<bool>;
};

/// 2x2 operator with Grassmann coefficients, Σ_ij E_ij·g_ij, where E_ij =
/// |i⟩⟨j| in the basis (|0⟩, |1⟩). Coefficients are stored to the right of
/// the matrix unit.
template <Grading G = CommutingGrading>
class OperatorElement {
 public:
  using Entries = std::array<std::array<GrassmannElement, 2>, 2>;

  OperatorElement() = default;
  explicit OperatorElement(const Entries& e) : e_(e) {}

  static OperatorElement identity() { return from_matrix(Matrix2::Identity()); }

  static OperatorElement from_matrix(const Matrix2& m) {
    OperatorElement r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.e_[i][j] = GrassmannElement::scalar(m(i, j));
    return r;
  }

  /// op·g
  static OperatorElement right(const Matrix2& op, const GrassmannElement& g) {
    OperatorElement r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.e_[i][j] = op(i, j) * g;
    return r;
  }

  /// g·op, with g commuted to the right of each matrix unit.
  static OperatorElement left(const GrassmannElement& g, const Matrix2& op) {
    OperatorElement r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.e_[i][j] = op(i, j) * (G::odd(i, j) ? parity_involution(g) : g);
    return r;
  }

  const GrassmannElement& operator()(int i, int j) const { return e_[i][j]; }
  GrassmannElement& operator()(int i, int j) { return e_[i][j]; }

  GrassmannElement trace() const { return e_[0][0] + e_[1][1]; }

  OperatorElement adjoint() const {
    OperatorElement r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        GrassmannElement a = qgc::adjoint(e_[i][j]);
        r.e_[j][i] = G::odd(j, i) ? parity_involution(a) : a;
      }
    return r;
  }

  /// Entry (i, j) with all Grassmann coefficients replaced by their scalar parts.
  Matrix2 scalar_matrix() const {
    Matrix2 m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = e_[i][j].scalar_part();
    return m;
  }

  /// Applies a linear map on 2x2 matrices to the operator factor of every term.
  template <class LinearMap>
    requires(!G::graded)
  OperatorElement map_operator(LinearMap&& f) const {
    OperatorElement r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Matrix2 unit = Matrix2::Zero();
        unit(i, j) = 1.0;
        const Matrix2 image = f(unit);
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) r.e_[k][l] += image(k, l) * e_[i][j];
      }
    return r;
  }

  OperatorElement& operator+=(const OperatorElement& o) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) e_[i][j] += o.e_[i][j];
    return *this;
  }
  OperatorElement& operator-=(const OperatorElement& o) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) e_[i][j] -= o.e_[i][j];
    return *this;
  }
  OperatorElement& operator*=(Complex s) {
    for (auto& row : e_)
      for (auto& x : row) x *= s;
    return *this;
  }

  friend OperatorElement operator+(OperatorElement a, const OperatorElement& b) { return a += b; }
  friend OperatorElement operator-(OperatorElement a, const OperatorElement& b) { return a -= b; }
  friend OperatorElement operator*(OperatorElement a, Complex s) { return a *= s; }
  friend OperatorElement operator*(Complex s, OperatorElement a) { return a *= s; }

  // (E_ij g)(E_jl h) = E_il (±g) h, the sign coming from moving g past E_jl.
  friend OperatorElement operator*(const OperatorElement& a, const OperatorElement& b) {
    OperatorElement r;
    for (int i = 0; i < 2; ++i)
      for (int l = 0; l < 2; ++l)
        for (int j = 0; j < 2; ++j) {
          const GrassmannElement& g = a.e_[i][j];
          r.e_[i][l] += (G::odd(j, l) ? parity_involution(g) : g) * b.e_[j][l];
        }
    return r;
  }

  friend bool operator==(const OperatorElement&, const OperatorElement&) = default;

 private:
  Entries e_{};
};

template <Grading G>
double max_abs_diff(const OperatorElement<G>& a, const OperatorElement<G>& b) {
  double m = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m = std::max(m, max_abs_diff(a(i, j), b(i, j)));
  return m;
}

/// exp(X) for X with nilpotent coefficients and no scalar part; the series
/// is summed to the order at which it provably vanishes.
template <Grading G>
OperatorElement<G> exp_nilpotent(const OperatorElement<G>& x) {
  OperatorElement<G> term = OperatorElement<G>::identity();
  OperatorElement<G> sum = term;
  for (int k = 1; k <= static_cast<int>(kGenerators); ++k) {
    term = term * x * Complex(1.0 / k);
    sum += term;
  }
  return sum;
}

}  // namespace qgc
