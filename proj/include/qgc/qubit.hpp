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
 * @file qubit.hpp
 * @brief Dense single-qubit states and channels.
 *
 * A channel is carried by its Pauli transfer matrix (PTM) in the basis
 * (I, σ1, σ2, σ3): entry (i, j) = Tr[σ_i N(σ_j)]/2. The Bloch map is then
 * r ↦ t + T r with t the first column below the corner and T the
 * lower-right 3x3 block. The Choi matrix is
 *   C = Σ_kl N(|k⟩⟨l|) ⊗ |k⟩⟨l| = (N ⊗ id)(|Φ+⟩⟨Φ+|)·2,
 * output factor first, so Tr C = 2 and Tr_out C = I for trace-preserving N.
 *
 * Everything here is plain linear algebra and serves as the independent
 * oracle for the Grassmann-side computations.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qgc/errors.hpp"
#include "qgc/grassmann.hpp"

namespace qgc {

using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Ptm = Eigen::Matrix4d;
using Vector3 = Eigen::Vector3d;

inline constexpr double kEigenvalueFloor = -1e-9;
inline constexpr double kTracePreservationTol = 1e-12;
inline constexpr double kDiagonalBlockTol = 1e-10;
inline constexpr double kStateTol = 1e-9;

/// Pauli matrix k in (I, σ1, σ2, σ3), basis (|0⟩, |1⟩), σ3 = diag(1, −1).
inline Matrix2 pauli(int k) {
  using namespace std::complex_literals;
  Matrix2 m;
  switch (k) {
    case 0: m << 1.0, 0.0, 0.0, 1.0; break;
    case 1: m << 0.0, 1.0, 1.0, 0.0; break;
    case 2: m << 0.0, -1.0i, 1.0i, 0.0; break;
    default: m << 1.0, 0.0, 0.0, -1.0; break;
  }
  return m;
}

/// σ+ = |1⟩⟨0|
inline Matrix2 sigma_plus() {
  Matrix2 m = Matrix2::Zero();
  m(1, 0) = 1.0;
  return m;
}

/// σ− = |0⟩⟨1|
inline Matrix2 sigma_minus() { return sigma_plus().adjoint(); }

/// ρ = [[p, γ], [γ*, 1−p]].
class QubitState {
 public:
  QubitState() : QubitState(0.5, 0.0) {}

  QubitState(double p, Complex gamma) : p_(p), gamma_(gamma) {
    if (!(p >= -kStateTol && p <= 1.0 + kStateTol)) throw NotPhysicalError("QubitState: p outside [0, 1]");
    if (std::norm(gamma) > p * (1.0 - p) + kStateTol) throw NotPhysicalError("QubitState: |gamma|^2 exceeds p(1-p)");
  }

  static QubitState from_bloch(const Vector3& r) {
    return QubitState((1.0 + r(2)) / 2.0, Complex(r(0), -r(1)) / 2.0);
  }

  static QubitState from_matrix(const Matrix2& m) {
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kStateTol) throw NotPhysicalError("QubitState: matrix is not Hermitian");
    if (std::abs(m.trace() - 1.0) > kStateTol) throw NotPhysicalError("QubitState: trace differs from 1");
    return QubitState(m(0, 0).real(), m(0, 1));
  }

  double p() const { return p_; }
  Complex gamma() const { return gamma_; }

  Vector3 bloch() const { return Vector3(2.0 * gamma_.real(), -2.0 * gamma_.imag(), 2.0 * p_ - 1.0); }

  Matrix2 matrix() const {
    Matrix2 m;
    m << p_, gamma_, std::conj(gamma_), 1.0 - p_;
    return m;
  }

  double purity() const { return (matrix() * matrix()).trace().real(); }

 private:
  double p_;
  Complex gamma_;
};

inline double max_abs_diff(const QubitState& a, const QubitState& b) {
  return std::max(std::abs(a.p() - b.p()), std::abs(a.gamma() - b.gamma()));
}

/// Canonical-form parameters: Bloch map r ↦ t + diag(λ) r.
struct CanonicalParams {
  Vector3 t = Vector3::Zero();
  Vector3 lambda = Vector3::Ones();
};

inline Ptm ptm_from_canonical(const CanonicalParams& c) {
  Ptm m = Ptm::Zero();
  m(0, 0) = 1.0;
  for (int k = 0; k < 3; ++k) {
    m(k + 1, 0) = c.t(k);
    m(k + 1, k + 1) = c.lambda(k);
  }
  return m;
}

/// Σ_k A_k† A_k − I, largest entry magnitude.
inline double kraus_completeness_error(const std::vector<Matrix2>& kraus) {
  Matrix2 s = Matrix2::Zero();
  for (const auto& a : kraus) s += a.adjoint() * a;
  return (s - Matrix2::Identity()).cwiseAbs().maxCoeff();
}

/// PTM entry (i, j) = Tr[σ_i Σ_k A_k σ_j A_k†]/2.
inline Ptm ptm_from_kraus(const std::vector<Matrix2>& kraus) {
  if (kraus.empty() || kraus_completeness_error(kraus) > kTracePreservationTol) {
    throw NotTracePreservingError("ptm_from_kraus: Kraus operators do not satisfy sum A^dag A = I");
  }
  Ptm m;
  for (int j = 0; j < 4; ++j) {
    Matrix2 image = Matrix2::Zero();
    for (const auto& a : kraus) image += a * pauli(j) * a.adjoint();
    for (int i = 0; i < 4; ++i) m(i, j) = (pauli(i) * image).trace().real() / 2.0;
  }
  return m;
}

class QubitChannel {
 public:
  QubitChannel() : ptm_(Ptm::Identity()) {}

  static QubitChannel canonical(const CanonicalParams& c) { return QubitChannel(ptm_from_canonical(c)); }
  static QubitChannel canonical(const Vector3& t, const Vector3& lambda) { return canonical(CanonicalParams{t, lambda}); }
  static QubitChannel from_ptm(const Ptm& ptm) { return QubitChannel(ptm); }

  static QubitChannel from_kraus(std::vector<Matrix2> kraus) {
    QubitChannel ch(ptm_from_kraus(kraus));
    ch.kraus_ = std::move(kraus);
    return ch;
  }

  const Ptm& ptm() const { return ptm_; }
  const std::optional<std::vector<Matrix2>>& kraus() const { return kraus_; }

  Vector3 t() const { return ptm_.block<3, 1>(1, 0); }
  Eigen::Matrix3d block() const { return ptm_.block<3, 3>(1, 1); }
  Vector3 lambda() const { return block().diagonal(); }

  /// Image of an arbitrary (not necessarily Hermitian) 2x2 operator.
  Matrix2 apply_to_operator(const Matrix2& a) const {
    if (kraus_) {
      Matrix2 r = Matrix2::Zero();
      for (const auto& k : *kraus_) r += k * a * k.adjoint();
      return r;
    }
    Matrix2 r = Matrix2::Zero();
    for (int j = 0; j < 4; ++j) {
      const Complex aj = (pauli(j) * a).trace() / 2.0;
      if (aj == Complex{}) continue;
      for (int i = 0; i < 4; ++i) r += ptm_(i, j) * aj * pauli(i);
    }
    return r;
  }

 private:
  explicit QubitChannel(const Ptm& ptm) : ptm_(ptm) {}

  Ptm ptm_;
  std::optional<std::vector<Matrix2>> kraus_;
};

/// C = ½ Σ_ij ptm_ij σ_i ⊗ σ_jᵀ (output ⊗ input).
inline Matrix4 choi_matrix(const QubitChannel& ch) {
  Matrix4 c = Matrix4::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double v = ch.ptm()(i, j);
      if (v == 0.0) continue;
      const Matrix2 a = pauli(i);
      const Matrix2 b = pauli(j).transpose();
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) c.block<2, 2>(2 * r, 2 * s) += 0.5 * v * a(r, s) * b;
    }
  return c;
}

/// Traces out the output factor of a Choi matrix.
inline Matrix2 choi_input_marginal(const Matrix4& c) {
  Matrix2 m = Matrix2::Zero();
  for (int r = 0; r < 2; ++r) m += c.block<2, 2>(2 * r, 2 * r);
  return m;
}

struct CptpDiagnostics {
  bool ok = false;
  double min_choi_eigenvalue = 0.0;
  double trace_preservation_error = 0.0;

  explicit operator bool() const { return ok; }
};

inline CptpDiagnostics is_cptp(const QubitChannel& ch) {
  const Matrix4 c = choi_matrix(ch);
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(c, Eigen::EigenvaluesOnly);
  CptpDiagnostics d;
  d.min_choi_eigenvalue = solver.eigenvalues().minCoeff();
  d.trace_preservation_error = (choi_input_marginal(c) - Matrix2::Identity()).cwiseAbs().maxCoeff();
  if (ch.kraus()) d.trace_preservation_error = std::max(d.trace_preservation_error, kraus_completeness_error(*ch.kraus()));
  d.ok = d.min_choi_eigenvalue >= kEigenvalueFloor && d.trace_preservation_error <= kTracePreservationTol;
  return d;
}

inline void require_cptp(const QubitChannel& ch, const char* where) {
  const auto d = is_cptp(ch);
  if (!d) {
    throw NotCptpError(std::string(where) + ": channel is not CPTP (min Choi eigenvalue " +
                       format_real(d.min_choi_eigenvalue) + ", trace-preservation error " +
                       format_real(d.trace_preservation_error) + ")");
  }
}

/// Reads (t, λ) off a PTM whose lower-right block is already diagonal.
inline CanonicalParams canonical_from_ptm(const Ptm& ptm, double tol = kDiagonalBlockTol) {
  Eigen::Matrix3d block = ptm.block<3, 3>(1, 1);
  Eigen::Matrix3d off = block;
  off.diagonal().setZero();
  if (off.cwiseAbs().maxCoeff() > tol) {
    throw NonDiagonalBlockError("canonical_from_ptm: lower-right 3x3 block is not diagonal; canonicalize the channel first");
  }
  return CanonicalParams{ptm.block<3, 1>(1, 0), block.diagonal()};
}

/// Output state; uses the Kraus list when present, the Bloch map otherwise.
inline QubitState apply_channel(const QubitChannel& ch, const QubitState& rho) {
  require_cptp(ch, "apply_channel");
  if (ch.kraus()) return QubitState::from_matrix(ch.apply_to_operator(rho.matrix()));
  return QubitState::from_bloch(ch.t() + ch.block() * rho.bloch());
}

/// second ∘ first
inline QubitChannel compose(const QubitChannel& second, const QubitChannel& first) {
  if (second.kraus() && first.kraus()) {
    std::vector<Matrix2> k;
    for (const auto& a : *second.kraus())
      for (const auto& b : *first.kraus()) k.push_back(a * b);
    return QubitChannel::from_kraus(std::move(k));
  }
  return QubitChannel::from_ptm(second.ptm() * first.ptm());
}

}  // namespace qgc
