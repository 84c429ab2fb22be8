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
 * @file degradability.hpp
 * @brief Qubit-qubit dilations and degradability certificates.
 *
 * Two-qubit vectors are indexed |s e⟩ ↦ 2s + e, system first. The dilation
 * of a Gaussian channel with angles (θ, φ) and environment
 * ρ_E = q|0⟩⟨0| + (1 − q)|1⟩⟨1| is the real orthogonal U with
 *
 *   |0⟩|0⟩ ↦  cosθ|00⟩ + sinθ|11⟩      |0⟩|1⟩ ↦  cosφ|01⟩ − sinφ|10⟩
 *   |1⟩|0⟩ ↦  cosφ|10⟩ + sinφ|01⟩      |1⟩|1⟩ ↦  cosθ|11⟩ − sinθ|00⟩
 *
 * The |·⟩|1⟩ columns are chosen so that the environment-|1⟩ branch yields
 * the same λ's with t3 reversed, which is what makes the mixture reproduce
 * t3 = (2q − 1)(cos2θ − cos2φ)/2.
 *
 * Certificates are found by solving PTM equations and are only accepted
 * after re-verification (residual and Choi spectrum). A NeitherCertified
 * verdict means "not certified", not "not degradable".
 */
#pragma once

#include <cmath>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "qgc/green.hpp"
#include "qgc/qubit.hpp"

namespace qgc {

inline constexpr double kCertificateTol = 1e-9;
inline constexpr double kBoundaryTol = 1e-12;

struct Dilation {
  Matrix4 unitary;
  QubitState environment;
};

inline Dilation dilation_from_angles(const AngleParams& ap) {
  const double ct = std::cos(ap.theta), st = std::sin(ap.theta);
  const double cp = std::cos(ap.phi), sp = std::sin(ap.phi);
  Matrix4 u = Matrix4::Zero();
  u(0, 0) = ct;
  u(3, 0) = st;
  u(2, 2) = cp;
  u(1, 2) = sp;
  u(1, 1) = cp;
  u(2, 1) = -sp;
  u(3, 3) = ct;
  u(0, 3) = -st;
  return Dilation{u, QubitState(ap.q, 0.0)};
}

namespace detail {

inline Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return r;
}

inline Matrix2 trace_environment(const Matrix4& m) {
  Matrix2 r = Matrix2::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int e = 0; e < 2; ++e) r(a, b) += m(2 * a + e, 2 * b + e);
  return r;
}

inline Matrix2 trace_system(const Matrix4& m) {
  Matrix2 r = Matrix2::Zero();
  for (int e = 0; e < 2; ++e)
    for (int f = 0; f < 2; ++f)
      for (int s = 0; s < 2; ++s) r(e, f) += m(2 * s + e, 2 * s + f);
  return r;
}

// PTM of the map X ↦ partial(U (X ⊗ ρ_E) U†).
template <class PartialTrace>
Ptm dilated_ptm(const Dilation& d, PartialTrace partial) {
  Ptm m;
  const Matrix2 env = d.environment.matrix();
  for (int j = 0; j < 4; ++j) {
    const Matrix2 out = partial(d.unitary * kron(pauli(j), env) * d.unitary.adjoint());
    for (int i = 0; i < 4; ++i) m(i, j) = (pauli(i) * out).trace().real() / 2.0;
  }
  return m;
}

}  // namespace detail

inline double unitarity_error(const Matrix4& u) {
  return (u.adjoint() * u - Matrix4::Identity()).cwiseAbs().maxCoeff();
}

/// ρ ↦ Tr_E[U(ρ ⊗ ρ_E)U†]
inline QubitChannel system_channel(const Dilation& d) {
  return QubitChannel::from_ptm(detail::dilated_ptm(d, detail::trace_environment));
}

/// ρ ↦ Tr_S[U(ρ ⊗ ρ_E)U†]
inline QubitChannel weakly_complementary(const Dilation& d) {
  return QubitChannel::from_ptm(detail::dilated_ptm(d, detail::trace_system));
}

enum class VerdictKind { weakly_degradable, anti_degradable, neither_certified };

inline std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::weakly_degradable: return "weakly_degradable";
    case VerdictKind::anti_degradable: return "anti_degradable";
    case VerdictKind::neither_certified: return "neither_certified";
  }
  return "?";
}

/// Candidate map M with ptm(M)·ptm(source) ≈ ptm(target).
struct CertificateAttempt {
  QubitChannel map;
  double residual = 0.0;
  CptpDiagnostics cptp;
  bool accepted = false;
};

/// Minimum-norm least-squares solve of M·S = T, then re-verification.
inline CertificateAttempt certificate_attempt(const QubitChannel& source, const QubitChannel& target,
                                              double tol = kCertificateTol) {
  const Ptm& s = source.ptm();
  const Ptm& t = target.ptm();
  const Ptm m = s.transpose().completeOrthogonalDecomposition().solve(t.transpose()).transpose();
  CertificateAttempt a{QubitChannel::from_ptm(m), 0.0, {}, false};
  a.residual = (m * s - t).cwiseAbs().maxCoeff();
  a.cptp = is_cptp(a.map);
  a.accepted = a.residual <= tol && a.cptp.ok;
  return a;
}

struct DegradabilityVerdict {
  VerdictKind kind = VerdictKind::neither_certified;
  std::optional<QubitChannel> witness;
  /// Residual and Choi floor of the witness; of the weak attempt when there is none.
  double residual = 0.0;
  double min_choi_eigenvalue = 0.0;
  CertificateAttempt weak;
  std::optional<CertificateAttempt> anti;
};

/// Tries D∘N = Ñ first, then D'∘Ñ = N.
inline DegradabilityVerdict certify(const QubitChannel& channel, const QubitChannel& complement,
                                    double tol = kCertificateTol) {
  require_cptp(channel, "certify");
  require_cptp(complement, "certify");
  DegradabilityVerdict v;
  v.weak = certificate_attempt(channel, complement, tol);
  v.residual = v.weak.residual;
  v.min_choi_eigenvalue = v.weak.cptp.min_choi_eigenvalue;
  if (v.weak.accepted) {
    v.kind = VerdictKind::weakly_degradable;
    v.witness = v.weak.map;
    return v;
  }
  v.anti = certificate_attempt(complement, channel, tol);
  if (v.anti->accepted) {
    v.kind = VerdictKind::anti_degradable;
    v.witness = v.anti->map;
    v.residual = v.anti->residual;
    v.min_choi_eigenvalue = v.anti->cptp.min_choi_eigenvalue;
  }
  return v;
}

enum class PredictedKind { weakly_degradable, anti_degradable, null_capacity_claimed, boundary };

inline std::string to_string(PredictedKind k) {
  switch (k) {
    case PredictedKind::weakly_degradable: return "weakly_degradable";
    case PredictedKind::anti_degradable: return "anti_degradable";
    case PredictedKind::null_capacity_claimed: return "null_capacity_claimed";
    case PredictedKind::boundary: return "boundary";
  }
  return "?";
}

inline bool is_pure_environment(const AngleParams& ap) {
  return std::abs(ap.q) <= kBoundaryTol || std::abs(1.0 - ap.q) <= kBoundaryTol;
}

/// Sign of cos2θ/cos2φ; cos2φ = 0 is reported as boundary.
inline PredictedKind classify_by_angles(const AngleParams& ap) {
  const double num = std::cos(2.0 * ap.theta);
  const double den = std::cos(2.0 * ap.phi);
  if (std::abs(den) <= kBoundaryTol) return PredictedKind::boundary;
  if (num / den >= 0.0) return PredictedKind::weakly_degradable;
  return is_pure_environment(ap) ? PredictedKind::anti_degradable : PredictedKind::null_capacity_claimed;
}

}  // namespace qgc
