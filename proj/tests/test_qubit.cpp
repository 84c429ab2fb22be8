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

#include <catch2/catch_amalgamated.hpp>

#include "qgc/catalog.hpp"
#include "qgc/qubit.hpp"
#include "qgc/random.hpp"
#include "support.hpp"

using namespace qgc;
using qgc_test::Gen;

namespace {

double ptm_diff(const Ptm& a, const Ptm& b) { return (a - b).cwiseAbs().maxCoeff(); }

QubitChannel canonical(Vector3 t, Vector3 l) { return QubitChannel::canonical(t, l); }

QubitChannel amplitude_damping(double n) {
  return canonical(Vector3(0, 0, 1 - n), Vector3(std::sqrt(n), std::sqrt(n), n));
}

QubitChannel bit_flip(double s) { return canonical(Vector3::Zero(), Vector3(1, 2 * s - 1, 2 * s - 1)); }

}  // namespace

TEST_CASE("state validation", "[qubit]") {
  CHECK_NOTHROW(QubitState(1.0, 0.0));
  CHECK_NOTHROW(QubitState(0.5, Complex(0.5, 0.0)));
  CHECK_THROWS_AS(QubitState(1.2, 0.0), NotPhysicalError);
  CHECK_THROWS_AS(QubitState(0.5, Complex(0.4, 0.4)), NotPhysicalError);
  const QubitState s = QubitState::from_bloch(Vector3(0.2, -0.4, 0.6));
  CHECK(s.p() == Catch::Approx(0.8));
  CHECK(std::abs(s.gamma() - Complex(0.1, 0.2)) < 1e-15);
  CHECK((s.bloch() - Vector3(0.2, -0.4, 0.6)).norm() < 1e-15);
}

TEST_CASE("apply_channel examples", "[qubit]") {
  Gen gen(1);
  for (int i = 0; i < 20; ++i) {
    const auto r = gen.bloch();
    const QubitState rho = QubitState::from_bloch(Vector3(r[0], r[1], r[2]));
    CHECK(max_abs_diff(apply_channel(QubitChannel(), rho), rho) <= 1e-15);

    const double s = gen.real(0, 1);
    const QubitState out = apply_channel(build(ChannelName::depolarizing, {{"s", s}}), rho);
    const Matrix2 expected = (s / 2.0) * Matrix2::Identity() + (1 - s) * rho.matrix();
    CHECK((out.matrix() - expected).cwiseAbs().maxCoeff() <= 1e-15);
  }
  const double n = 0.3;
  const QubitState out = apply_channel(amplitude_damping(n), QubitState(0.0, 0.0));
  CHECK(out.p() == Catch::Approx(1 - n).margin(1e-15));
  CHECK(std::abs(out.gamma()) <= 1e-15);
}

TEST_CASE("ptm_from_kraus examples", "[qubit]") {
  for (double s : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    const Ptm m = ptm_from_kraus({std::sqrt(s) * pauli(0), std::sqrt(1 - s) * pauli(2)});
    CHECK(ptm_diff(m, ptm_from_canonical({Vector3::Zero(), Vector3(2 * s - 1, 1, 2 * s - 1)})) <= 1e-15);
  }
  for (double n : {0.1, 0.5, 0.8})
    for (double s : {0.0, 0.3, 0.7}) {
      const NamedChannel gad{ChannelName::generalized_amplitude_damping, {{"n", n}, {"s", s}}};
      const Ptm m = ptm_from_kraus(*kraus_operators(gad));
      const auto c = canonical_from_ptm(m);
      CHECK(c.t(2) == Catch::Approx((1 - n) * (2 * s - 1)).margin(1e-15));
      CHECK((c.lambda - Vector3(std::sqrt(n), std::sqrt(n), n)).cwiseAbs().maxCoeff() <= 1e-15);
      CHECK(c.t.head<2>().norm() <= 1e-15);
    }
  CHECK(ptm_diff(ptm_from_kraus({Matrix2::Identity()}), Ptm::Identity()) == 0.0);
  CHECK_THROWS_AS(ptm_from_kraus({0.5 * Matrix2::Identity()}), NotTracePreservingError);
}

TEST_CASE("canonical_from_ptm examples", "[qubit]") {
  const auto c = canonical_from_ptm(amplitude_damping(0.36).ptm());
  CHECK((c.t - Vector3(0, 0, 0.64)).norm() <= 1e-15);
  CHECK((c.lambda - Vector3(0.6, 0.6, 0.36)).norm() <= 1e-15);
  const auto id = canonical_from_ptm(Ptm::Identity());
  CHECK(id.t.norm() == 0.0);
  CHECK(id.lambda == Vector3(1, 1, 1));
  Ptm bad = Ptm::Identity();
  bad(1, 2) = 0.3;
  CHECK_THROWS_AS(canonical_from_ptm(bad), NonDiagonalBlockError);
}

TEST_CASE("is_cptp examples", "[qubit]") {
  for (double n = 0.0; n <= 1.0; n += 0.05) CHECK(is_cptp(amplitude_damping(n)).ok);
  const auto d = is_cptp(canonical(Vector3::Zero(), Vector3(1, 1, -1)));
  CHECK_FALSE(d.ok);
  CHECK(d.min_choi_eigenvalue == Catch::Approx(-1.0));
  CHECK(is_cptp(QubitChannel()).ok);
  CHECK_THROWS_AS(apply_channel(canonical(Vector3::Zero(), Vector3(1, 1, -1)), QubitState()), NotCptpError);
  // Non-trace-preserving PTM: first row is not (1, 0, 0, 0).
  Ptm m = Ptm::Identity();
  m(0, 3) = 0.1;
  CHECK(is_cptp(QubitChannel::from_ptm(m)).trace_preservation_error > 1e-3);
}

TEST_CASE("Choi matrix normalization", "[qubit][property]") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const QubitChannel ch = QubitChannel::canonical(random_canonical(rng));
    const Matrix4 c = choi_matrix(ch);
    CHECK(std::abs(c.trace() - 2.0) <= 1e-14);
    CHECK((c - c.adjoint()).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(is_cptp(ch).min_choi_eigenvalue >= kEigenvalueFloor);
  }
  // Identity channel: 2|Φ+⟩⟨Φ+|.
  Matrix4 phi = Matrix4::Zero();
  phi(0, 0) = phi(0, 3) = phi(3, 0) = phi(3, 3) = 1.0;
  CHECK((choi_matrix(QubitChannel()) - phi).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("compose examples", "[qubit]") {
  const QubitChannel ad = amplitude_damping(0.4);
  CHECK(ptm_diff(compose(QubitChannel(), ad).ptm(), ad.ptm()) == 0.0);
  const QubitChannel bb = compose(bit_flip(0.3), bit_flip(0.8));
  CHECK(bb.lambda()(1) == Catch::Approx((2 * 0.3 - 1) * (2 * 0.8 - 1)));
  const QubitChannel aa = compose(amplitude_damping(0.3), amplitude_damping(0.6));
  CHECK(aa.lambda()(0) == Catch::Approx(std::sqrt(0.3 * 0.6)));
  // Kraus composition keeps the Kraus form.
  const NamedChannel n1{ChannelName::amplitude_damping, {{"n", 0.3}}};
  const NamedChannel n2{ChannelName::amplitude_damping, {{"n", 0.6}}};
  const QubitChannel k = compose(QubitChannel::from_kraus(*kraus_operators(n1)), QubitChannel::from_kraus(*kraus_operators(n2)));
  CHECK(k.kraus().has_value());
  CHECK(ptm_diff(k.ptm(), aa.ptm()) <= 1e-15);
}

TEST_CASE("compose is associative", "[qubit][property]") {
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const auto a = QubitChannel::canonical(random_canonical(rng));
    const auto b = QubitChannel::canonical(random_canonical(rng));
    const auto c = QubitChannel::canonical(random_canonical(rng));
    CHECK(ptm_diff(compose(compose(a, b), c).ptm(), compose(a, compose(b, c)).ptm()) <= 1e-12);
  }
}

TEST_CASE("Kraus and PTM application agree", "[qubit][property]") {
  Gen gen(21);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    NamedChannel nc{ChannelName::generalized_amplitude_damping, {{"n", gen.real(0, 1)}, {"s", gen.real(0, 1)}}};
    if (i % 3 == 1) nc = {ChannelName::amplitude_damping, {{"n", gen.real(0, 1)}}};
    if (i % 3 == 2) nc = {ChannelName::bit_phase_flip, {{"s", gen.real(0, 1)}}};
    const auto r = gen.bloch();
    const QubitState rho = QubitState::from_bloch(Vector3(r[0], r[1], r[2]));
    const QubitState via_kraus = apply_channel(QubitChannel::from_kraus(*kraus_operators(nc)), rho);
    const QubitState via_ptm = apply_channel(build(nc), rho);
    worst = std::max(worst, max_abs_diff(via_kraus, via_ptm));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("canonical parameters round trip through the PTM", "[qubit][property]") {
  Gen gen(4);
  for (int i = 0; i < 1000; ++i) {
    const CanonicalParams c{Vector3(gen.real(), gen.real(), gen.real()), Vector3(gen.real(), gen.real(), gen.real())};
    const auto back = canonical_from_ptm(ptm_from_canonical(c));
    CHECK((back.t - c.t).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((back.lambda - c.lambda).cwiseAbs().maxCoeff() <= 1e-12);
  }
}
