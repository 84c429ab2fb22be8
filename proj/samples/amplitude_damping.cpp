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

// Walks an amplitude damping channel through the library: Green function,
// Gaussian parameters, angles, dilation and degradability certificate.

#include <iostream>

#include "qgc/qgc.hpp"

int main(int argc, char** argv) {
  const double n = argc > 1 ? std::stod(argv[1]) : 0.75;
  const qgc::NamedChannel ad{qgc::ChannelName::amplitude_damping, {{"n", n}}};

  const qgc::QubitChannel ch = qgc::build(ad);
  const qgc::GreenFunction g = qgc::green_from_canonical(qgc::canonical_params(ad));
  std::cout << "G = " << g.body << '\n';

  // Push a state through both routes.
  const qgc::QubitState rho = qgc::QubitState::from_bloch(qgc::Vector3(0.3, -0.2, 0.5));
  const auto out_green = qgc::state_from_char(qgc::apply_green(g, qgc::char_function(rho)));
  const auto out_bloch = qgc::apply_channel(ch, rho);
  std::cout << "output p: " << out_green.p() << " (Bloch map " << out_bloch.p() << ")\n";

  const auto gp = qgc::detect_gaussian(g);
  if (!gp) return 1;
  const qgc::AngleParams ap = qgc::angles_from_gaussian(*gp);
  std::cout << "theta = " << ap.theta << ", phi = " << ap.phi << ", q = " << ap.q << '\n';

  const qgc::Dilation d = qgc::dilation_from_angles(ap);
  const auto verdict = qgc::certify(qgc::system_channel(d), qgc::weakly_complementary(d));
  std::cout << "predicted " << qgc::to_string(qgc::classify_by_angles(ap)) << ", certified "
            << qgc::to_string(verdict.kind) << " (residual " << verdict.residual << ")\n";
  return 0;
}
