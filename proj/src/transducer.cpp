// Copyright 2026 The gcap Authors
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

#include "gcap/transducer.hpp"

#include <cmath>
#include <string>

#include "gcap/errors.hpp"

namespace gcap {

double cooperativity(const EOParams& p) {
  if (!(p.kappa_o > 0.0) || !(p.kappa_e > 0.0) || !std::isfinite(p.kappa_o) ||
      !std::isfinite(p.kappa_e)) {
    throw InvalidArgument("cooperativity: dissipation rates must be > 0");
  }
  if (!(p.coupling_g >= 0.0) || !std::isfinite(p.coupling_g)) {
    throw InvalidArgument("cooperativity: coupling must be finite and >= 0");
  }
  const double c_g =
      4.0 * p.coupling_g * p.coupling_g / (p.kappa_o * p.kappa_e);
  if (!(c_g < 1.0)) {
    throw InvalidArgument("cooperativity: C_g = " + std::to_string(c_g) +
                          " >= 1, the electro-optic system is unstable");
  }
  return c_g;
}

double gain_from_cooperativity(double c_g) {
  if (!(c_g >= 0.0 && c_g < 1.0)) {
    throw InvalidArgument("gain_from_cooperativity: C_g must lie in [0, 1), "
                          "got " + std::to_string(c_g));
  }
  const double r = (1.0 + c_g) / (1.0 - c_g);
  return r * r;
}

double cooperativity_from_gain(double gain) {
  if (!(gain >= 1.0) || !std::isfinite(gain)) {
    throw InvalidArgument("cooperativity_from_gain: gain must be >= 1");
  }
  const double s = std::sqrt(gain);
  return (s - 1.0) / (s + 1.0);
}

double transduction_qlb(double c_g, double G_p, double G_pp) {
  if (!(c_g > 0.0 && c_g < 1.0)) {
    throw InvalidArgument("transduction_qlb: C_g must lie in (0, 1), got " +
                          std::to_string(c_g));
  }
  return q_lower_bound(eac_channel({gain_from_cooperativity(c_g), G_p, G_pp}));
}

}  // namespace gcap
