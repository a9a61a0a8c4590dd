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

#pragma once

#include "gcap/activation.hpp"

namespace gcap {

/// Electro-optic device rates in rad/s. Only the cooperativity matters
/// downstream.
struct EOParams {
  double coupling_g = 0.0;
  double kappa_o = 1.0;
  double kappa_e = 1.0;
};

/// C_g = 4 g^2 / (kappa_o kappa_e). Throws InvalidArgument for non-positive
/// rates or C_g >= 1 (unstable).
double cooperativity(const EOParams& p);

/// On-resonance amplifier gain G = ((1 + C_g) / (1 - C_g))^2, C_g in [0, 1).
double gain_from_cooperativity(double c_g);

/// Inverse of gain_from_cooperativity for G >= 1.
double cooperativity_from_gain(double gain);

/// Capacity lower bound of the activated transduction channel at C_g in (0, 1).
double transduction_qlb(double c_g, double G_p, double G_pp);

}  // namespace gcap
