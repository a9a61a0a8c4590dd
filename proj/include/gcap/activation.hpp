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

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gcap/channel.hpp"
#include "gcap/symplectic.hpp"

namespace gcap {

/// Gains of the activation circuit: the amplifier G (> 1), the entangling
/// squeezer G' between the noise mode and the ancilla, and the anti-squeezer
/// G'' between the complementary output and the ancilla.
struct ActivationParams {
  double G = 2.0;
  double G_p = 1.0;
  double G_pp = 1.0;

  /// Throws InvalidArgument unless G > 1 and G', G'' >= 1 (all finite).
  void validate() const;
  /// Transmissivity (G - 1)(G'' - 1) of the activated channel.
  double tau() const { return (G - 1.0) * (G_pp - 1.0); }
};

struct CircuitOp {
  double gain = 1.0;
  SqueezeSign sign = SqueezeSign::squeeze;
  int first = 0;
  int second = 1;
};

/// Multimode squeezing circuit acting on thermal inputs.
struct CircuitSpec {
  int n_modes = 0;
  std::vector<double> input_occupations;  // one per mode, 0 = vacuum
  std::vector<CircuitOp> ops;             // applied in order

  void validate() const;
};

// Mode labels of the activation circuit.
inline constexpr int kModeB = 0;      // signal input
inline constexpr int kModeA = 1;      // amplifier noise mode / a_f output
inline constexpr int kModeAlpha = 2;  // ancilla / alpha_out output

/// Isotropic noise m of the b -> alpha_out channel:
///   (sqrt(G'G'') - sqrt((G'-1)(G''-1)G))^2
/// + (sqrt((G'-1)G'') - sqrt(G'(G''-1)G))^2
double eac_noise_m(const ActivationParams& p);

/// Closed form of b -> alpha_out: T = -sqrt((G''-1)(G-1)) I, N = m I.
GaussianChannel1M eac_channel(const ActivationParams& p);

/// The b -> a_f channel, read off the circuit. Its T is cross-checked
/// against diag(sqrt(G''(G-1)), -sqrt(G''(G-1))).
GaussianChannel1M rejected_af_channel(const ActivationParams& p);

/// Three vacuum modes (b, a, alpha) with
///   [tms(G', squeeze, (a, alpha)), tms(G, squeeze, (a, b)),
///    tms(G'', anti_squeeze, (a, alpha))].
CircuitSpec build_activation_circuit(const ActivationParams& p);

/// Product of the embedded op matrices, last op leftmost.
Eigen::MatrixXd circuit_symplectic(const CircuitSpec& c);

/// Output state of the circuit on its declared thermal inputs.
CovarianceState run_circuit(const CircuitSpec& c);

/// Channel from in_mode to out_mode with every other input treated as a
/// thermal environment: T is the (out, in) block of the circuit symplectic,
/// N = sum_e S(out, e) (2 n_e + 1) S(out, e)^t.
GaussianChannel1M extract_induced_channel(const CircuitSpec& c, int in_mode,
                                          int out_mode,
                                          double tol = kPhysicalityTol);

struct OptimalGprime {
  double g_prime = 1.0;
  double n_e_min = 0.0;
};

/// Minimizes n_e of the activated channel over G' at fixed (G, G'') by a
/// grid scan followed by Brent refinement. Requires G, G'' > 1 and
/// tau != 1. `workers` <= 0 uses the OpenMP default thread count.
OptimalGprime optimal_gprime(double G, double G_pp, int workers = 0);

/// Unclamped n_e of eac_channel(G, g', G'') for each g' in the grid.
/// Serial reference and OpenMP kernel; both return identical values.
std::vector<double> noise_profile_serial(double G, double G_pp,
                                         std::span<const double> g_primes);
std::vector<double> noise_profile_parallel(double G, double G_pp,
                                           std::span<const double> g_primes,
                                           int workers = 0);

}  // namespace gcap
