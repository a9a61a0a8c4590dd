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

#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "gcap/symplectic.hpp"

namespace gcap {

inline constexpr double kUnitTauTol = 1e-12;
inline constexpr double kRankTol = 1e-10;
inline constexpr double kNoiselessTol = 1e-12;

/// One-mode Gaussian channel acting as x -> T x + d, V -> T V T^t + N.
/// Stochastic environment contributions always live in N; d is deterministic.
struct GaussianChannel1M {
  Eigen::Matrix2d T = Eigen::Matrix2d::Identity();
  Eigen::Matrix2d N = Eigen::Matrix2d::Zero();
  Eigen::Vector2d d = Eigen::Vector2d::Zero();

  static GaussianChannel1M identity() { return {}; }
};

/// Smallest eigenvalue of the Hermitian matrix N + i(1 - det T) omega.
double cptp_min_eigenvalue(const GaussianChannel1M& ch);

/// True when N is symmetric and the CPTP matrix is PSD within
/// tol * max(1, scale of N and 1 - det T).
bool is_cptp(const GaussianChannel1M& ch, double tol = kPhysicalityTol);

/// Throws NonCptpError (with the violating eigenvalue in the message) or
/// InvalidArgument for non-finite / asymmetric input.
void validate_cptp(const GaussianChannel1M& ch, double tol = kPhysicalityTol);

enum class ChannelClass {
  loss,
  amplification,
  random_displacement,
  phase_conjugation,
  identity,
  degenerate,
};

std::string_view to_string(ChannelClass c);

/// Canonical invariants of a one-mode channel.
struct ChannelInvariants {
  double tau = 0.0;               // det T
  int r = 0;                      // min(rank T, rank N)
  std::optional<double> n_e;      // undefined on the tau = 1 branch
  double sigma2 = 0.0;            // sqrt(det N)
  ChannelClass class_label = ChannelClass::degenerate;
};

CovarianceState apply_channel(const GaussianChannel1M& ch,
                              const CovarianceState& state);

ChannelInvariants classify(const GaussianChannel1M& ch,
                           double tol = kPhysicalityTol);

/// Thermal entropy g(n) = (n+1) log2(n+1) - n log2 n, with g(0) = 0.
double g_entropy(double n);

/// Lower bound on the quantum capacity in bits per use:
///   tau != 1:  max{0, log2|tau / (1 - tau)| - g(n_e)}
///   tau == 1:  max{0, log2(2 / (e sigma2))}, +inf when sigma2 == 0.
double q_lower_bound(const ChannelInvariants& inv);
double q_lower_bound(const GaussianChannel1M& ch,
                     double tol = kPhysicalityTol);

/// Channel that applies `first` then `second`.
GaussianChannel1M compose(const GaussianChannel1M& second,
                          const GaussianChannel1M& first);

// Named channels. Ancilla/environment occupations are thermal photon numbers.

GaussianChannel1M amplification(double gain, double ancilla_thermal_n = 0.0);
GaussianChannel1M phase_conjugation(double gain,
                                    double ancilla_thermal_n = 0.0);
GaussianChannel1M loss(double eta, double thermal_n = 0.0);
GaussianChannel1M random_displacement(double sigma2);

}  // namespace gcap
