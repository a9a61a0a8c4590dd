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

#include "gcap/activation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/tools/minima.hpp>
#include <omp.h>

#include "gcap/errors.hpp"

namespace gcap {

namespace {

constexpr int kScanPoints = 2001;
constexpr double kInitialScanHi = 50.0;
constexpr double kMaxScanHi = 1e12;

// No validation: callers check the gains once, outside parallel regions.
double noise_m_unchecked(double G, double G_p, double G_pp) {
  const double sg = std::sqrt(G);
  const double sp = std::sqrt(G_p), sp1 = std::sqrt(G_p - 1.0);
  const double spp = std::sqrt(G_pp), spp1 = std::sqrt(G_pp - 1.0);
  const double ancilla_term = sp * spp - sp1 * spp1 * sg;
  const double noise_term = sp1 * spp - sp * spp1 * sg;
  return ancilla_term * ancilla_term + noise_term * noise_term;
}

double raw_n_e(double G, double G_p, double G_pp) {
  const double tau = (G - 1.0) * (G_pp - 1.0);
  return noise_m_unchecked(G, G_p, G_pp) / (2.0 * std::abs(1.0 - tau)) - 0.5;
}

void check_grid(std::span<const double> g_primes) {
  for (double gp : g_primes) {
    if (!(gp >= 1.0) || !std::isfinite(gp)) {
      throw InvalidArgument("noise profile: G' grid values must be >= 1");
    }
  }
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> xs(count);
  for (int i = 0; i < count; ++i) {
    xs[i] = lo + (hi - lo) * i / (count - 1);
  }
  xs.back() = hi;
  return xs;
}

}  // namespace

void ActivationParams::validate() const {
  if (!(G > 1.0) || !std::isfinite(G)) {
    throw InvalidArgument("activation: G must be > 1, got " +
                          std::to_string(G));
  }
  if (!(G_p >= 1.0) || !std::isfinite(G_p)) {
    throw InvalidArgument("activation: G' must be >= 1, got " +
                          std::to_string(G_p));
  }
  if (!(G_pp >= 1.0) || !std::isfinite(G_pp)) {
    throw InvalidArgument("activation: G'' must be >= 1, got " +
                          std::to_string(G_pp));
  }
}

void CircuitSpec::validate() const {
  if (n_modes < 1) {
    throw InvalidArgument("circuit: number of modes must be positive");
  }
  if (static_cast<int>(input_occupations.size()) != n_modes) {
    throw InvalidArgument("circuit: expected " + std::to_string(n_modes) +
                          " input occupations, got " +
                          std::to_string(input_occupations.size()));
  }
  for (double occ : input_occupations) {
    if (!(occ >= 0.0) || !std::isfinite(occ)) {
      throw InvalidArgument("circuit: input occupations must be >= 0");
    }
  }
  for (const auto& op : ops) {
    if (!(op.gain >= 1.0) || !std::isfinite(op.gain)) {
      throw InvalidArgument("circuit: squeezer gain must be >= 1");
    }
    if (op.first < 0 || op.first >= n_modes || op.second < 0 ||
        op.second >= n_modes || op.first == op.second) {
      throw InvalidArgument("circuit: invalid mode pair (" +
                            std::to_string(op.first) + ", " +
                            std::to_string(op.second) + ")");
    }
  }
}

double eac_noise_m(const ActivationParams& p) {
  p.validate();
  return noise_m_unchecked(p.G, p.G_p, p.G_pp);
}

GaussianChannel1M eac_channel(const ActivationParams& p) {
  GaussianChannel1M ch;
  const double m = eac_noise_m(p);
  ch.T = -std::sqrt((p.G_pp - 1.0) * (p.G - 1.0)) * Eigen::Matrix2d::Identity();
  ch.N = m * Eigen::Matrix2d::Identity();
  if (!is_cptp(ch)) {
    throw std::logic_error("eac_channel: closed form failed the CPTP check");
  }
  return ch;
}

CircuitSpec build_activation_circuit(const ActivationParams& p) {
  p.validate();
  CircuitSpec c;
  c.n_modes = 3;
  c.input_occupations.assign(3, 0.0);
  c.ops = {
      {p.G_p, SqueezeSign::squeeze, kModeA, kModeAlpha},
      {p.G, SqueezeSign::squeeze, kModeA, kModeB},
      {p.G_pp, SqueezeSign::anti_squeeze, kModeA, kModeAlpha},
  };
  return c;
}

Eigen::MatrixXd circuit_symplectic(const CircuitSpec& c) {
  c.validate();
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * c.n_modes, 2 * c.n_modes);
  for (const auto& op : c.ops) {
    s = embed(tms_symplectic(op.gain, op.sign), {op.first, op.second},
              c.n_modes) *
        s;
  }
  return s;
}

CovarianceState run_circuit(const CircuitSpec& c) {
  c.validate();
  auto state = CovarianceState::thermal(c.input_occupations);
  for (const auto& op : c.ops) {
    state = apply(state, tms_symplectic(op.gain, op.sign),
                  {op.first, op.second});
  }
  return state;
}

GaussianChannel1M extract_induced_channel(const CircuitSpec& c, int in_mode,
                                          int out_mode, double tol) {
  c.validate();
  if (in_mode < 0 || in_mode >= c.n_modes || out_mode < 0 ||
      out_mode >= c.n_modes) {
    throw InvalidArgument("extract_induced_channel: mode index out of range");
  }
  const Eigen::MatrixXd s = circuit_symplectic(c);
  GaussianChannel1M ch;
  ch.T = s.block<2, 2>(2 * out_mode, 2 * in_mode);
  ch.N.setZero();
  for (int e = 0; e < c.n_modes; ++e) {
    if (e == in_mode) continue;
    const Eigen::Matrix2d blk = s.block<2, 2>(2 * out_mode, 2 * e);
    ch.N += (2.0 * c.input_occupations[e] + 1.0) * blk * blk.transpose();
  }
  ch.N = 0.5 * (ch.N + ch.N.transpose()).eval();
  validate_cptp(ch, tol);
  return ch;
}

GaussianChannel1M rejected_af_channel(const ActivationParams& p) {
  auto ch = extract_induced_channel(build_activation_circuit(p), kModeB,
                                    kModeA);
  const double t = std::sqrt(p.G_pp * (p.G - 1.0));
  const Eigen::Matrix2d expected = Eigen::Vector2d(t, -t).asDiagonal();
  if ((ch.T - expected).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, t)) {
    throw std::logic_error("rejected_af_channel: circuit T disagrees with "
                           "diag(t, -t)");
  }
  return ch;
}

std::vector<double> noise_profile_serial(double G, double G_pp,
                                         std::span<const double> g_primes) {
  ActivationParams{G, 1.0, G_pp}.validate();
  check_grid(g_primes);
  std::vector<double> out(g_primes.size());
  for (std::size_t i = 0; i < g_primes.size(); ++i) {
    out[i] = raw_n_e(G, g_primes[i], G_pp);
  }
  return out;
}

std::vector<double> noise_profile_parallel(double G, double G_pp,
                                           std::span<const double> g_primes,
                                           int workers) {
  ActivationParams{G, 1.0, G_pp}.validate();
  check_grid(g_primes);
  const auto n = static_cast<std::ptrdiff_t>(g_primes.size());
  std::vector<double> out(g_primes.size());
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads) if (threads != 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = raw_n_e(G, g_primes[i], G_pp);
  }
  return out;
}

OptimalGprime optimal_gprime(double G, double G_pp, int workers) {
  if (!(G > 1.0) || !(G_pp > 1.0) || !std::isfinite(G) ||
      !std::isfinite(G_pp)) {
    throw InvalidArgument("optimal_gprime: need G > 1 and G'' > 1");
  }
  const double tau = (G - 1.0) * (G_pp - 1.0);
  if (std::abs(tau - 1.0) <= kUnitTauTol) {
    throw InvalidArgument(
        "optimal_gprime: tau = (G-1)(G''-1) = 1 has no finite optimum");
  }

  double hi = kInitialScanHi;
  std::vector<double> grid;
  std::size_t best = 0;
  for (;;) {
    grid = linspace(1.0, hi, kScanPoints);
    const auto n_e = noise_profile_parallel(G, G_pp, grid, workers);
    best = static_cast<std::size_t>(
        std::min_element(n_e.begin(), n_e.end()) - n_e.begin());
    if (best + 1 < grid.size()) break;
    if (hi * 4.0 > kMaxScanHi) {
      throw SearchError("optimal_gprime: minimum not bracketed in [1, " +
                            std::to_string(hi) + "]",
                        grid[grid.size() - 2], hi);
    }
    hi *= 4.0;
  }

  const double lo = grid[best == 0 ? 0 : best - 1];
  const double up = grid[best + 1];
  auto f = [&](double gp) { return raw_n_e(G, gp, G_pp); };
  const auto [x, fx] = boost::math::tools::brent_find_minima(
      f, lo, up, std::numeric_limits<double>::digits);
  (void)fx;

  const auto inv = classify(eac_channel({G, x, G_pp}));
  return {x, inv.n_e.value_or(0.0)};
}

}  // namespace gcap
