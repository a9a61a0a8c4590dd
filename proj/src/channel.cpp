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

#include "gcap/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "gcap/errors.hpp"

namespace gcap {

namespace {

double cptp_scale(const GaussianChannel1M& ch) {
  return std::max({1.0, ch.N.cwiseAbs().maxCoeff(),
                   std::abs(1.0 - ch.T.determinant())});
}

int numeric_rank(const Eigen::Matrix2d& m) {
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(m);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0) return 0;
  const double cut = kRankTol * sv(0);
  return static_cast<int>((sv.array() > cut).count());
}

void require_gain(double gain, const char* who) {
  if (!(gain > 1.0) || !std::isfinite(gain)) {
    throw InvalidArgument(std::string(who) + ": gain must be > 1, got " +
                          std::to_string(gain));
  }
}

void require_occupation(double n, const char* who) {
  if (!(n >= 0.0) || !std::isfinite(n)) {
    throw InvalidArgument(std::string(who) +
                          ": thermal occupation must be finite and >= 0");
  }
}

GaussianChannel1M isotropic(const Eigen::Matrix2d& t, double noise) {
  GaussianChannel1M ch;
  ch.T = t;
  ch.N = noise * Eigen::Matrix2d::Identity();
  return ch;
}

}  // namespace

double cptp_min_eigenvalue(const GaussianChannel1M& ch) {
  const double k = 1.0 - ch.T.determinant();
  const double n12 = 0.5 * (ch.N(0, 1) + ch.N(1, 0));
  const double half_diff = 0.5 * (ch.N(0, 0) - ch.N(1, 1));
  const double mid = 0.5 * (ch.N(0, 0) + ch.N(1, 1));
  return mid - std::sqrt(half_diff * half_diff + n12 * n12 + k * k);
}

bool is_cptp(const GaussianChannel1M& ch, double tol) {
  if (!ch.T.allFinite() || !ch.N.allFinite() || !ch.d.allFinite()) {
    return false;
  }
  if (std::abs(ch.N(0, 1) - ch.N(1, 0)) > kSymmetryTol * cptp_scale(ch)) {
    return false;
  }
  return cptp_min_eigenvalue(ch) >= -tol * cptp_scale(ch);
}

void validate_cptp(const GaussianChannel1M& ch, double tol) {
  if (!ch.T.allFinite() || !ch.N.allFinite() || !ch.d.allFinite()) {
    throw InvalidArgument("channel has non-finite entries");
  }
  if (std::abs(ch.N(0, 1) - ch.N(1, 0)) > kSymmetryTol * cptp_scale(ch)) {
    throw InvalidArgument("channel noise matrix N is not symmetric");
  }
  const double ev = cptp_min_eigenvalue(ch);
  if (ev < -tol * cptp_scale(ch)) {
    std::ostringstream os;
    os.precision(12);
    os << "channel violates the CPTP condition: N + i(1 - det T) omega has "
          "eigenvalue "
       << ev << " < 0";
    throw NonCptpError(os.str(), ev);
  }
}

std::string_view to_string(ChannelClass c) {
  switch (c) {
    case ChannelClass::loss: return "loss";
    case ChannelClass::amplification: return "amplification";
    case ChannelClass::random_displacement: return "random_displacement";
    case ChannelClass::phase_conjugation: return "phase_conjugation";
    case ChannelClass::identity: return "identity";
    case ChannelClass::degenerate: return "degenerate";
  }
  return "unknown";
}

CovarianceState apply_channel(const GaussianChannel1M& ch,
                              const CovarianceState& state) {
  if (state.n_modes() != 1) {
    throw InvalidArgument("apply_channel: expected a one-mode state, got " +
                          std::to_string(state.n_modes()) + " modes");
  }
  Eigen::Vector2d mean = ch.T * state.mean() + ch.d;
  Eigen::Matrix2d cov = ch.T * state.cov() * ch.T.transpose() + ch.N;
  cov = 0.5 * (cov + cov.transpose()).eval();
  return CovarianceState(mean, cov);
}

ChannelInvariants classify(const GaussianChannel1M& ch, double tol) {
  validate_cptp(ch, tol);

  ChannelInvariants inv;
  inv.tau = ch.T.determinant();
  const int rank_t = numeric_rank(ch.T);
  inv.r = std::min(rank_t, numeric_rank(ch.N));
  inv.sigma2 = std::sqrt(std::max(0.0, ch.N.determinant()));

  const bool unit_tau = std::abs(inv.tau - 1.0) <= kUnitTauTol;
  if (!unit_tau) {
    double n_e = inv.sigma2 / (2.0 * std::abs(1.0 - inv.tau)) - 0.5;
    if (n_e < -tol) {
      throw NonCptpError("classify: environment occupation " +
                             std::to_string(n_e) + " is negative",
                         n_e);
    }
    inv.n_e = std::max(0.0, n_e);
  }

  if (rank_t < 2) {
    inv.class_label = ChannelClass::degenerate;
  } else if (inv.tau < 0.0) {
    inv.class_label = ChannelClass::phase_conjugation;
  } else if (unit_tau) {
    inv.class_label = inv.sigma2 < kNoiselessTol
                          ? ChannelClass::identity
                          : ChannelClass::random_displacement;
  } else if (inv.tau < 1.0) {
    inv.class_label = ChannelClass::loss;
  } else {
    inv.class_label = ChannelClass::amplification;
  }
  return inv;
}

double g_entropy(double n) {
  if (!(n >= 0.0)) {
    throw InvalidArgument("g_entropy: argument must be >= 0, got " +
                          std::to_string(n));
  }
  if (n == 0.0) return 0.0;
  return (n + 1.0) * std::log2(n + 1.0) - n * std::log2(n);
}

double q_lower_bound(const ChannelInvariants& inv) {
  if (!inv.n_e) {
    if (inv.sigma2 < kNoiselessTol) {
      return std::numeric_limits<double>::infinity();
    }
    return std::max(0.0, std::log2(2.0 / (std::exp(1.0) * inv.sigma2)));
  }
  if (inv.tau == 0.0) return 0.0;
  const double ratio = std::abs(inv.tau / (1.0 - inv.tau));
  return std::max(0.0, std::log2(ratio) - g_entropy(*inv.n_e));
}

double q_lower_bound(const GaussianChannel1M& ch, double tol) {
  return q_lower_bound(classify(ch, tol));
}

GaussianChannel1M compose(const GaussianChannel1M& second,
                          const GaussianChannel1M& first) {
  validate_cptp(first);
  validate_cptp(second);
  GaussianChannel1M out;
  out.T = second.T * first.T;
  out.N = second.T * first.N * second.T.transpose() + second.N;
  out.N = 0.5 * (out.N + out.N.transpose()).eval();
  out.d = second.T * first.d + second.d;
  return out;
}

GaussianChannel1M amplification(double gain, double ancilla_thermal_n) {
  require_gain(gain, "amplification");
  require_occupation(ancilla_thermal_n, "amplification");
  return isotropic(std::sqrt(gain) * Eigen::Matrix2d::Identity(),
                   (gain - 1.0) * (2.0 * ancilla_thermal_n + 1.0));
}

GaussianChannel1M phase_conjugation(double gain, double ancilla_thermal_n) {
  require_gain(gain, "phase_conjugation");
  require_occupation(ancilla_thermal_n, "phase_conjugation");
  const double t = std::sqrt(gain - 1.0);
  return isotropic(Eigen::Vector2d(t, -t).asDiagonal().toDenseMatrix(),
                   gain * (2.0 * ancilla_thermal_n + 1.0));
}

GaussianChannel1M loss(double eta, double thermal_n) {
  if (!(eta > 0.0 && eta < 1.0)) {
    throw InvalidArgument("loss: transmissivity must lie in (0, 1), got " +
                          std::to_string(eta));
  }
  require_occupation(thermal_n, "loss");
  return isotropic(std::sqrt(eta) * Eigen::Matrix2d::Identity(),
                   (1.0 - eta) * (2.0 * thermal_n + 1.0));
}

GaussianChannel1M random_displacement(double sigma2) {
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    throw InvalidArgument("random_displacement: variance must be > 0, got " +
                          std::to_string(sigma2));
  }
  return isotropic(Eigen::Matrix2d::Identity(), sigma2);
}

}  // namespace gcap
