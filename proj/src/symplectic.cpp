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

#include "gcap/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <string>

#include "gcap/errors.hpp"

namespace gcap {

namespace {

void check_modes(const std::vector<int>& modes, int n_modes,
                 const char* what) {
  std::set<int> seen;
  for (int m : modes) {
    if (m < 0 || m >= n_modes) {
      throw InvalidArgument(std::string(what) + ": mode index " +
                            std::to_string(m) + " out of range [0, " +
                            std::to_string(n_modes) + ")");
    }
    if (!seen.insert(m).second) {
      throw InvalidArgument(std::string(what) + ": duplicate mode index " +
                            std::to_string(m));
    }
  }
}

void check_square_even(const Eigen::MatrixXd& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    throw InvalidArgument(std::string(what) +
                          ": expected a non-empty 2n x 2n matrix");
  }
}

}  // namespace

Eigen::MatrixXd omega(int n_modes) {
  if (n_modes < 1) {
    throw InvalidArgument("omega: number of modes must be positive");
  }
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    w(2 * k, 2 * k + 1) = 1.0;
    w(2 * k + 1, 2 * k) = -1.0;
  }
  return w;
}

CovarianceState::CovarianceState(Eigen::VectorXd mean, Eigen::MatrixXd cov)
    : mean_(std::move(mean)), cov_(std::move(cov)) {
  check_square_even(cov_, "CovarianceState");
  if (mean_.size() != cov_.rows()) {
    throw InvalidArgument("CovarianceState: mean length " +
                          std::to_string(mean_.size()) +
                          " does not match covariance size " +
                          std::to_string(cov_.rows()));
  }
  const double asym = (cov_ - cov_.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol) {
    throw InvalidArgument("CovarianceState: covariance not symmetric (max "
                          "asymmetry " + std::to_string(asym) + ")");
  }
}

CovarianceState CovarianceState::vacuum(int n_modes) {
  if (n_modes < 1) {
    throw InvalidArgument("vacuum: number of modes must be positive");
  }
  return CovarianceState(Eigen::VectorXd::Zero(2 * n_modes),
                         Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

CovarianceState CovarianceState::thermal(
    const std::vector<double>& occupations) {
  if (occupations.empty()) {
    throw InvalidArgument("thermal: need at least one mode");
  }
  const int n = static_cast<int>(occupations.size());
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    const double occ = occupations[k];
    if (!(occ >= 0.0) || !std::isfinite(occ)) {
      throw InvalidArgument("thermal: occupation must be finite and >= 0");
    }
    cov(2 * k, 2 * k) = cov(2 * k + 1, 2 * k + 1) = 2.0 * occ + 1.0;
  }
  return CovarianceState(Eigen::VectorXd::Zero(2 * n), std::move(cov));
}

bool CovarianceState::is_physical(double tol) const {
  const auto nu = symplectic_eigenvalues(cov_);
  return nu.back() >= 1.0 - tol;
}

SymplecticOp::SymplecticOp(Eigen::MatrixXd matrix)
    : matrix_(std::move(matrix)) {
  check_square_even(matrix_, "SymplecticOp");
  const double res = symplectic_residual(matrix_);
  if (!(res < kSymplecticTol)) {
    throw InvalidArgument("SymplecticOp: matrix is not symplectic (residual " +
                          std::to_string(res) + ")");
  }
}

SymplecticOp SymplecticOp::identity(int n_modes) {
  if (n_modes < 1) {
    throw InvalidArgument("identity: number of modes must be positive");
  }
  return SymplecticOp(Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

double symplectic_residual(const Eigen::MatrixXd& s) {
  check_square_even(s, "symplectic_residual");
  const Eigen::MatrixXd w = omega(static_cast<int>(s.rows() / 2));
  return (s * w * s.transpose() - w).cwiseAbs().maxCoeff();
}

SymplecticOp tms_symplectic(double gain, SqueezeSign sign) {
  if (!(gain >= 1.0) || !std::isfinite(gain)) {
    throw InvalidArgument("tms_symplectic: gain must be >= 1, got " +
                          std::to_string(gain));
  }
  const double c = std::sqrt(gain);
  const double s =
      (sign == SqueezeSign::squeeze ? 1.0 : -1.0) * std::sqrt(gain - 1.0);
  Eigen::Matrix4d m;
  // clang-format off
  m <<  c, 0,  s,  0,
        0, c,  0, -s,
        s, 0,  c,  0,
        0, -s, 0,  c;
  // clang-format on
  return SymplecticOp(m);
}

Eigen::MatrixXd embed(const SymplecticOp& op, const std::vector<int>& modes,
                      int n_modes) {
  if (static_cast<int>(modes.size()) != op.n_modes()) {
    throw InvalidArgument("embed: op acts on " + std::to_string(op.n_modes()) +
                          " modes but " + std::to_string(modes.size()) +
                          " indices were given");
  }
  check_modes(modes, n_modes, "embed");
  Eigen::MatrixXd full = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  const auto& s = op.matrix();
  for (std::size_t i = 0; i < modes.size(); ++i) {
    for (std::size_t j = 0; j < modes.size(); ++j) {
      full.block<2, 2>(2 * modes[i], 2 * modes[j]) =
          s.block<2, 2>(2 * i, 2 * j);
    }
  }
  return full;
}

CovarianceState apply(const CovarianceState& state, const SymplecticOp& op,
                      const std::vector<int>& modes) {
  const Eigen::MatrixXd s = embed(op, modes, state.n_modes());
  Eigen::MatrixXd cov = s * state.cov() * s.transpose();
  // Re-symmetrize; the product drifts by a few ulps.
  cov = 0.5 * (cov + cov.transpose()).eval();
  return CovarianceState(s * state.mean(), std::move(cov));
}

CovarianceState partial_trace(const CovarianceState& state,
                              const std::vector<int>& keep) {
  if (keep.empty()) {
    throw InvalidArgument("partial_trace: keep set is empty");
  }
  check_modes(keep, state.n_modes(), "partial_trace");
  const int k = static_cast<int>(keep.size());
  Eigen::VectorXd mean(2 * k);
  Eigen::MatrixXd cov(2 * k, 2 * k);
  for (int i = 0; i < k; ++i) {
    mean.segment<2>(2 * i) = state.mean().segment<2>(2 * keep[i]);
    for (int j = 0; j < k; ++j) {
      cov.block<2, 2>(2 * i, 2 * j) =
          state.cov().block<2, 2>(2 * keep[i], 2 * keep[j]);
    }
  }
  return CovarianceState(std::move(mean), std::move(cov));
}

std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& cov) {
  check_square_even(cov, "symplectic_eigenvalues");
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) {
    throw InvalidArgument("symplectic_eigenvalues: input is not symmetric");
  }
  const int n = static_cast<int>(cov.rows() / 2);
  const Eigen::MatrixXd w = omega(n);

  std::vector<double> all;
  all.reserve(2 * n);
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() == Eigen::Success) {
    // A = L^t Omega L is similar to Omega V; A^t A = -A^2 has eigenvalues
    // nu_k^2, each twice.
    const Eigen::MatrixXd l = llt.matrixL();
    const Eigen::MatrixXd a = l.transpose() * w * l;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.transpose() * a,
                                                      Eigen::EigenvaluesOnly);
    for (int i = 0; i < 2 * n; ++i) {
      all.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(i))));
    }
  } else {
    // Not positive definite, hence unphysical; the spectrum of Omega V is
    // still +-i nu for the purposes of reporting.
    Eigen::EigenSolver<Eigen::MatrixXd> es(w * cov, false);
    for (int i = 0; i < 2 * n; ++i) {
      all.push_back(std::abs(es.eigenvalues()(i)));
    }
  }
  std::sort(all.begin(), all.end(), std::greater<>());
  std::vector<double> nu;
  nu.reserve(n);
  for (int i = 0; i < n; ++i) nu.push_back(all[2 * i]);
  return nu;
}

}  // namespace gcap
