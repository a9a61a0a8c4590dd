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

#include <vector>

#include <Eigen/Dense>

namespace gcap {

// Conventions used throughout: quadratures x = a + a^dag, p = i(a^dag - a),
// interleaved as (x1, p1, x2, p2, ...). The vacuum covariance is the identity.

inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kSymplecticTol = 1e-12;
inline constexpr double kPhysicalityTol = 1e-9;

/// Block-diagonal symplectic form, a direct sum of [[0, 1], [-1, 0]].
Eigen::MatrixXd omega(int n_modes);

/// First and second moments of an n-mode Gaussian state.
class CovarianceState {
 public:
  /// Throws InvalidArgument unless mean has length 2n, cov is 2n x 2n and
  /// symmetric to kSymmetryTol.
  CovarianceState(Eigen::VectorXd mean, Eigen::MatrixXd cov);

  static CovarianceState vacuum(int n_modes);
  /// Product of thermal states; occupation 0 is vacuum.
  static CovarianceState thermal(const std::vector<double>& occupations);

  int n_modes() const { return static_cast<int>(mean_.size() / 2); }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& cov() const { return cov_; }

  /// Smallest symplectic eigenvalue is at least 1 - tol.
  bool is_physical(double tol = kPhysicalityTol) const;

 private:
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
};

/// A quadrature-space linear map S with S Omega S^t = Omega.
class SymplecticOp {
 public:
  /// Throws InvalidArgument if the matrix is not square of even size or
  /// violates the symplectic condition beyond kSymplecticTol.
  explicit SymplecticOp(Eigen::MatrixXd matrix);

  static SymplecticOp identity(int n_modes);

  int n_modes() const { return static_cast<int>(matrix_.rows() / 2); }
  const Eigen::MatrixXd& matrix() const { return matrix_; }

 private:
  Eigen::MatrixXd matrix_;
};

/// max |S Omega S^t - Omega| over all entries.
double symplectic_residual(const Eigen::MatrixXd& s);

enum class SqueezeSign { squeeze, anti_squeeze };

/// Two-mode squeezer on (first, second) with gain G >= 1:
///   squeeze:       a -> sqrt(G) a + sqrt(G-1) b^dag
///   anti_squeeze:  a -> sqrt(G) a - sqrt(G-1) b^dag
/// and symmetrically for b. In quadratures the x cross terms carry the sign
/// of the b^dag coefficient and the p cross terms carry its negative.
SymplecticOp tms_symplectic(double gain, SqueezeSign sign);

/// Places `op` on the listed modes of an n-mode system, identity elsewhere.
Eigen::MatrixXd embed(const SymplecticOp& op, const std::vector<int>& modes,
                      int n_modes);

/// mean -> S mean, cov -> S cov S^t with S the embedded op.
CovarianceState apply(const CovarianceState& state, const SymplecticOp& op,
                      const std::vector<int>& modes);

/// Reduced state on `keep`, in the order given.
CovarianceState partial_trace(const CovarianceState& state,
                              const std::vector<int>& keep);

/// The n symplectic eigenvalues of a symmetric 2n x 2n matrix, descending.
std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& cov);

}  // namespace gcap
