// Copyright 2026 The bellcorr Authors
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

// Entanglement (concurrence) and CHSH nonlocality of two-qubit states.

#ifndef BELLCORR_MEASURES_HPP
#define BELLCORR_MEASURES_HPP

#include <array>

#include <Eigen/Dense>

#include "bellcorr/linalg.hpp"
#include "bellcorr/states.hpp"

namespace bellcorr {

namespace tol {
/// Slack allowed when checking sqrt(max{0, 2C^2 - 1}) <= N <= C.
inline constexpr double kInequality = 1e-9;
/// Largest Bell-basis off-diagonal magnitude accepted as Bell-diagonal.
inline constexpr double kBellDiagonal = 1e-8;
inline constexpr double kUnitVector = 1e-12;
/// M - 1 at or below this is rounding noise; sqrt would blow it up to ~1e-8.
inline constexpr double kRootFloor = 1e-14;
}  // namespace tol

/// t(m, n) = Tr(rho sigma_m x sigma_n), rows and columns ordered x, y, z.
using CorrelationMatrix = Eigen::Matrix3d;

/// Measurement directions for the CHSH operator
///   a.sigma x (b + b').sigma + a'.sigma x (b - b').sigma.
struct ChshSetting {
  Eigen::Vector3d a;
  Eigen::Vector3d a_prime;
  Eigen::Vector3d b;
  Eigen::Vector3d b_prime;
};

struct CorrelationReport {
  double concurrence = 0.0;
  double m_value = 0.0;
  double nonlocality = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  bool violates_inequality = false;
};

struct InequalityBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// (sy x sy) rho* (sy x sy)
Matrix4cd spin_flip(const DensityMatrix& rho);

/// Eigenvalues of rho * spin_flip(rho), non-increasing, non-negative.
Eigen::Vector4d wootters_lambdas(const DensityMatrix& rho);

/// |<psi| (sy x sy) |psi*>| = 2 |a0 a3 - a1 a2|.
double concurrence_pure(const PureState& psi);

/// max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)} over the Wootters
/// eigenvalues.
double concurrence(const DensityMatrix& rho);

/// Columns phi+, phi-, psi+, psi- obtained from phi+ by I, Z, X and XZ on
/// qubit A.
Matrix4cd bell_basis();

/// Largest off-diagonal magnitude of rho in the Bell basis.
double bell_basis_off_diagonal(const DensityMatrix& rho);

/// max{0, 2 lambda_max - 1}. Throws InvariantError unless rho is diagonal in
/// the Bell basis within 1e-8.
double concurrence_bell_diagonal(const DensityMatrix& rho);

CorrelationMatrix correlation_matrix(const DensityMatrix& rho);

/// Sum of the two largest eigenvalues of T^T T.
double m_value(const CorrelationMatrix& t);
double m_value(const DensityMatrix& rho);

/// sqrt(max{0, m - 1}).
double nonlocality_from_m(double m);

/// sqrt(max{0, M(rho) - 1}).
double bell_nonlocality(const DensityMatrix& rho);

/// The CHSH operator as a 4x4 matrix. Throws unless all four directions are
/// unit vectors.
Matrix4cd chsh_operator(const ChshSetting& s);

/// Tr(rho B_CHSH) from the explicit operator.
double chsh_value(const DensityMatrix& rho, const ChshSetting& s);

/// a.T(b + b') + a'.T(b - b'), the same quantity from the correlation matrix.
double chsh_value(const CorrelationMatrix& t, const ChshSetting& s);

/// Unit vector with polar angle theta and azimuth phi.
Eigen::Vector3d bloch_direction(double theta, double phi);

struct ChshSearchResult {
  double value = 0.0;
  ChshSetting setting;
};

/// Direct numerical maximization of |Tr(rho B_CHSH)| over all settings,
/// independent of the eigenvalue formula for M. Each direction is a
/// (theta, phi) pair; the coarse phase scans every combination of the
/// coarse_steps x coarse_steps direction grid for all four vectors, then
/// refine_rounds rounds of compass search run around the incumbent with the
/// step halved each round. Deterministic for fixed arguments.
ChshSearchResult chsh_brute_search(const DensityMatrix& rho, int coarse_steps, int refine_rounds);

double chsh_brute_max(const DensityMatrix& rho, int coarse_steps, int refine_rounds);

/// (sqrt(max{0, 2c^2 - 1}), c) for c in [0, 1].
InequalityBounds inequality_bounds(double c);

CorrelationReport analyze(const DensityMatrix& rho);

}  // namespace bellcorr

#endif  // BELLCORR_MEASURES_HPP
