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

#ifndef BELLCORR_STATES_HPP
#define BELLCORR_STATES_HPP

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "bellcorr/linalg.hpp"

namespace bellcorr {

namespace tol {
inline constexpr double kTrace = 1e-10;
inline constexpr double kPureNorm = 1e-12;
inline constexpr double kUnitary = 1e-10;
}  // namespace tol

/// Normalized two-qubit state vector.
class PureState {
 public:
  /// Throws InvariantError unless the norm is 1 within 1e-12.
  explicit PureState(const Vector4cd& amplitudes);

  /// Rescales a nonzero vector to unit norm.
  static PureState normalized(const Vector4cd& v);

  const Vector4cd& amplitudes() const { return amps_; }
  Complex<double> operator[](int i) const { return amps_(i); }

  /// |psi><psi|
  Matrix4cd projector() const { return amps_ * amps_.adjoint(); }

 private:
  Vector4cd amps_;
};

/// Two-qubit density matrix: Hermitian, unit trace, positive semidefinite,
/// each within 1e-10. The stored matrix is the Hermitian part of the input.
class DensityMatrix {
 public:
  /// Throws InvariantError naming the first violated invariant.
  explicit DensityMatrix(const Matrix4cd& m);

  static DensityMatrix from_pure(const PureState& psi);

  const Matrix4cd& matrix() const { return mat_; }
  Complex<double> operator()(int i, int j) const { return mat_(i, j); }

 private:
  Matrix4cd mat_;
};

/// Checks the density-matrix invariants without constructing one.
void validate_density_matrix(const Matrix4cd& m);

bool is_unitary(const Eigen::Ref<const Eigen::MatrixXcd>& u, double tolerance = tol::kUnitary);

/// Seeded random source. Identical (seed, stream) pairs reproduce identical
/// sequences on every platform: the engine is std::mt19937_64 seeded through
/// std::seed_seq with the 32-bit halves of seed and stream, uniforms take the
/// top 53 bits of each draw, and normals come from the Box-Muller transform.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  /// Uniform on [0, 1).
  double uniform();

  /// One Box-Muller pair packed as re + i*im; both parts are N(0, 1).
  Complex<double> complex_gaussian();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

/// (|00> + |11>) / sqrt(2)
PureState bell_phi_plus();

/// Identity / 4.
DensityMatrix maximally_mixed();

/// p |phi+><phi+| + (1 - p) I/4 for p in [0, 1].
DensityMatrix werner(double p);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

/// Haar-random pure state from four normalized complex Gaussians.
PureState random_pure(RngStream& rng);

/// G G^dagger / Tr(G G^dagger) with G a 4 x rank complex Ginibre matrix,
/// drawn column by column. rank = 4 gives the Hilbert-Schmidt measure.
DensityMatrix random_mixed(int rank, RngStream& rng);

/// Haar-random unitary of dimension 2 or 4: QR of a Ginibre matrix with the
/// phases of diag(R) moved into Q.
Eigen::MatrixXcd random_unitary(int dim, RngStream& rng);

/// (ua x ub) rho (ua x ub)^dagger. Throws if either factor is not unitary.
DensityMatrix apply_local_unitary(const DensityMatrix& rho, const Matrix2cd& ua,
                                  const Matrix2cd& ub);

// JSON state format: {"matrix": [[[re, im] x 4] x 4]}, row-major, basis
// order |00>, |01>, |10>, |11>.
DensityMatrix state_from_json(const std::string& text);
std::string state_to_json(const DensityMatrix& rho);
DensityMatrix load_state(const std::filesystem::path& path);
void save_state(const std::filesystem::path& path, const DensityMatrix& rho);

}  // namespace bellcorr

#endif  // BELLCORR_STATES_HPP
