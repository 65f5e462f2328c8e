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

// Werner states rotated by a global two-qubit unitary,
//   rho_wu = U rho_W U^dagger = p |phi><phi| + (1 - p) I/4,  |phi> = U |phi+>,
// whose concurrence and nonlocality follow from those of |phi>.

#ifndef BELLCORR_WERNER_UNITARY_HPP
#define BELLCORR_WERNER_UNITARY_HPP

#include <string>
#include <vector>

#include "bellcorr/linalg.hpp"
#include "bellcorr/states.hpp"

namespace bellcorr {

namespace tol {
inline constexpr double kCaseEntrywise = 1e-12;
inline constexpr double kCasePurity = 1e-10;
inline constexpr double kEigenstructure = 1e-9;
}  // namespace tol

struct WernerUnitaryCase {
  double p;
  Matrix4cd u;
  PureState phi;
  DensityMatrix rho_wu;
};

/// Builds U werner(p) U^dagger and checks it against p|phi><phi| + (1-p) I/4.
WernerUnitaryCase make_case(double p, const Matrix4cd& u);

/// sqrt(max{0, p^2 (1 + N(phi)^2) - 1}) with N(phi) = C(phi) for pure states.
double property1_predicted_n(const WernerUnitaryCase& wc);

/// max{0, p C(phi) - (1 - p)/2}
double property2_predicted_c(const WernerUnitaryCase& wc);

/// Wootters eigenvalues of rho_wu compared with
///   l3 = l4 = (1-p)^2/16,
///   l1 + l2 = p^2 C(phi)^2 + (1+3p)(1-p)/8,
///   l1 * l2 = [(1+3p)(1-p)/16]^2.
struct EigenstructureReport {
  Eigen::Vector4d lambdas = Eigen::Vector4d::Zero();
  double expected_small = 0.0;
  double expected_sum = 0.0;
  double expected_product = 0.0;
  double lambda3_deviation = 0.0;
  double lambda4_deviation = 0.0;
  double sum_deviation = 0.0;
  double product_deviation = 0.0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  double max_deviation() const;
};

EigenstructureReport check_proof_eigenstructure(const WernerUnitaryCase& wc,
                                                double tolerance = tol::kEigenstructure);

/// C_p = sqrt(1 - p^2) - (1 - p)/2: rho_wu violates CHSH iff its concurrence
/// exceeds C_p. Defined for p in (1/sqrt(2), 1]; smaller p never violates.
double violation_threshold_c(double p);

/// N as a function of C along the Werner family,
/// (1/3) sqrt(max{0, 8c + 8c^2 - 7}).
double werner_n_of_c(double c);

/// cos(theta)|00> + sin(theta)|11> with concurrence c = sin(2 theta).
PureState schmidt_state(double c);

/// A unitary U with U|phi+> = target, from Gram-Schmidt completion of both
/// vectors into orthonormal bases.
Matrix4cd unitary_mapping_bell_to(const PureState& target);

}  // namespace bellcorr

#endif  // BELLCORR_WERNER_UNITARY_HPP
