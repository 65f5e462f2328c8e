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

#include "bellcorr/werner_unitary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/core.h>

#include "bellcorr/measures.hpp"

namespace bellcorr {

namespace {

// Unitary whose first column is v; the rest comes from Gram-Schmidt on the
// computational basis vectors, skipping any that are nearly dependent.
Matrix4cd complete_basis(const Vector4cd& v) {
  Matrix4cd basis = Matrix4cd::Zero();
  basis.col(0) = v;
  int filled = 1;
  for (int e = 0; e < 4 && filled < 4; ++e) {
    Vector4cd w = Vector4cd::Unit(e);
    // Two passes of classical Gram-Schmidt.
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < filled; ++k) w -= basis.col(k) * basis.col(k).dot(w);
    }
    const double norm = w.norm();
    if (norm > 1e-6) basis.col(filled++) = w / norm;
  }
  return basis;
}

}  // namespace

WernerUnitaryCase make_case(double p, const Matrix4cd& u) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvariantError(fmt::format("make_case: p = {} outside [0, 1]", p));
  }
  if (!is_unitary(u)) throw InvariantError("make_case: U is not unitary");

  const PureState phi = PureState::normalized(u * bell_phi_plus().amplitudes());
  const DensityMatrix rho_wu(u * werner(p).matrix() * u.adjoint());

  const Matrix4cd expected = p * phi.projector() + (1.0 - p) * Matrix4cd::Identity() / 4.0;
  const double entry_dev = (rho_wu.matrix() - expected).cwiseAbs().maxCoeff();
  if (!(entry_dev <= tol::kCaseEntrywise)) {
    throw InvariantError(
        fmt::format("make_case: U rho_W U^dagger differs from p|phi><phi| + (1-p) I/4 by {:.3e}",
                    entry_dev));
  }
  const double purity_dev = std::abs(purity(rho_wu) - (1.0 + 3.0 * p * p) / 4.0);
  if (!(purity_dev <= tol::kCasePurity)) {
    throw InvariantError(fmt::format("make_case: purity off by {:.3e}", purity_dev));
  }
  return {p, u, phi, rho_wu};
}

double property1_predicted_n(const WernerUnitaryCase& wc) {
  const double n_phi = concurrence_pure(wc.phi);
  return nonlocality_from_m(wc.p * wc.p * (1.0 + n_phi * n_phi));
}

double property2_predicted_c(const WernerUnitaryCase& wc) {
  return std::max(0.0, wc.p * concurrence_pure(wc.phi) - (1.0 - wc.p) / 2.0);
}

double EigenstructureReport::max_deviation() const {
  return std::max({lambda3_deviation, lambda4_deviation, sum_deviation, product_deviation});
}

EigenstructureReport check_proof_eigenstructure(const WernerUnitaryCase& wc, double tolerance) {
  const double p = wc.p;
  const double c_phi = concurrence_pure(wc.phi);
  const double cross = (1.0 + 3.0 * p) * (1.0 - p);

  EigenstructureReport r;
  r.lambdas = wootters_lambdas(wc.rho_wu);
  r.expected_small = (1.0 - p) * (1.0 - p) / 16.0;
  r.expected_sum = p * p * c_phi * c_phi + cross / 8.0;
  r.expected_product = (cross / 16.0) * (cross / 16.0);
  r.lambda3_deviation = std::abs(r.lambdas(2) - r.expected_small);
  r.lambda4_deviation = std::abs(r.lambdas(3) - r.expected_small);
  r.sum_deviation = std::abs(r.lambdas(0) + r.lambdas(1) - r.expected_sum);
  r.product_deviation = std::abs(r.lambdas(0) * r.lambdas(1) - r.expected_product);

  auto check = [&](double dev, const char* identity) {
    if (!(dev <= tolerance)) {
      r.failures.push_back(fmt::format("{} (deviation {:.3e})", identity, dev));
    }
  };
  check(r.lambda3_deviation, "lambda3 = (1-p)^2/16");
  check(r.lambda4_deviation, "lambda4 = (1-p)^2/16");
  check(r.sum_deviation, "lambda1 + lambda2 = p^2 C^2 + (1+3p)(1-p)/8");
  check(r.product_deviation, "lambda1 * lambda2 = [(1+3p)(1-p)/16]^2");
  return r;
}

double violation_threshold_c(double p) {
  if (!(p > (std::numbers::sqrt2 / 2.0) && p <= 1.0)) {
    throw InvariantError(fmt::format(
        "violation_threshold_c: p = {} outside (1/sqrt(2), 1]; no CHSH violation is possible", p));
  }
  return std::sqrt(1.0 - p * p) - (1.0 - p) / 2.0;
}

double werner_n_of_c(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw InvariantError(fmt::format("werner_n_of_c: c = {} outside [0, 1]", c));
  }
  return std::sqrt(std::max(0.0, 8.0 * c + 8.0 * c * c - 7.0)) / 3.0;
}

PureState schmidt_state(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw InvariantError(fmt::format("schmidt_state: c = {} outside [0, 1]", c));
  }
  const double theta = 0.5 * std::asin(c);
  Vector4cd v = Vector4cd::Zero();
  v(0) = std::cos(theta);
  v(3) = std::sin(theta);
  return PureState::normalized(v);
}

Matrix4cd unitary_mapping_bell_to(const PureState& target) {
  const Matrix4cd from = complete_basis(bell_phi_plus().amplitudes());
  const Matrix4cd to = complete_basis(target.amplitudes());
  return to * from.adjoint();
}

}  // namespace bellcorr
