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

#include "bellcorr/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/core.h>

namespace bellcorr {

namespace {

const std::array<Matrix2cd, 3>& pauli_xyz() {
  static const std::array<Matrix2cd, 3> paulis = {pauli(Pauli::X), pauli(Pauli::Y),
                                                  pauli(Pauli::Z)};
  return paulis;
}

Matrix2cd dot_sigma(const Eigen::Vector3d& v) {
  const auto& s = pauli_xyz();
  return v.x() * s[0] + v.y() * s[1] + v.z() * s[2];
}

void require_unit(const Eigen::Vector3d& v, const char* name) {
  if (!(std::abs(v.norm() - 1.0) <= tol::kUnitVector)) {
    throw InvariantError(fmt::format("CHSH setting: direction {} has norm {:.17g}", name, v.norm()));
  }
}

// Angles are (theta, phi) for a, a', b, b' in that order.
using Angles = std::array<double, 8>;

ChshSetting setting_from_angles(const Angles& x) {
  return {bloch_direction(x[0], x[1]), bloch_direction(x[2], x[3]), bloch_direction(x[4], x[5]),
          bloch_direction(x[6], x[7])};
}

double chsh_correlation_form(const CorrelationMatrix& t, const ChshSetting& s) {
  return s.a.dot(t * (s.b + s.b_prime)) + s.a_prime.dot(t * (s.b - s.b_prime));
}

}  // namespace

Matrix4cd spin_flip(const DensityMatrix& rho) {
  return spin_flip_matrix(rho.matrix());
}

Eigen::Vector4d wootters_lambdas(const DensityMatrix& rho) {
  return wootters_lambdas_matrix(rho.matrix());
}

double concurrence_pure(const PureState& psi) {
  return std::min(1.0, 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]));
}

double concurrence(const DensityMatrix& rho) {
  const Eigen::Vector4d roots = wootters_roots_matrix(rho.matrix());
  const double c = roots(0) - roots(1) - roots(2) - roots(3);
  return std::clamp(c, 0.0, 1.0);
}

Matrix4cd bell_basis() {
  const Vector4cd phi = bell_phi_plus().amplitudes();
  const Matrix2cd id = Matrix2cd::Identity();
  const Matrix2cd x = pauli(Pauli::X);
  const Matrix2cd z = pauli(Pauli::Z);
  Matrix4cd basis;
  basis.col(0) = phi;
  basis.col(1) = kron(z, id) * phi;
  basis.col(2) = kron(x, id) * phi;
  basis.col(3) = kron(Matrix2cd(x * z), id) * phi;
  return basis;
}

double bell_basis_off_diagonal(const DensityMatrix& rho) {
  static const Matrix4cd basis = bell_basis();
  return detail::max_off_diagonal(basis.adjoint() * rho.matrix() * basis);
}

double concurrence_bell_diagonal(const DensityMatrix& rho) {
  const double off = bell_basis_off_diagonal(rho);
  if (!(off <= tol::kBellDiagonal)) {
    throw InvariantError(
        fmt::format("concurrence_bell_diagonal: state is not Bell-diagonal (off-diagonal {:.3e})",
                    off));
  }
  const double lambda_max = hermitian_eig(rho.matrix()).values(0);
  return std::clamp(2.0 * lambda_max - 1.0, 0.0, 1.0);
}

CorrelationMatrix correlation_matrix(const DensityMatrix& rho) {
  const auto& s = pauli_xyz();
  CorrelationMatrix t;
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      t(m, n) = (rho.matrix() * kron(s[static_cast<std::size_t>(m)],
                                     s[static_cast<std::size_t>(n)]))
                    .trace()
                    .real();
    }
  }
  return t;
}

double m_value(const CorrelationMatrix& t) {
  const Eigen::Matrix3d u = t.transpose() * t;
  const auto values = hermitian_eig(u).values;
  return values(0) + values(1);
}

double m_value(const DensityMatrix& rho) {
  return m_value(correlation_matrix(rho));
}

double nonlocality_from_m(double m) {
  const double excess = m - 1.0;
  if (!(excess > tol::kRootFloor)) return 0.0;
  return std::min(1.0, std::sqrt(excess));
}

double bell_nonlocality(const DensityMatrix& rho) {
  return nonlocality_from_m(m_value(rho));
}

Eigen::Vector3d bloch_direction(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

Matrix4cd chsh_operator(const ChshSetting& s) {
  require_unit(s.a, "a");
  require_unit(s.a_prime, "a'");
  require_unit(s.b, "b");
  require_unit(s.b_prime, "b'");
  return kron(dot_sigma(s.a), dot_sigma(s.b + s.b_prime)) +
         kron(dot_sigma(s.a_prime), dot_sigma(s.b - s.b_prime));
}

double chsh_value(const DensityMatrix& rho, const ChshSetting& s) {
  return (rho.matrix() * chsh_operator(s)).trace().real();
}

double chsh_value(const CorrelationMatrix& t, const ChshSetting& s) {
  require_unit(s.a, "a");
  require_unit(s.a_prime, "a'");
  require_unit(s.b, "b");
  require_unit(s.b_prime, "b'");
  return chsh_correlation_form(t, s);
}

ChshSearchResult chsh_brute_search(const DensityMatrix& rho, int coarse_steps,
                                   int refine_rounds) {
  if (coarse_steps < 8) throw InvariantError("chsh_brute_max: coarse_steps must be >= 8");
  if (refine_rounds < 2) throw InvariantError("chsh_brute_max: refine_rounds must be >= 2");

  const CorrelationMatrix t = correlation_matrix(rho);
  const double theta_step = std::numbers::pi / (coarse_steps - 1);
  const double phi_step = 2.0 * std::numbers::pi / coarse_steps;

  // Direction grid: theta uniform on [0, pi], phi uniform on [0, 2 pi).
  const int count = coarse_steps * coarse_steps;
  Eigen::Matrix3Xd dirs(3, count);
  std::vector<std::array<double, 2>> dir_angles(static_cast<std::size_t>(count));
  for (int i = 0; i < coarse_steps; ++i) {
    for (int j = 0; j < coarse_steps; ++j) {
      const int k = i * coarse_steps + j;
      dir_angles[static_cast<std::size_t>(k)] = {i * theta_step, j * phi_step};
      dirs.col(k) = bloch_direction(i * theta_step, j * phi_step);
    }
  }

  // The objective is linear in a and in a' separately, so for each (b, b')
  // pair the best grid a and a' are found independently. This is the exact
  // maximum over the full product grid.
  const Eigen::Matrix3Xd t_dirs = t * dirs;
  double best = -1.0;
  Angles incumbent{};
  Eigen::VectorXd along_sum(count);
  Eigen::VectorXd along_diff(count);
  for (int ib = 0; ib < count; ++ib) {
    for (int ibp = 0; ibp < count; ++ibp) {
      const Eigen::Vector3d x = t_dirs.col(ib) + t_dirs.col(ibp);
      const Eigen::Vector3d y = t_dirs.col(ib) - t_dirs.col(ibp);
      along_sum.noalias() = dirs.transpose() * x;
      along_diff.noalias() = dirs.transpose() * y;
      Eigen::Index hi_a = 0, hi_ap = 0, lo_a = 0, lo_ap = 0;
      const double hi = along_sum.maxCoeff(&hi_a) + along_diff.maxCoeff(&hi_ap);
      const double lo = along_sum.minCoeff(&lo_a) + along_diff.minCoeff(&lo_ap);
      const bool use_hi = hi >= -lo;
      const double value = use_hi ? hi : -lo;
      if (value > best) {
        best = value;
        const auto& a = dir_angles[static_cast<std::size_t>(use_hi ? hi_a : lo_a)];
        const auto& ap = dir_angles[static_cast<std::size_t>(use_hi ? hi_ap : lo_ap)];
        const auto& b = dir_angles[static_cast<std::size_t>(ib)];
        const auto& bp = dir_angles[static_cast<std::size_t>(ibp)];
        incumbent = {a[0], a[1], ap[0], ap[1], b[0], b[1], bp[0], bp[1]};
      }
    }
  }

  auto objective = [&](const Angles& x) {
    return std::abs(chsh_correlation_form(t, setting_from_angles(x)));
  };
  best = objective(incumbent);

  std::array<double, 8> step{};
  for (int k = 0; k < 8; ++k) step[static_cast<std::size_t>(k)] = (k % 2 == 0) ? theta_step : phi_step;

  constexpr int kMaxMovesPerRound = 10000;
  for (int round = 0; round < refine_rounds; ++round) {
    for (double& h : step) h *= 0.5;
    bool improved = true;
    for (int moves = 0; improved && moves < kMaxMovesPerRound; ++moves) {
      improved = false;
      for (std::size_t k = 0; k < incumbent.size(); ++k) {
        for (const double sign : {1.0, -1.0}) {
          Angles trial = incumbent;
          trial[k] += sign * step[k];
          const double value = objective(trial);
          if (value > best) {
            best = value;
            incumbent = trial;
            improved = true;
            break;
          }
        }
      }
    }
  }

  ChshSearchResult result;
  result.setting = setting_from_angles(incumbent);
  result.value = std::abs(chsh_value(rho, result.setting));
  return result;
}

double chsh_brute_max(const DensityMatrix& rho, int coarse_steps, int refine_rounds) {
  return chsh_brute_search(rho, coarse_steps, refine_rounds).value;
}

InequalityBounds inequality_bounds(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw InvariantError(fmt::format("inequality_bounds: concurrence {} outside [0, 1]", c));
  }
  return {nonlocality_from_m(2.0 * c * c), c};
}

CorrelationReport analyze(const DensityMatrix& rho) {
  CorrelationReport r;
  r.concurrence = concurrence(rho);
  r.m_value = m_value(rho);
  r.nonlocality = nonlocality_from_m(r.m_value);
  const InequalityBounds bounds = inequality_bounds(r.concurrence);
  r.lower_bound = bounds.lower;
  r.upper_bound = bounds.upper;
  r.violates_inequality = r.nonlocality < r.lower_bound - tol::kInequality ||
                          r.nonlocality > r.upper_bound + tol::kInequality;
  return r;
}

}  // namespace bellcorr
