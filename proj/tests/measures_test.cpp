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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "bellcorr/channels.hpp"
#include "test_support.hpp"

using namespace bellcorr;
using bellcorr::oracle::max_abs;

namespace {

const double kSqrt2 = std::numbers::sqrt2;

DensityMatrix product_00() {
  Matrix4cd m = Matrix4cd::Zero();
  m(0, 0) = 1.0;
  return DensityMatrix(m);
}

DensityMatrix bell_state() {
  return DensityMatrix::from_pure(bell_phi_plus());
}

ChshSetting random_setting(RngStream& rng) {
  auto dir = [&] {
    Eigen::Vector3d v(rng.complex_gaussian().real(), rng.complex_gaussian().real(),
                      rng.complex_gaussian().real());
    return Eigen::Vector3d(v.normalized());
  };
  return {dir(), dir(), dir(), dir()};
}

}  // namespace

TEST(measures, concurrence_pure_examples) {
  EXPECT_NEAR(concurrence_pure(bell_phi_plus()), 1.0, 1e-15);
  EXPECT_EQ(concurrence_pure(PureState(Vector4cd(1, 0, 0, 0))), 0.0);
  // cos(pi/6)|00> + sin(pi/6)|11>: |sin(pi/3)|.
  const double theta = std::numbers::pi / 6;
  const PureState psi(Vector4cd(std::cos(theta), 0, 0, std::sin(theta)));
  EXPECT_NEAR(concurrence_pure(psi), 0.8660254037844386, 1e-15);
}

TEST(measures, concurrence_pure_matches_spin_flip_overlap) {
  const Matrix4cd yy = kron(pauli(Pauli::Y), pauli(Pauli::Y));
  RngStream rng(30, 0);
  for (int i = 0; i < 200; ++i) {
    const PureState psi = random_pure(rng);
    const Vector4cd tilde = yy * psi.amplitudes().conjugate();
    EXPECT_NEAR(concurrence_pure(psi), std::abs(psi.amplitudes().dot(tilde)), 1e-14);
  }
}

TEST(measures, concurrence_examples) {
  EXPECT_NEAR(concurrence(werner(0.8)), 0.7, 1e-14);
  EXPECT_EQ(concurrence(maximally_mixed()), 0.0);
  EXPECT_EQ(concurrence(werner(1.0 / 3.0)), 0.0);
  EXPECT_NEAR(concurrence(bell_state()), 1.0, 1e-14);
}

TEST(measures, concurrence_matches_product_eigenvalue_oracle) {
  RngStream rng(31, 0);
  for (int i = 0; i < 300; ++i) {
    const DensityMatrix rho = random_mixed(2 + i % 3, rng);
    const Eigen::Vector4d l = oracle::oracle_wootters_lambdas(rho.matrix()).cwiseMax(0.0);
    const double expected = std::max(
        0.0, std::sqrt(l(0)) - std::sqrt(l(1)) - std::sqrt(l(2)) - std::sqrt(l(3)));
    // The oracle loses accuracy on square roots of tiny eigenvalues.
    EXPECT_NEAR(concurrence(rho), expected, 1e-7);
  }
}

TEST(measures, concurrence_bell_diagonal_examples) {
  EXPECT_NEAR(concurrence_bell_diagonal(werner(0.8)), 0.7, 1e-14);
  EXPECT_NEAR(concurrence_bell_diagonal(werner(0.8)), concurrence(werner(0.8)), 1e-14);
  EXPECT_EQ(concurrence_bell_diagonal(maximally_mixed()), 0.0);
  const DensityMatrix pd = apply_on_a(pd_channel(0.5), werner(0.9));
  EXPECT_NEAR(concurrence_bell_diagonal(pd), concurrence(pd), 1e-12);
}

TEST(measures, concurrence_bell_diagonal_rejects_other_states) {
  EXPECT_THROW(concurrence_bell_diagonal(product_00()), InvariantError);
  const DensityMatrix ad = apply_on_a(ad_channel(0.5), werner(0.9));
  EXPECT_THROW(concurrence_bell_diagonal(ad), InvariantError);
}

TEST(measures, bell_basis_is_orthonormal_and_contains_phi_plus) {
  const Matrix4cd b = bell_basis();
  EXPECT_LE(max_abs(b.adjoint() * b - Matrix4cd::Identity()), 1e-15);
  EXPECT_LE((b.col(0) - bell_phi_plus().amplitudes()).norm(), 1e-15);
}

TEST(measures, correlation_matrix_bell_state) {
  // <XX> = 1, <YY> = -1, <ZZ> = 1 for (|00> + |11>)/sqrt(2); off-diagonals vanish.
  Eigen::Matrix3d expected = Eigen::Vector3d(1, -1, 1).asDiagonal();
  EXPECT_LE((correlation_matrix(bell_state()) - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(measures, correlation_matrix_matches_entrywise_expansion) {
  RngStream rng(32, 0);
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = random_mixed(1 + i % 4, rng);
    const Eigen::Matrix3d t = correlation_matrix(rho);
    EXPECT_LE((t - oracle::oracle_correlation(rho.matrix())).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LE(t.cwiseAbs().maxCoeff(), 1.0 + 1e-10);
    EXPECT_GE(oracle::oracle_spectrum(Eigen::Matrix3d(t.transpose() * t)).minCoeff(), -1e-10);
  }
}

TEST(measures, correlation_matrix_channel_forms) {
  const double p = 0.7, eps = 0.4;
  const Eigen::Matrix3d pd = correlation_matrix(apply_on_a(pd_channel(eps), werner(p)));
  const Eigen::Matrix3d ad = correlation_matrix(apply_on_a(ad_channel(eps), werner(p)));
  const Eigen::Matrix3d pd_expected = Eigen::Vector3d(p * eps, -p * eps, p).asDiagonal();
  const Eigen::Matrix3d ad_expected = Eigen::Vector3d(p * eps, -p * eps, p * eps * eps).asDiagonal();
  EXPECT_LE((pd - pd_expected).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LE((ad - ad_expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(measures, m_value_examples) {
  EXPECT_NEAR(m_value(werner(0.9)), 2 * 0.81, 1e-14);
  EXPECT_EQ(m_value(maximally_mixed()), 0.0);
  EXPECT_NEAR(m_value(bell_state()), 2.0, 1e-14);
  EXPECT_NEAR(m_value(product_00()), 1.0, 1e-15);
}

TEST(measures, m_value_matches_eigen_oracle) {
  RngStream rng(33, 0);
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = random_mixed(1 + i % 4, rng);
    const Eigen::Matrix3d t = oracle::oracle_correlation(rho.matrix());
    const Eigen::VectorXd u = oracle::oracle_spectrum(Eigen::Matrix3d(t.transpose() * t));
    EXPECT_NEAR(m_value(rho), u(0) + u(1), 1e-13);
  }
}

TEST(measures, bell_nonlocality_examples) {
  EXPECT_NEAR(bell_nonlocality(bell_state()), 1.0, 1e-12);
  EXPECT_EQ(bell_nonlocality(werner(1.0 / kSqrt2)), 0.0);
  EXPECT_EQ(bell_nonlocality(product_00()), 0.0);
}

TEST(measures, pure_state_identities) {
  RngStream rng(34, 0);
  for (int i = 0; i < 1000; ++i) {
    const PureState psi = random_pure(rng);
    const DensityMatrix rho = DensityMatrix::from_pure(psi);
    const double c = concurrence_pure(psi);
    EXPECT_NEAR(bell_nonlocality(rho), c, 1e-9);
    EXPECT_NEAR(m_value(rho), 1.0 + c * c, 1e-9);
    EXPECT_NEAR(concurrence(rho), c, 1e-10);
  }
}

TEST(measures, chsh_tsirelson_setting) {
  const Eigen::Vector3d x = Eigen::Vector3d::UnitX();
  const Eigen::Vector3d z = Eigen::Vector3d::UnitZ();
  const ChshSetting s{z, x, (z + x) / kSqrt2, (z - x) / kSqrt2};
  EXPECT_NEAR(chsh_value(bell_state(), s), 2 * kSqrt2, 1e-10);
  EXPECT_NEAR(chsh_value(correlation_matrix(bell_state()), s), 2 * kSqrt2, 1e-10);
}

TEST(measures, chsh_collapsed_setting_is_twice_tzz) {
  const Eigen::Vector3d z = Eigen::Vector3d::UnitZ();
  const ChshSetting s{z, z, z, z};
  RngStream rng(35, 0);
  for (int i = 0; i < 20; ++i) {
    const DensityMatrix rho = random_mixed(3, rng);
    EXPECT_NEAR(chsh_value(rho, s), 2 * correlation_matrix(rho)(2, 2), 1e-14);
  }
}

TEST(measures, chsh_vanishes_on_maximally_mixed) {
  RngStream rng(36, 0);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(chsh_value(maximally_mixed(), random_setting(rng)), 0.0);
}

TEST(measures, chsh_forms_agree_and_respect_horodecki_bound) {
  RngStream rng(37, 0);
  for (int i = 0; i < 500; ++i) {
    const DensityMatrix rho = random_mixed(1 + i % 4, rng);
    const ChshSetting s = random_setting(rng);
    const double direct = chsh_value(rho, s);
    EXPECT_NEAR(direct, chsh_value(correlation_matrix(rho), s), 1e-10);
    EXPECT_LE(std::abs(direct), 2 * std::sqrt(m_value(rho)) + 1e-9);
  }
}

TEST(measures, chsh_rejects_non_unit_directions) {
  const Eigen::Vector3d z = Eigen::Vector3d::UnitZ();
  const ChshSetting bad{z, z, 2 * z, z};
  EXPECT_THROW(chsh_value(bell_state(), bad), InvariantError);
  EXPECT_THROW(chsh_operator(bad), InvariantError);
}

TEST(measures, chsh_brute_max_examples) {
  EXPECT_NEAR(chsh_brute_max(bell_state(), 12, 6), 2 * kSqrt2, 1e-3);
  EXPECT_NEAR(chsh_brute_max(werner(0.5), 12, 6), 2 * std::sqrt(2 * 0.25), 1e-3);
  EXPECT_NEAR(chsh_brute_max(product_00(), 12, 6), 2.0, 1e-3);
}

TEST(measures, chsh_brute_max_tracks_horodecki_formula) {
  RngStream rng(38, 0);
  for (int i = 0; i < 10; ++i) {
    const DensityMatrix rho = random_mixed(2 + i % 3, rng);
    const double bound = 2 * std::sqrt(m_value(rho));
    const ChshSearchResult r = chsh_brute_search(rho, 12, 6);
    EXPECT_LE(r.value, bound + 1e-9);
    EXPECT_GE(r.value, bound - 1e-3);
    EXPECT_NEAR(std::abs(chsh_value(rho, r.setting)), r.value, 1e-15);
  }
}

TEST(measures, chsh_brute_max_is_deterministic_and_validates_arguments) {
  const DensityMatrix rho = werner(0.8);
  EXPECT_EQ(chsh_brute_max(rho, 8, 2), chsh_brute_max(rho, 8, 2));
  EXPECT_LE(chsh_brute_max(rho, 8, 2), 2 * std::sqrt(m_value(rho)) + 1e-9);
  EXPECT_THROW(chsh_brute_max(rho, 7, 6), InvariantError);
  EXPECT_THROW(chsh_brute_max(rho, 12, 1), InvariantError);
}

TEST(measures, inequality_bounds_examples) {
  const auto at_one = inequality_bounds(1.0);
  EXPECT_DOUBLE_EQ(at_one.lower, 1.0);
  EXPECT_DOUBLE_EQ(at_one.upper, 1.0);
  const auto onset = inequality_bounds(1.0 / kSqrt2);
  EXPECT_NEAR(onset.lower, 0.0, 1e-8);
  EXPECT_NEAR(onset.upper, 0.70710678, 1e-8);
  const auto high = inequality_bounds(0.9);
  EXPECT_NEAR(high.lower, 0.7874007874011811, 1e-15);
  EXPECT_DOUBLE_EQ(high.upper, 0.9);
  EXPECT_THROW(inequality_bounds(-0.1), InvariantError);
  EXPECT_THROW(inequality_bounds(1.1), InvariantError);
}

TEST(measures, analyze_examples) {
  const CorrelationReport w = analyze(werner(0.95));
  EXPECT_NEAR(w.concurrence, 0.925, 1e-12);
  EXPECT_NEAR(w.nonlocality, std::sqrt(2 * 0.9025 - 1), 1e-12);
  EXPECT_NEAR(w.nonlocality, 0.8972179222463180, 1e-12);
  EXPECT_FALSE(w.violates_inequality);

  const CorrelationReport b = analyze(bell_state());
  EXPECT_NEAR(b.concurrence, 1.0, 1e-12);
  EXPECT_NEAR(b.nonlocality, 1.0, 1e-12);
  EXPECT_NEAR(b.lower_bound, 1.0, 1e-12);
  EXPECT_NEAR(b.upper_bound, 1.0, 1e-12);
  EXPECT_FALSE(b.violates_inequality);

  const CorrelationReport m = analyze(maximally_mixed());
  EXPECT_EQ(m.concurrence, 0.0);
  EXPECT_EQ(m.m_value, 0.0);
  EXPECT_EQ(m.nonlocality, 0.0);
  EXPECT_EQ(m.lower_bound, 0.0);
  EXPECT_EQ(m.upper_bound, 0.0);
  EXPECT_FALSE(m.violates_inequality);
}

TEST(measures, report_invariants_and_inequality_over_random_states) {
  for (int rank = 1; rank <= 4; ++rank) {
    RngStream rng(39, static_cast<std::uint64_t>(rank));
    for (int i = 0; i < 500; ++i) {
      const CorrelationReport r = analyze(random_mixed(rank, rng));
      EXPECT_NEAR(r.nonlocality, std::sqrt(std::max(0.0, r.m_value - 1)), 1e-12);
      EXPECT_NEAR(r.lower_bound, std::sqrt(std::max(0.0, 2 * r.concurrence * r.concurrence - 1)),
                  1e-15);
      EXPECT_EQ(r.upper_bound, r.concurrence);
      EXPECT_FALSE(r.violates_inequality) << "rank " << rank << " sample " << i;
      EXPECT_GE(r.m_value, 0.0);
      EXPECT_LE(r.m_value, 2.0 + 1e-12);
    }
  }
}

TEST(measures, local_unitary_invariance) {
  RngStream rng(40, 0);
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = random_mixed(1 + i % 4, rng);
    const DensityMatrix moved =
        apply_local_unitary(rho, oracle::random_unitary2(rng), oracle::random_unitary2(rng));
    EXPECT_NEAR(concurrence(moved), concurrence(rho), 1e-9);
    EXPECT_NEAR(m_value(moved), m_value(rho), 1e-9);
    EXPECT_NEAR(bell_nonlocality(moved), bell_nonlocality(rho), 1e-9);
  }
}

TEST(measures, werner_measures_are_monotone_in_p) {
  double last_c = -1.0, last_n = -1.0;
  for (int k = 0; k <= 100; ++k) {
    const DensityMatrix rho = werner(k / 100.0);
    const double c = concurrence(rho);
    const double n = bell_nonlocality(rho);
    EXPECT_GE(c, last_c);
    EXPECT_GE(n, last_n);
    last_c = c;
    last_n = n;
  }
}

TEST(measures, bell_diagonal_cross_path_agreement) {
  // Random Bell-diagonal states: random weights on the Bell projectors.
  const Matrix4cd basis = bell_basis();
  RngStream rng(41, 0);
  for (int i = 0; i < 200; ++i) {
    Eigen::Vector4d w;
    for (int k = 0; k < 4; ++k) w(k) = -std::log(1.0 - rng.uniform());
    w /= w.sum();
    const DensityMatrix rho(basis * w.cast<Complex<double>>().asDiagonal() * basis.adjoint());
    EXPECT_NEAR(concurrence_bell_diagonal(rho), concurrence(rho), 1e-9);
    EXPECT_NEAR(concurrence_bell_diagonal(rho), std::max(0.0, 2 * w.maxCoeff() - 1), 1e-12);
  }
}
