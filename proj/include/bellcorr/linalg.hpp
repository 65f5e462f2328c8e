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

// Small dense linear algebra for one- and two-qubit operators.
//
// Everything here is templated on the Eigen scalar so the same code serves
// complex 4x4 density matrices and the real 3x3 correlation products.
// Basis order is |00>, |01>, |10>, |11> with qubit A the left Kronecker
// factor.

#ifndef BELLCORR_LINALG_HPP
#define BELLCORR_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bellcorr/errors.hpp"

namespace bellcorr {

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using Matrix2c = Eigen::Matrix<Complex<Real>, 2, 2>;
template <typename Real>
using Matrix4c = Eigen::Matrix<Complex<Real>, 4, 4>;
template <typename Real>
using Vector4c = Eigen::Matrix<Complex<Real>, 4, 1>;

using Matrix2cd = Matrix2c<double>;
using Matrix4cd = Matrix4c<double>;
using Vector4cd = Vector4c<double>;

/// Uniform tolerance policy shared by every module.
namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kNegativeClip = 1e-10;
inline constexpr double kJacobiOffDiagonal = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;
}  // namespace tol

enum class Pauli { X, Y, Z };

template <typename Real = double>
Matrix2c<Real> pauli(Pauli axis) {
  using C = Complex<Real>;
  Matrix2c<Real> m;
  switch (axis) {
    case Pauli::X:
      m << C(0), C(1), C(1), C(0);
      break;
    case Pauli::Y:
      m << C(0), C(0, -1), C(0, 1), C(0);
      break;
    case Pauli::Z:
      m << C(1), C(0), C(0), C(-1);
      break;
  }
  return m;
}

namespace detail {

inline std::string format_real(double value) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << value;
  return os.str();
}

template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real max_asymmetry(
    const Eigen::MatrixBase<Derived>& h) {
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real max_off_diagonal(
    const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  Real off = 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) off = std::max(off, static_cast<Real>(std::abs(a(i, j))));
    }
  }
  return off;
}

}  // namespace detail

/// Kronecker product of two single-qubit operators. Block (i, j) of the
/// result is a(i, j) * b.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, 4, 4> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
    throw InvariantError("kron: both factors must be 2x2, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " and " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  Eigen::Matrix<typename DerivedA::Scalar, 4, 4> out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.template block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

/// Eigenvalues (non-increasing) and optionally orthonormal eigenvectors, one
/// per column, of a Hermitian matrix.
template <typename Scalar, int Size>
struct EigenResult {
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  Eigen::Matrix<Real, Size, 1> values;
  std::optional<Eigen::Matrix<Scalar, Size, Size>> vectors;
};

/// Cyclic Jacobi eigensolver for real symmetric or complex Hermitian input.
///
/// Each rotation first removes the phase of the pivot a(p, q) with a diagonal
/// unitary, then applies the classical real Jacobi rotation. Sweeps continue
/// until the largest off-diagonal magnitude drops below 1e-13 (scaled by the
/// matrix magnitude when that exceeds one).
template <typename Derived>
EigenResult<typename Derived::Scalar, Derived::RowsAtCompileTime> hermitian_eig(
    const Eigen::MatrixBase<Derived>& h, bool want_vectors = false) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  using Matrix = Eigen::Matrix<Scalar, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime>;
  using Eigen::numext::conj;

  if (h.rows() != h.cols()) throw InvariantError("hermitian_eig: matrix must be square");
  const Real asym = detail::max_asymmetry(h);
  if (!(asym <= tol::kHermitian)) {
    throw InvariantError("hermitian_eig: matrix is not Hermitian (max asymmetry " +
                         detail::format_real(static_cast<double>(asym)) + ")");
  }

  const Eigen::Index n = h.rows();
  Matrix a = (h + h.adjoint()) / Real(2);
  Matrix v = Matrix::Identity(n, n);
  const Real scale = std::max<Real>(Real(1), a.cwiseAbs().maxCoeff());
  const Real threshold = Real(tol::kJacobiOffDiagonal) * scale;

  bool converged = false;
  for (int sweep = 0; sweep <= tol::kJacobiMaxSweeps; ++sweep) {
    if (detail::max_off_diagonal(a) < threshold) {
      converged = true;
      break;
    }
    if (sweep == tol::kJacobiMaxSweeps) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        const Real g = std::abs(apq);
        if (g == Real(0)) continue;
        const Scalar phase_conj = conj(apq) / g;
        const Real app = Eigen::numext::real(a(p, p));
        const Real aqq = Eigen::numext::real(a(q, q));
        const Real tau = (aqq - app) / (Real(2) * g);
        const Real t = (tau >= Real(0) ? Real(1) : Real(-1)) /
                       (std::abs(tau) + std::sqrt(Real(1) + tau * tau));
        const Real c = Real(1) / std::sqrt(Real(1) + t * t);
        const Real s = t * c;
        // Rotation J restricted to rows/cols (p, q):
        //   [ c              s           ]
        //   [ -s*conj(ph)    c*conj(ph)  ]
        const Scalar jpp = Scalar(c);
        const Scalar jpq = Scalar(s);
        const Scalar jqp = Scalar(-s) * phase_conj;
        const Scalar jqq = Scalar(c) * phase_conj;
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar apk = a(p, k);
          const Scalar aqk = a(q, k);
          a(p, k) = conj(jpp) * apk + conj(jqp) * aqk;
          a(q, k) = conj(jpq) * apk + conj(jqq) * aqk;
        }
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
        a(p, p) = Scalar(Eigen::numext::real(a(p, p)));
        a(q, q) = Scalar(Eigen::numext::real(a(q, q)));
        if (want_vectors) {
          for (Eigen::Index k = 0; k < n; ++k) {
            const Scalar vkp = v(k, p);
            const Scalar vkq = v(k, q);
            v(k, p) = vkp * jpp + vkq * jqp;
            v(k, q) = vkp * jpq + vkq * jqq;
          }
        }
      }
    }
  }
  if (!converged) {
    throw ConvergenceError("hermitian_eig: Jacobi sweeps did not converge within " +
                           std::to_string(tol::kJacobiMaxSweeps) + " sweeps");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return Eigen::numext::real(a(i, i)) > Eigen::numext::real(a(j, j));
  });

  EigenResult<Scalar, Derived::RowsAtCompileTime> result;
  result.values.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    result.values(i) = Eigen::numext::real(a(order[static_cast<std::size_t>(i)],
                                             order[static_cast<std::size_t>(i)]));
  }
  if (want_vectors) {
    Matrix sorted(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      sorted.col(i) = v.col(order[static_cast<std::size_t>(i)]);
    }
    result.vectors = std::move(sorted);
  }
  return result;
}

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-1e-10, 0) are clipped to zero; anything lower is an error.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime>
psd_sqrt(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  auto eig = hermitian_eig(m, true);
  const Real lowest = eig.values.minCoeff();
  if (lowest < -Real(tol::kNegativeClip)) {
    throw InvariantError("psd_sqrt: matrix is not positive semidefinite (min eigenvalue " +
                         detail::format_real(static_cast<double>(lowest)) + ")");
  }
  const auto roots = eig.values.cwiseMax(Real(0)).cwiseSqrt().eval();
  const auto& vecs = *eig.vectors;
  auto s = (vecs * roots.template cast<typename Derived::Scalar>().asDiagonal() * vecs.adjoint())
               .eval();
  return ((s + s.adjoint()) / Real(2)).eval();
}

/// Spin-flip conjugation (sy x sy) m* (sy x sy) of a two-qubit operator.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 4, 4> spin_flip_matrix(
    const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const Matrix4c<Real> yy = kron(pauli<Real>(Pauli::Y), pauli<Real>(Pauli::Y));
  return yy * m.conjugate() * yy;
}

/// Square roots of the Wootters eigenvalues, non-increasing.
///
/// The spectrum of rho * spin_flip(rho) equals that of the Hermitian matrix
/// R = S * spin_flip(rho) * S with S = sqrt(rho). Writing
/// B = S^T (sy x sy) S gives R = B^dagger B, so the square roots of the
/// eigenvalues are the singular values of B. Taking singular values directly
/// keeps near-zero roots accurate to machine precision instead of to the
/// square root of it.
template <typename Derived>
Eigen::Matrix<typename Eigen::NumTraits<typename Derived::Scalar>::Real, 4, 1>
wootters_roots_matrix(const Eigen::MatrixBase<Derived>& rho) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const Matrix4c<Real> yy = kron(pauli<Real>(Pauli::Y), pauli<Real>(Pauli::Y));
  const Matrix4c<Real> s = psd_sqrt(rho);
  const Matrix4c<Real> b = s.transpose() * yy * s;
  Eigen::JacobiSVD<Matrix4c<Real>> svd(b);
  // JacobiSVD returns singular values sorted in decreasing order.
  return svd.singularValues();
}

/// Eigenvalues of rho * spin_flip(rho), non-increasing and non-negative.
template <typename Derived>
Eigen::Matrix<typename Eigen::NumTraits<typename Derived::Scalar>::Real, 4, 1>
wootters_lambdas_matrix(const Eigen::MatrixBase<Derived>& rho) {
  return wootters_roots_matrix(rho).cwiseAbs2();
}

}  // namespace bellcorr

#endif  // BELLCORR_LINALG_HPP
