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

#include "bellcorr/states.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <fmt/core.h>
#include <json.hpp>

namespace bellcorr {

namespace {

using json = nlohmann::json;

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvariantError(fmt::format("{}: parameter {} outside [0, 1]", what, p));
  }
}

}  // namespace

PureState::PureState(const Vector4cd& amplitudes) : amps_(amplitudes) {
  const double norm = amps_.norm();
  if (!(std::abs(norm - 1.0) <= tol::kPureNorm)) {
    throw InvariantError(fmt::format("pure state: norm {:.17g} is not 1", norm));
  }
}

PureState PureState::normalized(const Vector4cd& v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw InvariantError("pure state: cannot normalize a zero or non-finite vector");
  }
  return PureState(v / norm);
}

void validate_density_matrix(const Matrix4cd& m) {
  if (!m.allFinite()) throw InvariantError("density matrix: non-finite entry");
  const double asym = detail::max_asymmetry(m);
  if (!(asym <= tol::kHermitian)) {
    throw InvariantError(
        fmt::format("density matrix: not Hermitian (max asymmetry {:.3e})", asym));
  }
  const Complex<double> trace = m.trace();
  if (!(std::abs(trace - 1.0) <= tol::kTrace)) {
    throw InvariantError(fmt::format("density matrix: trace {:.17g}{:+.3e}i is not 1",
                                     trace.real(), trace.imag()));
  }
  const double lowest = hermitian_eig(m).values.minCoeff();
  if (lowest < -tol::kNegativeClip) {
    throw InvariantError(
        fmt::format("density matrix: not positive semidefinite (min eigenvalue {:.3e})", lowest));
  }
}

DensityMatrix::DensityMatrix(const Matrix4cd& m) {
  validate_density_matrix(m);
  mat_ = (m + m.adjoint()) / 2.0;
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.projector());
}

bool is_unitary(const Eigen::Ref<const Eigen::MatrixXcd>& u, double tolerance) {
  if (u.rows() != u.cols()) return false;
  const Eigen::MatrixXcd gram = u.adjoint() * u;
  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return (gram - identity).cwiseAbs().maxCoeff() <= tolerance;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream & 0xffffffffu),
                    static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double RngStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Complex<double> RngStream::complex_gaussian() {
  const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

PureState bell_phi_plus() {
  Vector4cd v = Vector4cd::Zero();
  v(0) = v(3) = (std::numbers::sqrt2 / 2.0);
  return PureState(v);
}

DensityMatrix maximally_mixed() {
  return DensityMatrix(Matrix4cd::Identity() / 4.0);
}

DensityMatrix werner(double p) {
  require_probability(p, "werner");
  Matrix4cd m = Matrix4cd::Zero();
  m(0, 0) = m(3, 3) = (1.0 + p) / 4.0;
  m(1, 1) = m(2, 2) = (1.0 - p) / 4.0;
  m(0, 3) = m(3, 0) = p / 2.0;
  return DensityMatrix(m);
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.matrix().cwiseAbs2().sum();
}

PureState random_pure(RngStream& rng) {
  for (;;) {
    Vector4cd v;
    for (int i = 0; i < 4; ++i) v(i) = rng.complex_gaussian();
    if (v.norm() >= 1e-12) return PureState::normalized(v);
  }
}

DensityMatrix random_mixed(int rank, RngStream& rng) {
  if (rank < 1 || rank > 4) {
    throw InvariantError(fmt::format("random_mixed: rank {} outside 1..4", rank));
  }
  Eigen::Matrix<Complex<double>, 4, Eigen::Dynamic> g(4, rank);
  for (int j = 0; j < rank; ++j) {
    for (int i = 0; i < 4; ++i) g(i, j) = rng.complex_gaussian();
  }
  const Matrix4cd w = g * g.adjoint();
  return DensityMatrix(w / w.trace().real());
}

Eigen::MatrixXcd random_unitary(int dim, RngStream& rng) {
  if (dim != 2 && dim != 4) {
    throw InvariantError(fmt::format("random_unitary: dimension {} is not 2 or 4", dim));
  }
  Eigen::MatrixXcd z(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) z(i, j) = rng.complex_gaussian();
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const Complex<double> d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

DensityMatrix apply_local_unitary(const DensityMatrix& rho, const Matrix2cd& ua,
                                  const Matrix2cd& ub) {
  if (!is_unitary(ua)) throw InvariantError("apply_local_unitary: factor on qubit A is not unitary");
  if (!is_unitary(ub)) throw InvariantError("apply_local_unitary: factor on qubit B is not unitary");
  const Matrix4cd u = kron(ua, ub);
  return DensityMatrix(u * rho.matrix() * u.adjoint());
}

DensityMatrix state_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvariantError(fmt::format("state file: malformed JSON ({})", e.what()));
  }
  if (!doc.is_object() || !doc.contains("matrix")) {
    throw InvariantError("state file: missing field \"matrix\"");
  }
  const json& rows = doc.at("matrix");
  if (!rows.is_array() || rows.size() != 4) {
    throw InvariantError("state file: \"matrix\" must have 4 rows");
  }
  Matrix4cd m;
  for (int i = 0; i < 4; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != 4) {
      throw InvariantError(fmt::format("state file: row {} must have 4 entries", i));
    }
    for (int j = 0; j < 4; ++j) {
      const json& entry = row[static_cast<std::size_t>(j)];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw InvariantError(
            fmt::format("state file: entry ({}, {}) must be a [re, im] number pair", i, j));
      }
      m(i, j) = {entry[0].get<double>(), entry[1].get<double>()};
    }
  }
  return DensityMatrix(m);
}

std::string state_to_json(const DensityMatrix& rho) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back({rho(i, j).real(), rho(i, j).imag()});
    rows.push_back(row);
  }
  return json{{"matrix", rows}}.dump(2) + "\n";
}

DensityMatrix load_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open state file {}", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return state_from_json(buffer.str());
}

void save_state(const std::filesystem::path& path, const DensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) throw IoError(fmt::format("cannot write state file {}", path.string()));
  out << state_to_json(rho);
  if (!out) throw IoError(fmt::format("failed writing state file {}", path.string()));
}

}  // namespace bellcorr
