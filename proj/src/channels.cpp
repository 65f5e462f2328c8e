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

#include "bellcorr/channels.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "bellcorr/measures.hpp"

namespace bellcorr {

namespace {

void require_unit_interval(double x, const char* what, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InvariantError(fmt::format("{}: {} = {} outside [0, 1]", what, name, x));
  }
}

Matrix2cd damping_k0(double eps) {
  Matrix2cd k = Matrix2cd::Zero();
  k(0, 0) = 1.0;
  k(1, 1) = eps;
  return k;
}

}  // namespace

ChannelKind parse_channel_kind(std::string_view name) {
  if (name == "pd") return ChannelKind::PhaseDamping;
  if (name == "ad") return ChannelKind::AmplitudeDamping;
  throw InvariantError(fmt::format("unknown channel kind '{}' (expected pd or ad)", name));
}

std::string_view channel_name(ChannelKind kind) {
  return kind == ChannelKind::PhaseDamping ? "pd" : "ad";
}

double completeness_defect(const KrausChannel& ch) {
  Matrix2cd sum = Matrix2cd::Zero();
  for (const auto& k : ch.kraus) sum += k.adjoint() * k;
  return (sum - Matrix2cd::Identity()).cwiseAbs().maxCoeff();
}

KrausChannel pd_channel(double eps) {
  require_unit_interval(eps, "pd_channel", "eps");
  Matrix2cd k1 = Matrix2cd::Zero();
  k1(1, 1) = std::sqrt(1.0 - eps * eps);
  return {"pd", eps, {damping_k0(eps), k1}};
}

KrausChannel ad_channel(double eps) {
  require_unit_interval(eps, "ad_channel", "eps");
  Matrix2cd k1 = Matrix2cd::Zero();
  k1(0, 1) = std::sqrt(1.0 - eps * eps);
  return {"ad", eps, {damping_k0(eps), k1}};
}

KrausChannel make_channel(ChannelKind kind, double eps) {
  return kind == ChannelKind::PhaseDamping ? pd_channel(eps) : ad_channel(eps);
}

DensityMatrix apply_on_a(const KrausChannel& ch, const DensityMatrix& rho) {
  const double defect = completeness_defect(ch);
  if (!(defect <= tol::kKrausCompleteness)) {
    throw InvariantError(
        fmt::format("channel {}: Kraus operators not complete (defect {:.3e})", ch.label, defect));
  }
  const Matrix2cd id = Matrix2cd::Identity();
  Matrix4cd out = Matrix4cd::Zero();
  for (const auto& k : ch.kraus) {
    const Matrix4cd lifted = kron(k, id);
    out += lifted * rho.matrix() * lifted.adjoint();
  }
  return DensityMatrix(out);
}

ClosedForm pd_closed_form(double p, double eps) {
  require_unit_interval(p, "pd_closed_form", "p");
  require_unit_interval(eps, "pd_closed_form", "eps");
  return {std::max(0.0, p * eps - (1.0 - p) / 2.0),
          nonlocality_from_m(p * p * (1.0 + eps * eps))};
}

ClosedForm ad_closed_form(double p, double eps) {
  require_unit_interval(p, "ad_closed_form", "p");
  require_unit_interval(eps, "ad_closed_form", "eps");
  const double e2 = eps * eps;
  const double c = p * eps - 0.5 * eps * std::sqrt((1.0 - p) * (2.0 - e2 - p * e2));
  return {std::max(0.0, c), nonlocality_from_m(2.0 * p * p * e2)};
}

ClosedForm closed_form(ChannelKind kind, double p, double eps) {
  return kind == ChannelKind::PhaseDamping ? pd_closed_form(p, eps) : ad_closed_form(p, eps);
}

DensityMatrix mnms(double eps) {
  return apply_on_a(pd_channel(eps), DensityMatrix::from_pure(bell_phi_plus()));
}

DensityMatrix mnes(double eps) {
  return apply_on_a(ad_channel(eps), DensityMatrix::from_pure(bell_phi_plus()));
}

DensityMatrix ncms(double eps) {
  return apply_on_a(ad_channel(eps), maximally_mixed());
}

}  // namespace bellcorr
