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

// Single-qubit damping channels acting on qubit A, and closed forms for the
// concurrence and nonlocality of channel-evolved Werner states.

#ifndef BELLCORR_CHANNELS_HPP
#define BELLCORR_CHANNELS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "bellcorr/linalg.hpp"
#include "bellcorr/states.hpp"

namespace bellcorr {

namespace tol {
inline constexpr double kKrausCompleteness = 1e-12;
}

enum class ChannelKind { PhaseDamping, AmplitudeDamping };

/// "pd" or "ad"; throws InvariantError otherwise.
ChannelKind parse_channel_kind(std::string_view name);
std::string_view channel_name(ChannelKind kind);

struct KrausChannel {
  std::string label;
  double epsilon = 1.0;
  std::vector<Matrix2cd> kraus;
};

/// max |sum_i K_i^dagger K_i - I|
double completeness_defect(const KrausChannel& ch);

/// K0 = |0><0| + eps |1><1|, K1 = sqrt(1 - eps^2) |1><1|.
KrausChannel pd_channel(double eps);

/// K0 = |0><0| + eps |1><1|, K1 = sqrt(1 - eps^2) |0><1|.
KrausChannel ad_channel(double eps);

KrausChannel make_channel(ChannelKind kind, double eps);

/// sum_i (K_i x I) rho (K_i x I)^dagger
DensityMatrix apply_on_a(const KrausChannel& ch, const DensityMatrix& rho);

struct ClosedForm {
  double concurrence = 0.0;
  double nonlocality = 0.0;
};

/// Werner state with qubit A sent through the phase-damping channel:
/// C = max{0, p eps - (1 - p)/2}, N = sqrt(max{0, p^2 (1 + eps^2) - 1}).
ClosedForm pd_closed_form(double p, double eps);

/// Werner state with qubit A sent through the amplitude-damping channel:
/// C = max{0, p eps - (eps/2) sqrt((1 - p)(2 - eps^2 - p eps^2))},
/// N = sqrt(max{0, 2 p^2 eps^2 - 1}).
ClosedForm ad_closed_form(double p, double eps);

ClosedForm closed_form(ChannelKind kind, double p, double eps);

/// Phase-damped Bell state; C = N = eps.
DensityMatrix mnms(double eps);

/// Amplitude-damped Bell state; C = eps, N = sqrt(max{0, 2 eps^2 - 1}).
DensityMatrix mnes(double eps);

/// Amplitude-damped maximally mixed state; its correlation matrix vanishes.
DensityMatrix ncms(double eps);

}  // namespace bellcorr

#endif  // BELLCORR_CHANNELS_HPP
