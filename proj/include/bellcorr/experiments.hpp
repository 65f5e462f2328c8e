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

// Deterministic sweeps behind the bellcorr command-line tool. Each sweep
// returns plain records; the writers turn them into CSV or JSON text.

#ifndef BELLCORR_EXPERIMENTS_HPP
#define BELLCORR_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "bellcorr/channels.hpp"
#include "bellcorr/measures.hpp"

namespace bellcorr {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
}  // namespace exit_code

namespace tol {
inline constexpr double kClosedForm = 1e-10;
inline constexpr double kWernerUnitary = 1e-9;
}  // namespace tol

/// Formats a double with 17 significant digits (lossless round trip).
std::string format_real(double x);

// ---------------------------------------------------------------------------
// Random-state scatter

struct SampleRecord {
  int index = 0;
  int rank = 0;
  double concurrence = 0.0;
  double nonlocality = 0.0;
  double m_value = 0.0;
  double purity = 0.0;
};

struct ScatterOptions {
  int samples_per_rank = 10000;
  std::vector<int> ranks{2, 3, 4};
  std::uint64_t seed = 42;
};

struct ScatterSummary {
  std::size_t count = 0;
  std::size_t violations = 0;
  /// min over samples of N - sqrt(max{0, 2C^2 - 1})
  double min_lower_margin = std::numeric_limits<double>::infinity();
  /// min over samples of C - N
  double min_upper_margin = std::numeric_limits<double>::infinity();
};

/// Samples random_mixed(rank) for each requested rank; rank r draws from
/// RngStream(seed, r). Rows are ordered by (rank, index).
std::vector<SampleRecord> sample_scatter(const ScatterOptions& options);

ScatterSummary summarize(const std::vector<SampleRecord>& records);

/// Header "index,rank,concurrence,nonlocality,m_value,purity".
void write_scatter_csv(std::ostream& out, const std::vector<SampleRecord>& records);

/// Parses "2,3,4" into sorted, de-duplicated ranks in 1..4.
std::vector<int> parse_ranks(const std::string& text);

// ---------------------------------------------------------------------------
// Channel sweep

struct ChannelRow {
  double p = 0.0;
  double eps = 0.0;
  double c_closed = 0.0;
  double n_closed = 0.0;
  double c_direct = 0.0;
  double n_direct = 0.0;

  double disagreement() const;
};

/// Werner states on a uniform p_steps x eps_steps grid over [0, 1]^2 with
/// qubit A sent through the channel; closed forms next to the direct route.
std::vector<ChannelRow> sweep_channel(ChannelKind kind, int p_steps, int eps_steps);

double max_disagreement(const std::vector<ChannelRow>& rows);

/// Header "p,eps,c_closed,n_closed,c_direct,n_direct".
void write_channel_csv(std::ostream& out, const std::vector<ChannelRow>& rows);

// ---------------------------------------------------------------------------
// Rotated Werner verification

enum class UnitarySource { Haar, Identity };

struct WernerUnitaryReport {
  int trials = 0;
  std::uint64_t seed = 0;
  UnitarySource source = UnitarySource::Haar;
  double max_dev_nonlocality = 0.0;
  double max_dev_concurrence = 0.0;
  double max_dev_lambda34 = 0.0;
  double max_dev_lambda_sum = 0.0;
  double max_dev_lambda_product = 0.0;
  double max_dev_correlation_scaling = 0.0;
  /// max of C(rho_wu) - C(werner(p)); <= 0 up to rounding.
  double max_excess_concurrence = -std::numeric_limits<double>::infinity();
  /// max of N(rho_wu) - N(werner(p)).
  double max_excess_nonlocality = -std::numeric_limits<double>::infinity();
  std::size_t eigenstructure_failures = 0;

  bool pass(double tolerance = tol::kWernerUnitary) const;
};

/// Each trial draws U (Haar on RngStream(seed, 0), or the identity) and then
/// p uniform on [0, 1] from the same stream.
WernerUnitaryReport run_werner_unitary(int trials, std::uint64_t seed,
                                       UnitarySource source = UnitarySource::Haar);

std::string to_json(const WernerUnitaryReport& report);

// ---------------------------------------------------------------------------
// Single state

std::string format_report(const CorrelationReport& report);

}  // namespace bellcorr

#endif  // BELLCORR_EXPERIMENTS_HPP
