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

#include "bellcorr/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include <fmt/core.h>
#include <json.hpp>

#include "bellcorr/werner_unitary.hpp"

namespace bellcorr {

std::string format_real(double x) {
  return fmt::format("{:.17g}", x);
}

std::vector<SampleRecord> sample_scatter(const ScatterOptions& options) {
  if (options.samples_per_rank < 1) throw InvariantError("scatter: samples per rank must be >= 1");
  std::vector<int> ranks = options.ranks;
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());

  std::vector<SampleRecord> records;
  records.reserve(ranks.size() * static_cast<std::size_t>(options.samples_per_rank));
  for (const int rank : ranks) {
    RngStream rng(options.seed, static_cast<std::uint64_t>(rank));
    for (int i = 0; i < options.samples_per_rank; ++i) {
      const DensityMatrix rho = random_mixed(rank, rng);
      SampleRecord rec;
      rec.index = i;
      rec.rank = rank;
      rec.concurrence = concurrence(rho);
      rec.m_value = m_value(rho);
      rec.nonlocality = nonlocality_from_m(rec.m_value);
      rec.purity = purity(rho);
      records.push_back(rec);
    }
  }
  return records;
}

ScatterSummary summarize(const std::vector<SampleRecord>& records) {
  ScatterSummary s;
  s.count = records.size();
  for (const auto& r : records) {
    const InequalityBounds b = inequality_bounds(r.concurrence);
    const double lower_margin = r.nonlocality - b.lower;
    const double upper_margin = b.upper - r.nonlocality;
    s.min_lower_margin = std::min(s.min_lower_margin, lower_margin);
    s.min_upper_margin = std::min(s.min_upper_margin, upper_margin);
    if (lower_margin < -tol::kInequality || upper_margin < -tol::kInequality) ++s.violations;
  }
  return s;
}

void write_scatter_csv(std::ostream& out, const std::vector<SampleRecord>& records) {
  out << "index,rank,concurrence,nonlocality,m_value,purity\n";
  for (const auto& r : records) {
    out << r.index << ',' << r.rank << ',' << format_real(r.concurrence) << ','
        << format_real(r.nonlocality) << ',' << format_real(r.m_value) << ','
        << format_real(r.purity) << '\n';
  }
}

std::vector<int> parse_ranks(const std::string& text) {
  std::vector<int> ranks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int rank = 0;
    try {
      rank = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvariantError(fmt::format("ranks: '{}' is not an integer", item));
    }
    if (used != item.size() || rank < 1 || rank > 4) {
      throw InvariantError(fmt::format("ranks: '{}' is not a rank in 1..4", item));
    }
    ranks.push_back(rank);
  }
  if (ranks.empty()) throw InvariantError("ranks: empty rank list");
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  return ranks;
}

double ChannelRow::disagreement() const {
  return std::max(std::abs(c_closed - c_direct), std::abs(n_closed - n_direct));
}

std::vector<ChannelRow> sweep_channel(ChannelKind kind, int p_steps, int eps_steps) {
  if (p_steps < 2 || eps_steps < 2) throw InvariantError("channel: grid steps must be >= 2");
  std::vector<ChannelRow> rows;
  rows.reserve(static_cast<std::size_t>(p_steps) * static_cast<std::size_t>(eps_steps));
  for (int i = 0; i < p_steps; ++i) {
    const double p = static_cast<double>(i) / (p_steps - 1);
    const DensityMatrix rho_w = werner(p);
    for (int j = 0; j < eps_steps; ++j) {
      const double eps = static_cast<double>(j) / (eps_steps - 1);
      const DensityMatrix evolved = apply_on_a(make_channel(kind, eps), rho_w);
      const ClosedForm cf = closed_form(kind, p, eps);
      rows.push_back({p, eps, cf.concurrence, cf.nonlocality, concurrence(evolved),
                      bell_nonlocality(evolved)});
    }
  }
  return rows;
}

double max_disagreement(const std::vector<ChannelRow>& rows) {
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.disagreement());
  return worst;
}

void write_channel_csv(std::ostream& out, const std::vector<ChannelRow>& rows) {
  out << "p,eps,c_closed,n_closed,c_direct,n_direct\n";
  for (const auto& r : rows) {
    out << format_real(r.p) << ',' << format_real(r.eps) << ',' << format_real(r.c_closed) << ','
        << format_real(r.n_closed) << ',' << format_real(r.c_direct) << ','
        << format_real(r.n_direct) << '\n';
  }
}

bool WernerUnitaryReport::pass(double tolerance) const {
  const double worst =
      std::max({max_dev_nonlocality, max_dev_concurrence, max_dev_lambda34, max_dev_lambda_sum,
                max_dev_lambda_product, max_dev_correlation_scaling});
  return worst <= tolerance && max_excess_concurrence <= tolerance &&
         max_excess_nonlocality <= tolerance && eigenstructure_failures == 0;
}

WernerUnitaryReport run_werner_unitary(int trials, std::uint64_t seed, UnitarySource source) {
  if (trials < 1) throw InvariantError("werner-unitary: trials must be >= 1");
  WernerUnitaryReport rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.source = source;
  RngStream rng(seed, 0);
  for (int t = 0; t < trials; ++t) {
    const Matrix4cd u =
        source == UnitarySource::Haar ? Matrix4cd(random_unitary(4, rng)) : Matrix4cd::Identity();
    const double p = rng.uniform();
    const WernerUnitaryCase wc = make_case(p, u);

    const double c = concurrence(wc.rho_wu);
    const double n = bell_nonlocality(wc.rho_wu);
    rep.max_dev_nonlocality =
        std::max(rep.max_dev_nonlocality, std::abs(property1_predicted_n(wc) - n));
    rep.max_dev_concurrence =
        std::max(rep.max_dev_concurrence, std::abs(property2_predicted_c(wc) - c));

    const EigenstructureReport eig = check_proof_eigenstructure(wc, tol::kWernerUnitary);
    rep.max_dev_lambda34 =
        std::max({rep.max_dev_lambda34, eig.lambda3_deviation, eig.lambda4_deviation});
    rep.max_dev_lambda_sum = std::max(rep.max_dev_lambda_sum, eig.sum_deviation);
    rep.max_dev_lambda_product = std::max(rep.max_dev_lambda_product, eig.product_deviation);
    if (!eig.ok()) ++rep.eigenstructure_failures;

    const CorrelationMatrix scaled = p * correlation_matrix(DensityMatrix::from_pure(wc.phi));
    rep.max_dev_correlation_scaling =
        std::max(rep.max_dev_correlation_scaling,
                 (correlation_matrix(wc.rho_wu) - scaled).cwiseAbs().maxCoeff());

    const DensityMatrix rho_w = werner(p);
    rep.max_excess_concurrence = std::max(rep.max_excess_concurrence, c - concurrence(rho_w));
    rep.max_excess_nonlocality =
        std::max(rep.max_excess_nonlocality, n - bell_nonlocality(rho_w));
  }
  return rep;
}

std::string to_json(const WernerUnitaryReport& report) {
  nlohmann::ordered_json doc;
  doc["trials"] = report.trials;
  doc["seed"] = report.seed;
  doc["unitary"] = report.source == UnitarySource::Haar ? "haar" : "identity";
  doc["tolerance"] = tol::kWernerUnitary;
  doc["max_dev_nonlocality"] = report.max_dev_nonlocality;
  doc["max_dev_concurrence"] = report.max_dev_concurrence;
  doc["max_dev_lambda34"] = report.max_dev_lambda34;
  doc["max_dev_lambda_sum"] = report.max_dev_lambda_sum;
  doc["max_dev_lambda_product"] = report.max_dev_lambda_product;
  doc["max_dev_correlation_scaling"] = report.max_dev_correlation_scaling;
  doc["max_excess_concurrence"] = report.max_excess_concurrence;
  doc["max_excess_nonlocality"] = report.max_excess_nonlocality;
  doc["eigenstructure_failures"] = report.eigenstructure_failures;
  doc["pass"] = report.pass();
  return doc.dump(2) + "\n";
}

std::string format_report(const CorrelationReport& r) {
  return fmt::format(
      "concurrence  {}\n"
      "m_value      {}\n"
      "nonlocality  {}\n"
      "chsh_max     {}\n"
      "lower_bound  {}\n"
      "upper_bound  {}\n"
      "inequality   {}\n",
      format_real(r.concurrence), format_real(r.m_value), format_real(r.nonlocality),
      format_real(2.0 * std::sqrt(r.m_value)), format_real(r.lower_bound),
      format_real(r.upper_bound), r.violates_inequality ? "VIOLATED" : "satisfied");
}

}  // namespace bellcorr
