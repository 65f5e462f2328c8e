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

// bellcorr: concurrence vs. CHSH nonlocality experiments for two qubits.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 usage or I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "bellcorr/experiments.hpp"

namespace {

using namespace bellcorr;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path));
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.close();
  if (!out) throw IoError(fmt::format("failed writing '{}'", path));
}

int run_scatter(int samples, const std::string& ranks, std::uint64_t seed, const std::string& path) {
  ScatterOptions options;
  options.samples_per_rank = samples;
  options.ranks = parse_ranks(ranks);
  options.seed = seed;

  std::ofstream out = open_output(path);
  const auto records = sample_scatter(options);
  write_scatter_csv(out, records);
  finish_output(out, path);

  const ScatterSummary s = summarize(records);
  fmt::print("samples           {}\n", s.count);
  fmt::print("violations        {}\n", s.violations);
  fmt::print("min lower margin  {}\n", format_real(s.min_lower_margin));
  fmt::print("min upper margin  {}\n", format_real(s.min_upper_margin));
  return s.violations == 0 ? exit_code::kOk : exit_code::kCheckFailed;
}

int run_channel(const std::string& kind_name, int p_steps, int eps_steps, const std::string& path) {
  const ChannelKind kind = parse_channel_kind(kind_name);
  std::ofstream out = open_output(path);
  const auto rows = sweep_channel(kind, p_steps, eps_steps);
  write_channel_csv(out, rows);
  finish_output(out, path);

  const double worst = max_disagreement(rows);
  fmt::print("rows                  {}\n", rows.size());
  fmt::print("max |closed - direct| {}\n", format_real(worst));
  if (!(worst <= tol::kClosedForm)) {
    fmt::print(stderr, "closed form and direct evolution disagree beyond {}\n", tol::kClosedForm);
    return exit_code::kCheckFailed;
  }
  return exit_code::kOk;
}

int run_werner_unitary_cmd(int trials, std::uint64_t seed, bool identity, const std::string& path) {
  std::ofstream out = open_output(path);
  const WernerUnitaryReport report =
      run_werner_unitary(trials, seed, identity ? UnitarySource::Identity : UnitarySource::Haar);
  out << to_json(report);
  finish_output(out, path);
  fmt::print("{}", to_json(report));
  return report.pass() ? exit_code::kOk : exit_code::kCheckFailed;
}

int run_state(const std::string& path) {
  const CorrelationReport report = analyze(load_state(path));
  fmt::print("{}", format_report(report));
  return report.violates_inequality ? exit_code::kCheckFailed : exit_code::kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concurrence and CHSH nonlocality of two-qubit states"};
  app.require_subcommand(1);

  int samples = 10000;
  std::string ranks = "2,3,4";
  std::uint64_t seed = 42;
  std::string out_path;
  auto* scatter = app.add_subcommand("scatter", "Random mixed states: C, N, M and purity per sample");
  scatter->add_option("--samples", samples, "Samples per rank")->check(CLI::PositiveNumber);
  scatter->add_option("--ranks", ranks, "Comma-separated ranks from 1..4");
  scatter->add_option("--seed", seed, "RNG seed");
  scatter->add_option("--out", out_path, "Output CSV")->required();

  std::string kind;
  int p_steps = 21;
  int eps_steps = 21;
  auto* channel = app.add_subcommand("channel", "Damped Werner states: closed forms vs direct evolution");
  channel->add_option("--kind", kind, "pd or ad")->required();
  channel->add_option("--p-steps", p_steps, "Grid points in p")->check(CLI::Range(2, 1000000));
  channel->add_option("--eps-steps", eps_steps, "Grid points in eps")->check(CLI::Range(2, 1000000));
  channel->add_option("--out", out_path, "Output CSV")->required();

  int trials = 200;
  std::uint64_t wu_seed = 7;
  bool identity = false;
  auto* wu = app.add_subcommand("werner-unitary", "Rotated Werner states: predictions vs direct values");
  wu->add_option("--trials", trials, "Number of (U, p) cases")->check(CLI::PositiveNumber);
  wu->add_option("--seed", wu_seed, "RNG seed");
  wu->add_flag("--identity", identity, "Use U = I instead of Haar-random unitaries");
  wu->add_option("--out", out_path, "Output JSON report")->required();

  std::string in_path;
  auto* state = app.add_subcommand("state", "Report C, M, N and the inequality status of one state");
  state->add_option("--in", in_path, "State JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code::kUsage;
  }

  try {
    if (*scatter) return run_scatter(samples, ranks, seed, out_path);
    if (*channel) return run_channel(kind, p_steps, eps_steps, out_path);
    if (*wu) return run_werner_unitary_cmd(trials, wu_seed, identity, out_path);
    if (*state) return run_state(in_path);
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return exit_code::kUsage;
  }
  return exit_code::kUsage;
}
