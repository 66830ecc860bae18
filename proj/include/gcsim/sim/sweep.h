#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcsim/access/traffic.h"
#include "gcsim/sim/config.h"
#include "gcsim/sim/metrics.h"

namespace gcsim::sim {

struct SweepSpec {
  SimConfig base;
  std::vector<int> group_sizes;
  std::vector<access::StrategyKind> strategies;
  std::vector<std::uint64_t> seeds;
  int threads = 1;  // 0: hardware concurrency
};

struct Estimate {
  double mean = 0;
  double half_width = 0;  // 95% Student-t, 0 for a single seed
};

// Mean and 95% confidence half-width of the sample.
Estimate estimate(const std::vector<double>& values);

struct SummaryRow {
  std::string strategy;
  int group_size = 0;
  int seeds = 0;
  Estimate group_capacity;
  Estimate capacity_ratio;
  Estimate mean_prbs_per_packet;
  Estimate retx_prb_share;
  Estimate residual_loss;
  Estimate mean_delay;
  Estimate cell_capacity_unique_bps;
  // Mean group capacity of sc-ptm-ic over sc-ptm at this size, when both ran.
  std::optional<double> ic_capacity_ratio;
};

struct SweepResult {
  std::vector<MetricsReport> runs;  // strategy-major, then size, then seed
  std::vector<SummaryRow> summary;  // strategy-major, then size
};

// Runs the cross product. A failing run aborts the sweep with a
// std::runtime_error naming its (strategy, group size, seed).
SweepResult sweep(const SweepSpec& spec);

SweepResult summarize(std::vector<MetricsReport> runs);

std::string_view sweep_header();
std::string sweep_to_csv(const SweepResult& result);

}  // namespace gcsim::sim
