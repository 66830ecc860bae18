#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "gcsim/access/events.h"
#include "gcsim/frame/frame.h"
#include "gcsim/sim/trace.h"

namespace gcsim::sim {

// Figures over the packets arriving in the measured window
// [warmup, warmup + horizon).
struct MetricsReport {
  std::string strategy;
  int group_size = 0;
  int groups = 0;
  std::uint64_t seed = 0;
  std::int64_t packets = 0;
  std::int64_t delivered_packets = 0;  // reached every member
  double mean_prbs_per_packet = 0;
  double usable_prbs_per_interarrival = 0;
  double capacity_ratio = 0;           // usable / mean, before flooring
  std::int64_t group_capacity = 0;
  double cell_capacity_unique_bps = 0;
  double cell_capacity_aggregate_bps = 0;
  double retx_prb_share = 0;
  double mean_delay = 0;               // subframes, arrival to last member decode inclusive
  double p95_delay = 0;
  double mean_access_delay = 0;        // arrival to first transmission
  double residual_loss = 0;            // undelivered (packet, member) pairs
  std::int64_t initial_allocations = 0;
  std::int64_t retx_allocations = 0;
  std::int64_t ic_plans = 0;           // retransmissions combining two or more TBs
  double ic_mean_m = 0;                // over retransmission allocations
  std::int64_t redundant_avoided = 0;
  std::int64_t infeasible_mcs = 0;     // initial transmissions missing the BLER target
  std::int64_t pmch_idle_prbs = 0;
  std::int64_t feedback_messages = 0;

  bool operator==(const MetricsReport&) const = default;
};

// Pure function of the trace.
MetricsReport compute_report(const RunTrace& trace);

// floor(usable / mean). Throws std::invalid_argument unless mean > 0.
std::int64_t group_capacity(double mean_prbs_per_packet, double usable_prbs_per_interarrival);

// PRBs the channel may use during one inter-arrival period.
double usable_prbs_per_interarrival(const frame::FrameConfig& frame, frame::ChannelKind kind,
                                    int period_subframes);

struct CellCapacity {
  double unique_bps = 0;     // each fully delivered packet once
  double aggregate_bps = 0;  // each member reception
};

// Throws std::invalid_argument unless measured_subframes > 0.
CellCapacity cell_capacity(std::span<const access::PacketDoneEvent> measured, int payload_bytes,
                           std::int64_t measured_subframes);

std::string_view report_header();
std::string report_row(const MetricsReport& r);
std::string report_to_csv(const MetricsReport& r);  // header plus one row
MetricsReport report_from_row(std::string_view row);
MetricsReport report_from_csv(std::string_view csv);

}  // namespace gcsim::sim
