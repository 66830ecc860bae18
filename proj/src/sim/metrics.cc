#include "gcsim/sim/metrics.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gcsim/sim/csv.h"

namespace gcsim::sim {

std::int64_t group_capacity(double mean_prbs_per_packet, double usable) {
  if (!(mean_prbs_per_packet > 0) || !std::isfinite(mean_prbs_per_packet)) {
    throw std::invalid_argument("group_capacity: mean PRBs per packet must be > 0");
  }
  return static_cast<std::int64_t>(std::floor(usable / mean_prbs_per_packet));
}

double usable_prbs_per_interarrival(const frame::FrameConfig& frame, frame::ChannelKind kind,
                                    int period_subframes) {
  // Subframes 0..period-1 open to the channel.
  std::int64_t eligible = 0;
  for (int sf = 0; sf < period_subframes; ++sf) {
    const bool mbsfn = frame.is_mbsfn(sf);
    if ((kind == frame::ChannelKind::kPmch) == mbsfn) ++eligible;
  }
  return static_cast<double>(eligible) * frame.total_prb;
}

CellCapacity cell_capacity(std::span<const access::PacketDoneEvent> measured, int payload_bytes,
                           std::int64_t measured_subframes) {
  if (measured_subframes <= 0) {
    throw std::invalid_argument("cell_capacity: measured horizon must be > 0");
  }
  const double seconds = static_cast<double>(measured_subframes) / 1000.0;
  const double bits = payload_bytes * 8.0;
  double unique = 0;
  double aggregate = 0;
  for (const auto& e : measured) {
    if (e.full_delivery >= 0) unique += bits;
    aggregate += bits * e.delivered;
  }
  return {unique / seconds, aggregate / seconds};
}

MetricsReport compute_report(const RunTrace& trace) {
  MetricsReport r;
  r.strategy = trace.meta_value("strategy");
  r.group_size = static_cast<int>(parse_int(trace.meta_value("group_size")));
  r.groups = static_cast<int>(parse_int(trace.meta_value("groups")));
  r.seed = static_cast<std::uint64_t>(parse_int(trace.meta_value("seed")));
  const std::int64_t warmup = parse_int(trace.meta_value("warmup"));
  const std::int64_t horizon = parse_int(trace.meta_value("horizon"));
  const int payload = static_cast<int>(parse_int(trace.meta_value("payload_bytes")));
  r.usable_prbs_per_interarrival = parse_double(trace.meta_value("usable_prbs_per_interarrival"));

  auto in_window = [&](std::int64_t arrival) {
    return arrival >= warmup && arrival < warmup + horizon;
  };
  std::set<std::pair<int, int>> measured;
  for (const auto& a : trace.events.arrivals) {
    if (in_window(a.subframe)) measured.insert({a.group, a.packet});
  }

  std::vector<access::PacketDoneEvent> done;
  std::vector<double> delays;
  double access_sum = 0;
  std::int64_t prbs = 0;
  std::int64_t members = 0;
  std::int64_t delivered = 0;
  for (const auto& d : trace.events.deliveries) {
    if (!measured.count({d.group, d.packet})) continue;
    done.push_back(d);
    prbs += d.prbs;
    members += d.members;
    delivered += d.delivered;
    if (d.first_tx >= 0) access_sum += static_cast<double>(d.first_tx - d.arrival);
    if (d.full_delivery >= 0) {
      ++r.delivered_packets;
      delays.push_back(static_cast<double>(d.full_delivery - d.arrival + 1));
    }
  }
  r.packets = static_cast<std::int64_t>(done.size());
  if (r.packets > 0) {
    r.mean_prbs_per_packet = static_cast<double>(prbs) / static_cast<double>(r.packets);
    r.mean_access_delay = access_sum / static_cast<double>(r.packets);
  }
  if (r.mean_prbs_per_packet > 0) {
    r.capacity_ratio = r.usable_prbs_per_interarrival / r.mean_prbs_per_packet;
    r.group_capacity = group_capacity(r.mean_prbs_per_packet, r.usable_prbs_per_interarrival);
  }
  if (members > 0) {
    r.residual_loss = 1.0 - static_cast<double>(delivered) / static_cast<double>(members);
  }
  if (!delays.empty()) {
    double sum = 0;
    for (double v : delays) sum += v;
    r.mean_delay = sum / static_cast<double>(delays.size());
    std::sort(delays.begin(), delays.end());
    const auto rank = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(delays.size())));
    r.p95_delay = delays[std::max<std::size_t>(rank, 1) - 1];
  }
  const CellCapacity cap = cell_capacity(done, payload, horizon);
  r.cell_capacity_unique_bps = cap.unique_bps;
  r.cell_capacity_aggregate_bps = cap.aggregate_bps;

  std::int64_t retx_prbs = 0;
  std::int64_t tx_prbs = 0;
  std::int64_t m_sum = 0;
  for (const auto& t : trace.events.transmissions) {
    if (!measured.count({t.group, t.packet})) continue;
    tx_prbs += t.prbs;
    r.feedback_messages += t.feedback;
    if (t.retransmission) {
      ++r.retx_allocations;
      retx_prbs += t.prbs;
      m_sum += t.m;
      if (t.m >= 2) ++r.ic_plans;
      r.redundant_avoided += t.redundant_avoided;
    } else {
      ++r.initial_allocations;
      if (!t.mcs_feasible) ++r.infeasible_mcs;
    }
  }
  if (tx_prbs > 0) r.retx_prb_share = static_cast<double>(retx_prbs) / static_cast<double>(tx_prbs);
  if (r.retx_allocations > 0) {
    r.ic_mean_m = static_cast<double>(m_sum) / static_cast<double>(r.retx_allocations);
  }
  for (const auto& p : trace.events.pmch_idle) {
    if (in_window(p.subframe)) r.pmch_idle_prbs += p.prbs;
  }
  return r;
}

std::string_view report_header() {
  return "strategy,group_size,groups,seed,packets,delivered_packets,mean_prbs_per_packet,"
         "usable_prbs_per_interarrival,capacity_ratio,group_capacity,cell_capacity_unique_bps,"
         "cell_capacity_aggregate_bps,retx_prb_share,mean_delay,p95_delay,mean_access_delay,"
         "residual_loss,initial_allocations,retx_allocations,ic_plans,ic_mean_m,"
         "redundant_avoided,infeasible_mcs,pmch_idle_prbs,feedback_messages";
}

std::string report_row(const MetricsReport& r) {
  auto d = [](double v) { return format_double(v); };
  auto n = [](std::int64_t v) { return std::to_string(v); };
  const std::vector<std::string> cols = {
      r.strategy, n(r.group_size), n(r.groups), std::to_string(r.seed), n(r.packets),
      n(r.delivered_packets), d(r.mean_prbs_per_packet), d(r.usable_prbs_per_interarrival),
      d(r.capacity_ratio), n(r.group_capacity), d(r.cell_capacity_unique_bps),
      d(r.cell_capacity_aggregate_bps), d(r.retx_prb_share), d(r.mean_delay), d(r.p95_delay),
      d(r.mean_access_delay), d(r.residual_loss), n(r.initial_allocations),
      n(r.retx_allocations), n(r.ic_plans), d(r.ic_mean_m), n(r.redundant_avoided),
      n(r.infeasible_mcs), n(r.pmch_idle_prbs), n(r.feedback_messages)};
  std::string out;
  for (const auto& c : cols) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out;
}

std::string report_to_csv(const MetricsReport& r) {
  return std::string(report_header()) + "\n" + report_row(r) + "\n";
}

MetricsReport report_from_row(std::string_view row) {
  const auto f = split(trim(row), ',');
  if (f.size() != 25) throw std::invalid_argument("report row: expected 25 fields");
  MetricsReport r;
  std::size_t k = 0;
  auto n = [&] { return parse_int(f[k++]); };
  auto d = [&] { return parse_double(f[k++]); };
  r.strategy = f[k++];
  r.group_size = static_cast<int>(n());
  r.groups = static_cast<int>(n());
  r.seed = static_cast<std::uint64_t>(n());
  r.packets = n();
  r.delivered_packets = n();
  r.mean_prbs_per_packet = d();
  r.usable_prbs_per_interarrival = d();
  r.capacity_ratio = d();
  r.group_capacity = n();
  r.cell_capacity_unique_bps = d();
  r.cell_capacity_aggregate_bps = d();
  r.retx_prb_share = d();
  r.mean_delay = d();
  r.p95_delay = d();
  r.mean_access_delay = d();
  r.residual_loss = d();
  r.initial_allocations = n();
  r.retx_allocations = n();
  r.ic_plans = n();
  r.ic_mean_m = d();
  r.redundant_avoided = n();
  r.infeasible_mcs = n();
  r.pmch_idle_prbs = n();
  r.feedback_messages = n();
  return r;
}

MetricsReport report_from_csv(std::string_view csv) {
  const auto lines = split(csv, '\n');
  if (lines.size() < 2 || trim(lines[0]) != report_header()) {
    throw std::invalid_argument("report: header row does not match the documented schema");
  }
  return report_from_row(lines[1]);
}

}  // namespace gcsim::sim
