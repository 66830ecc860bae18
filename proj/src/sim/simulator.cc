#include "gcsim/sim/simulator.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gcsim/access/strategies.h"
#include "gcsim/sim/csv.h"

namespace gcsim::sim {

Scenario build_scenario(const SimConfig& cfg) {
  validate(cfg);
  Scenario s;
  s.grid = radio::build_grid(cfg.grid.isd_m, cfg.grid.rings);
  const int per_cell = std::max(1, cfg.groups * cfg.group_size);
  s.drop = radio::drop_ues(s.grid, per_cell, cfg.seed, cfg.radio.shadowing_std_db);

  access::CellEnvironment& env = s.env;
  env.frame = frame_config(cfg, cfg.strategy);
  env.mcs_table = mcs_table(cfg);
  env.bler = radio::BlerCurve(cfg.bler_decade_db);
  env.access = access_config(cfg);

  const std::vector<int> centre = s.drop.ues_in_cell(0);
  for (int g = 0; g < cfg.groups; ++g) {
    access::GroupSession session;
    session.group = g;
    session.group_rnti = access::group_rnti_for(g);
    session.serving_cell = 0;
    session.members.assign(centre.begin() + g * cfg.group_size,
                           centre.begin() + (g + 1) * cfg.group_size);
    env.sessions.push_back(std::move(session));
  }

  const radio::LinkBudget budget = link_budget(cfg);
  std::vector<int> all_cells(s.grid.size());
  std::iota(all_cells.begin(), all_cells.end(), 0);
  const int serving[] = {0};
  for (const auto& session : env.sessions) {
    for (int ue : session.members) {
      if (cfg.radio.frozen_sinr_db) {
        const double db = *cfg.radio.frozen_sinr_db;
        env.unicast_links.emplace(ue, radio::LinkQuality::from_db(db, radio::ReceptionMode::kUnicast));
        env.mbsfn_links.emplace(ue, radio::LinkQuality::from_db(db, radio::ReceptionMode::kMbsfn));
      } else {
        env.unicast_links.emplace(ue, radio::sinr(ue, serving, s.grid, s.drop, budget,
                                                  radio::ReceptionMode::kUnicast));
        env.mbsfn_links.emplace(ue, radio::sinr(ue, all_cells, s.grid, s.drop, budget,
                                                radio::ReceptionMode::kMbsfn));
      }
    }
  }
  return s;
}

RunResult run(const SimConfig& cfg) {
  const Scenario scenario = build_scenario(cfg);
  const access::CellEnvironment& env = scenario.env;
  frame::ResourceLedger ledger(env.frame);
  auto strategy = access::make_strategy(cfg.strategy, env, ledger, cfg.seed);

  const std::int64_t end = cfg.warmup + cfg.horizon;
  const RngFactory rngs(cfg.seed);
  std::vector<access::GroupPacket> arrivals;
  for (const auto& session : env.sessions) {
    auto packets = access::gen_voice_traffic(session, end, env.access.traffic, rngs);
    std::move(packets.begin(), packets.end(), std::back_inserter(arrivals));
  }
  std::stable_sort(arrivals.begin(), arrivals.end(),
                   [](const access::GroupPacket& a, const access::GroupPacket& b) {
                     if (a.arrival != b.arrival) return a.arrival < b.arrival;
                     return a.group < b.group;
                   });

  // Generous bound on the drain phase; only a scheduler bug can hit it.
  const std::int64_t limit = end + 100 * end + 10000;
  std::size_t next = 0;
  std::int64_t t = 0;
  while (t < end || next < arrivals.size() || !strategy->idle()) {
    if (t > limit) throw std::logic_error("run: scheduler did not drain its queues");
    while (next < arrivals.size() && arrivals[next].arrival == t) {
      strategy->on_arrival(arrivals[next]);
      ++next;
    }
    strategy->on_subframe(t);
    ++t;
  }

  RunTrace trace;
  trace.set_meta("strategy", std::string(access::to_string(cfg.strategy)));
  trace.set_meta("group_size", std::to_string(cfg.group_size));
  trace.set_meta("groups", std::to_string(cfg.groups));
  trace.set_meta("seed", std::to_string(cfg.seed));
  trace.set_meta("warmup", std::to_string(cfg.warmup));
  trace.set_meta("horizon", std::to_string(cfg.horizon));
  trace.set_meta("payload_bytes", std::to_string(cfg.traffic.payload_bytes));
  trace.set_meta("period_subframes", std::to_string(cfg.traffic.period_subframes));
  trace.set_meta("total_prb", std::to_string(env.frame.total_prb));
  trace.set_meta("layout", std::string(to_string(cfg.frame.layout)));
  trace.set_meta("eligible_per_frame",
                 std::to_string(env.frame.eligible_per_frame(channel_of(cfg.strategy))));
  trace.set_meta("usable_prbs_per_interarrival",
                 format_double(usable_prbs_per_interarrival(env.frame, channel_of(cfg.strategy),
                                                            cfg.traffic.period_subframes)));
  trace.set_meta("end_subframe", std::to_string(t));
  trace.events = strategy->take_log();

  MetricsReport report = compute_report(trace);
  return RunResult{std::move(report), std::move(trace), std::move(ledger)};
}

}  // namespace gcsim::sim
