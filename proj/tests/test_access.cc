#include <doctest.h>

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "gcsim/access/delivery.h"
#include "gcsim/access/retransmission.h"
#include "gcsim/access/strategies.h"
#include "gcsim/access/traffic.h"
#include "gcsim/coding/index_coder.h"
#include "gcsim/frame/frame.h"
#include "gcsim/rng.h"

using namespace gcsim;
using namespace gcsim::access;
using frame::ChannelKind;

namespace {

std::vector<int> members_of(int n, int first = 0) {
  std::vector<int> v;
  for (int k = 0; k < n; ++k) v.push_back(first + k);
  return v;
}

// One group with identical frozen links in both reception modes.
CellEnvironment frozen_env(int members, double sinr_db, frame::FrameConfig frame = {}) {
  CellEnvironment env;
  env.frame = std::move(frame);
  GroupSession s;
  s.group = 0;
  s.group_rnti = group_rnti_for(0);
  s.members = members_of(members);
  env.sessions.push_back(s);
  for (int ue : s.members) {
    env.unicast_links.emplace(ue, radio::LinkQuality::from_db(sinr_db, radio::ReceptionMode::kUnicast));
    env.mbsfn_links.emplace(ue, radio::LinkQuality::from_db(sinr_db, radio::ReceptionMode::kMbsfn));
  }
  return env;
}

GroupPacket packet(int group, int seq, std::int64_t arrival, int bytes = 40) {
  return GroupPacket{group, seq, arrival, std::vector<std::uint8_t>(static_cast<std::size_t>(bytes), 0x3C)};
}

// Feeds the packets and steps until the strategy is idle.
EventLog drive(StrategyKind kind, const CellEnvironment& env, frame::ResourceLedger& ledger,
               std::vector<GroupPacket> packets, std::uint64_t seed = 1) {
  auto strat = make_strategy(kind, env, ledger, seed);
  std::sort(packets.begin(), packets.end(),
            [](const auto& a, const auto& b) { return a.arrival < b.arrival; });
  std::size_t next = 0;
  for (std::int64_t t = 0; t < 100000; ++t) {
    while (next < packets.size() && packets[next].arrival == t) strat->on_arrival(packets[next++]);
    strat->on_subframe(t);
    if (next == packets.size() && strat->idle()) break;
  }
  REQUIRE(strat->idle());
  return strat->take_log();
}

std::int64_t initial_prbs(const EventLog& log) {
  std::int64_t sum = 0;
  for (const auto& e : log.transmissions) {
    if (!e.retransmission) sum += e.prbs;
  }
  return sum;
}

harq::DrawSource draws_from(std::map<int, double> by_ue) {
  return [by_ue](int ue) { return by_ue.at(ue); };
}

ChannelKind channel_for(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kUnicastPdsch: return ChannelKind::kPdschUnicast;
    case StrategyKind::kPmch: return ChannelKind::kPmch;
    default: return ChannelKind::kScPtm;
  }
}

}  // namespace

TEST_CASE("voice traffic") {
  GroupSession s{0, group_rnti_for(0), {0, 1}, 0};
  const TrafficConfig cfg;
  RngFactory rngs(5);
  const auto a = gen_voice_traffic(s, 200, cfg, rngs);
  CHECK(a.size() == 10);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].payload.size() == 40);
    CHECK(a[k].arrival == static_cast<std::int64_t>(k) * 20);
    CHECK(a[k].seq == static_cast<int>(k));
  }
  GroupSession s3{3, group_rnti_for(3), {0}, 0};
  const auto b = gen_voice_traffic(s3, 200, cfg, rngs);
  CHECK(b.size() == a.size());
  CHECK(b[0].arrival == 3);
  CHECK(gen_voice_traffic(s, 200, cfg, rngs)[4].payload == a[4].payload);
  CHECK(group_rnti_for(0) != group_rnti_for(1));
  CHECK_THROWS_AS(gen_voice_traffic(s, 0, cfg, rngs), std::invalid_argument);
}

TEST_CASE("strategy names") {
  for (auto k : kAllStrategies) CHECK(parse_strategy(to_string(k)) == k);
  CHECK_THROWS_AS(parse_strategy("broadcast"), std::invalid_argument);
}

TEST_CASE("segmentation") {
  frame::FrameConfig cfg;
  const auto table = radio::McsTable::default_table();
  std::vector<std::uint8_t> voice(40, 1);
  CHECK(segment_payload(voice, 0, ChannelKind::kScPtm, cfg, table).size() == 1);
  // Max TB at MCS 0 over 50 PRBs: 50*144*0.25 = 1800 bits = 225 bytes.
  std::vector<std::uint8_t> big(500);
  for (std::size_t i = 0; i < big.size(); ++i) big[i] = static_cast<std::uint8_t>(i);
  const auto pieces = segment_payload(big, 0, ChannelKind::kScPtm, cfg, table);
  CHECK(pieces.size() == 3);
  std::vector<std::uint8_t> joined;
  for (const auto& p : pieces) {
    CHECK(p.size() * 8 <= 1800);
    joined.insert(joined.end(), p.begin(), p.end());
  }
  CHECK(joined == big);
}

TEST_CASE("unicast initial PRBs are linear in group size") {
  const auto table = radio::McsTable::default_table();
  const frame::FrameConfig cfg;
  std::int64_t single = 0;
  for (int n : {1, 2, 4, 8, 16}) {
    const auto env = frozen_env(n, 6.0);
    frame::ResourceLedger ledger(env.frame);
    const auto log = drive(StrategyKind::kUnicastPdsch, env, ledger, {packet(0, 0, 0)});
    const std::int64_t prbs = initial_prbs(log);
    if (n == 1) single = prbs;
    CHECK(prbs == n * single);
    int initial = 0;
    for (const auto& e : log.transmissions) {
      if (!e.retransmission) {
        ++initial;
        CHECK(e.rnti_kind == frame::RntiKind::kCRnti);
        CHECK(e.channel == ChannelKind::kPdschUnicast);
      }
    }
    CHECK(initial == n);
  }
  const radio::LinkQuality l[] = {radio::LinkQuality::from_db(6.0, radio::ReceptionMode::kUnicast)};
  const int mcs = radio::select_mcs(l, table, 0.01).mcs;
  CHECK(single == frame::prbs_needed(320, mcs, ChannelKind::kPdschUnicast, cfg, table));
}

TEST_CASE("a one-member group costs the same by unicast and SC-PTM") {
  const auto env = frozen_env(1, 3.0);
  frame::ResourceLedger a(env.frame), b(env.frame);
  const auto u = drive(StrategyKind::kUnicastPdsch, env, a, {packet(0, 0, 0)});
  const auto s = drive(StrategyKind::kScPtm, env, b, {packet(0, 0, 0)});
  CHECK(initial_prbs(u) == initial_prbs(s));
  CHECK(u.transmissions.front().mcs == s.transmissions.front().mcs);
}

TEST_CASE("PMCH PRBs do not depend on the member count") {
  std::int64_t reference = -1;
  for (int n : {1, 2, 16, 500}) {
    const auto env = frozen_env(n, 0.0);
    frame::ResourceLedger ledger(env.frame);
    const auto log = drive(StrategyKind::kPmch, env, ledger, {packet(0, 0, 0), packet(0, 1, 20)});
    const std::int64_t prbs = initial_prbs(log);
    if (reference < 0) reference = prbs;
    CHECK(prbs == reference);
    for (const auto& e : log.transmissions) {
      CHECK_FALSE(e.retransmission);
      CHECK(e.channel == ChannelKind::kPmch);
      CHECK(e.feedback == 0);
      CHECK(env.frame.is_mbsfn(e.subframe));
    }
    CHECK(ledger.dci_count() == 0);
  }
  CHECK(reference == 2 * 8);
}

TEST_CASE("PMCH requires MBSFN subframes") {
  frame::FrameConfig none;
  none.mbsfn_subframes = {};
  const auto env = frozen_env(2, 0.0, none);
  frame::ResourceLedger ledger(env.frame);
  CHECK_THROWS_AS(make_strategy(StrategyKind::kPmch, env, ledger, 1), frame::ChannelConfigError);
}

TEST_CASE("PMCH scheduling wait stays within the MCCH period") {
  auto env = frozen_env(4, 5.0);
  env.access.mcch_period = 128;
  frame::ResourceLedger ledger(env.frame);
  std::vector<GroupPacket> packets;
  for (int k = 0; k < 50; ++k) packets.push_back(packet(0, k, 7 + 20 * k));
  const auto log = drive(StrategyKind::kPmch, env, ledger, packets);
  REQUIRE(log.deliveries.size() == 50);
  for (const auto& d : log.deliveries) {
    CHECK(d.first_tx >= d.schedulable);
    CHECK(d.schedulable >= d.arrival);
    CHECK(d.first_tx - d.arrival <= env.access.mcch_period);
  }
  // The session starts at the first period boundary.
  CHECK(log.deliveries.front().schedulable == 128);
}

TEST_CASE("PMCH decode is at least as likely as unicast at the same MCS") {
  // Cell-edge UE: MBSFN reception turns interferers into signal.
  auto env = frozen_env(1, -6.0);
  env.mbsfn_links.at(0) = radio::LinkQuality::from_db(4.0, radio::ReceptionMode::kMbsfn);
  CHECK(radio::bler(0, env.mbsfn_links.at(0).sinr_db(), env.mcs_table) <=
        radio::bler(0, env.unicast_links.at(0).sinr_db(), env.mcs_table));
}

TEST_CASE("SC-PTM sends exactly one initial allocation per packet") {
  for (auto kind : {StrategyKind::kScPtm, StrategyKind::kScPtmIc}) {
    for (int n : {1, 2, 4, 8, 16}) {
      const auto env = frozen_env(n, -1.0);
      frame::ResourceLedger ledger(env.frame);
      std::vector<GroupPacket> packets;
      for (int k = 0; k < 20; ++k) packets.push_back(packet(0, k, 20 * k));
      const auto log = drive(kind, env, ledger, packets);
      std::map<int, int> initial;
      for (const auto& e : log.transmissions) {
        if (!e.retransmission) {
          ++initial[e.packet];
          CHECK(e.rnti_kind == frame::RntiKind::kGroupRnti);
          CHECK(e.rnti == group_rnti_for(0));
          CHECK(e.union_nack == n);
        }
      }
      CHECK(initial.size() == 20);
      for (const auto& [pkt, count] : initial) CHECK(count == 1);
      for (const auto& d : log.deliveries) CHECK(d.initial_allocations == 1);
    }
  }
}

TEST_CASE("delivery accounting matches the ledger") {
  for (auto kind : kAllStrategies) {
    const auto env = frozen_env(6, -2.0);
    frame::ResourceLedger ledger(env.frame);
    std::vector<GroupPacket> packets;
    for (int k = 0; k < 40; ++k) packets.push_back(packet(0, k, 20 * k));
    const auto log = drive(kind, env, ledger, packets, 9);
    REQUIRE(log.deliveries.size() == 40);
    std::int64_t done_prbs = 0, tx_prbs = 0;
    for (const auto& d : log.deliveries) {
      done_prbs += d.prbs;
      CHECK(d.delivered <= d.members);
      CHECK(((d.full_delivery >= 0) == (d.delivered == d.members)));
    }
    for (const auto& e : log.transmissions) tx_prbs += e.prbs;
    CHECK(done_prbs == tx_prbs);
    CHECK(ledger.cumulative_total().prbs == tx_prbs);
    CHECK(ledger.cumulative(channel_for(kind), 0).prbs == tx_prbs);
  }
}

TEST_CASE("delivery_report") {
  PacketProgress p(0, 0, 10, {3, 1, 2}, 1);
  CHECK(p.members == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(delivery_report(p, 20), std::logic_error);
  p.processes = 1;
  p.record_transmission(12);
  p.initial_allocations = 1;
  p.prbs = 9;
  for (int ue : {1, 2, 3}) p.record_decode(ue, 12);
  CHECK_THROWS_AS(delivery_report(p, 16), std::logic_error);
  p.terminal_processes = 1;
  const auto ok = delivery_report(p, 16);
  CHECK(ok.delivered == 3);
  CHECK(ok.full_delivery == 12);
  CHECK(ok.first_tx == 12);
  CHECK(ok.retx_allocations == 0);
  CHECK(ok.retx_rounds == 0);
  CHECK(ok.prbs == 9);

  PacketProgress lost(0, 1, 30, {1, 2}, 1);
  lost.processes = 1;
  lost.terminal_processes = 1;
  lost.failed_processes = 1;
  lost.record_transmission(30);
  lost.record_decode(1, 30);
  const auto r = delivery_report(lost, 50);
  CHECK(r.delivered == 1);
  CHECK(r.members == 2);
  CHECK(r.full_delivery == -1);
  CHECK(r.failed_processes == 1);

  PacketProgress seg(0, 2, 0, {1}, 2);
  seg.record_decode(1, 4);
  seg.processes = 2;
  seg.terminal_processes = 2;
  CHECK(delivery_report(seg, 8).delivered == 0);
  CHECK_THROWS_AS(seg.record_decode(9, 4), std::out_of_range);
}

TEST_CASE("first-shot delivery needs no retransmission") {
  const auto env = frozen_env(8, 30.0);
  frame::ResourceLedger ledger(env.frame);
  const auto log = drive(StrategyKind::kScPtm, env, ledger, {packet(0, 0, 0)});
  REQUIRE(log.deliveries.size() == 1);
  const auto& d = log.deliveries.front();
  CHECK(d.retx_rounds == 0);
  CHECK(d.retx_allocations == 0);
  CHECK(d.delivered == 8);
  CHECK(d.full_delivery == 0);
  CHECK(d.subframe == env.access.feedback_delay);
}

TEST_CASE("a process failing at the cap is reported as loss") {
  const auto env = frozen_env(3, -25.0);
  frame::ResourceLedger ledger(env.frame);
  const auto log = drive(StrategyKind::kScPtm, env, ledger, {packet(0, 0, 0)});
  REQUIRE(log.deliveries.size() == 1);
  const auto& d = log.deliveries.front();
  CHECK(d.delivered < d.members);
  CHECK(d.full_delivery == -1);
  CHECK(d.failed_processes == 1);
  CHECK(d.retx_rounds == env.access.max_retx);
  for (const auto& e : log.transmissions) CHECK_FALSE(e.mcs_feasible);
}

namespace {

struct TwoProcessState {
  CellEnvironment env;
  std::vector<harq::HarqProcess> procs;
};

// Three UEs; process 1 missed by UE 3, process 4 missed by UE 2.
TwoProcessState two_process_state() {
  TwoProcessState s;
  s.env = frozen_env(0, 0.0);
  s.env.sessions[0].members = {1, 2, 3};
  for (int ue : {1, 2, 3}) {
    s.env.unicast_links.emplace(ue, radio::LinkQuality::from_db(10.0, radio::ReceptionMode::kUnicast));
  }
  const int ues[] = {1, 2, 3};
  auto make = [&](int id, std::int64_t birth, int miss) {
    auto p = harq::start_process(id, harq::make_tb(id, 0, std::vector<std::uint8_t>(40, static_cast<std::uint8_t>(id))),
                                 2, ues, 3, birth);
    harq::transmit_round(p, s.env.unicast_links, [miss](int ue) { return ue == miss ? 1.0 : 0.0; },
                         s.env.mcs_table, s.env.bler);
    return p;
  };
  s.procs.push_back(make(1, 0, 3));
  s.procs.push_back(make(4, 3, 2));
  return s;
}

std::vector<PendingRetx> pending_of(std::vector<harq::HarqProcess>& procs, const CellEnvironment& env) {
  std::vector<PendingRetx> out;
  int packet = 0;
  for (auto& p : procs) {
    const int prbs = frame::prbs_needed(p.tb().size_bits(), p.mcs(), ChannelKind::kScPtm, env.frame,
                                        env.mcs_table);
    out.push_back({&p, packet++, prbs, ChannelKind::kScPtm, frame::RntiKind::kGroupRnti,
                   env.sessions[0].group_rnti, p.birth() + 4});
  }
  return out;
}

}  // namespace

TEST_CASE("two-process example: one coded retransmission instead of two") {
  for (bool ic : {true, false}) {
    auto s = two_process_state();
    REQUIRE(s.procs[0].nack_set() == std::vector<int>{3});
    REQUIRE(s.procs[1].nack_set() == std::vector<int>{2});
    frame::ResourceLedger ledger(s.env.frame);
    const auto pending = pending_of(s.procs, s.env);
    const auto r = dispatch_retransmissions(8, pending, s.env.sessions[0], s.env, ledger, ic,
                                            [](int) { return 0.0; });
    CHECK(r.rounds.size() == 2);
    if (ic) {
      REQUIRE(r.transmissions.size() == 1);
      CHECK(r.transmissions[0].m == 2);
      CHECK(r.transmissions[0].union_nack == 2);
      // Separately: UE 1 twice, UE 2 and UE 3 once each; coded: UE 1 once.
      CHECK(r.transmissions[0].redundant_avoided == 3);
      REQUIRE(ledger.control_log().size() == 1);
      const auto& dci = ledger.control_log()[0];
      CHECK(dci.m() == 2);
      CHECK(dci.harq_infos[0].process_id == 1);
      CHECK(dci.harq_infos[1].process_id == 4);
      CHECK_FALSE(dci.harq_infos[0].new_data);
      CHECK(dci.rnti == s.env.sessions[0].group_rnti);
    } else {
      CHECK(r.transmissions.size() == 2);
      CHECK(ledger.control_log().size() == 2);
      for (const auto& dci : ledger.control_log()) CHECK(dci.m() == 1);
    }
    CHECK(ledger.allocation_count() == static_cast<int>(r.transmissions.size()));
    for (const auto& p : s.procs) CHECK(p.status() == harq::ProcessStatus::kDone);
  }
}

TEST_CASE("overlapping NACK sets leave nothing to code") {
  std::vector<std::size_t> counts;
  for (bool ic : {true, false}) {
    auto s = two_process_state();
    s.procs.clear();
    const int ues[] = {1, 2, 3};
    for (int id : {1, 2, 3}) {
      auto p = harq::start_process(id, harq::make_tb(id, 0, std::vector<std::uint8_t>(40, 1)), 2, ues, 3, id);
      harq::transmit_round(p, s.env.unicast_links, [](int ue) { return ue == 3 ? 1.0 : 0.0; },
                           s.env.mcs_table, s.env.bler);
      s.procs.push_back(std::move(p));
    }
    frame::ResourceLedger ledger(s.env.frame);
    const auto r = dispatch_retransmissions(10, pending_of(s.procs, s.env), s.env.sessions[0], s.env,
                                            ledger, ic, [](int) { return 0.5; });
    counts.push_back(r.transmissions.size());
    for (const auto& e : r.transmissions) CHECK(e.m == 1);
  }
  CHECK(counts[0] == counts[1]);
  CHECK(counts[0] == 3);
}

TEST_CASE("dispatch rejects foreign or settled processes") {
  auto s = two_process_state();
  frame::ResourceLedger ledger(s.env.frame);
  const int ues[] = {1};
  auto fresh = harq::start_process(9, harq::make_tb(9, 0, {1}), 0, ues);
  std::vector<PendingRetx> bad = {{&fresh, 0, 1, ChannelKind::kScPtm, frame::RntiKind::kGroupRnti, 0, 0}};
  CHECK_THROWS_AS(dispatch_retransmissions(0, bad, s.env.sessions[0], s.env, ledger, true,
                                           [](int) { return 0.0; }),
                  std::logic_error);
  auto other = harq::start_process(10, harq::make_tb(10, 5, {1}), 0, ues);
  bad[0].proc = &other;
  CHECK_THROWS_AS(dispatch_retransmissions(0, bad, s.env.sessions[0], s.env, ledger, false,
                                           [](int) { return 0.0; }),
                  std::invalid_argument);
}

TEST_CASE("hold window delays lone retransmissions") {
  auto s = two_process_state();
  s.env.access.ic_hold_subframes = 10;
  s.procs.pop_back();
  frame::ResourceLedger ledger(s.env.frame);
  auto pending = pending_of(s.procs, s.env);  // ready since 4
  auto r = dispatch_retransmissions(8, pending, s.env.sessions[0], s.env, ledger, true,
                                    [](int) { return 0.0; });
  CHECK(r.transmissions.empty());
  r = dispatch_retransmissions(14, pending, s.env.sessions[0], s.env, ledger, true,
                               [](int) { return 0.0; });
  CHECK(r.transmissions.size() == 1);
}

TEST_CASE("coded retransmissions never cost more PRBs than separate ones") {
  Rng rng(404);
  for (int trial = 0; trial < 400; ++trial) {
    auto env = frozen_env(0, 0.0);
    env.frame.total_prb = 100;
    const int n_ues = 2 + static_cast<int>(rng() % 10);
    env.sessions[0].members = members_of(n_ues);
    for (int ue = 0; ue < n_ues; ++ue) {
      env.unicast_links.emplace(ue, radio::LinkQuality::from_db(-8 + 22 * uniform01(rng),
                                                                radio::ReceptionMode::kUnicast));
    }
    std::vector<radio::LinkQuality> all;
    for (int ue = 0; ue < n_ues; ++ue) all.push_back(env.unicast_links.at(ue));
    const int mcs = radio::select_mcs(all, env.mcs_table, 0.01).mcs;

    std::vector<harq::HarqProcess> procs;
    const int n_procs = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < n_procs; ++k) {
      auto p = harq::start_process(k, harq::make_tb(k, 0, std::vector<std::uint8_t>(40, static_cast<std::uint8_t>(k))),
                                   mcs, env.sessions[0].members, 3, k);
      // Force at least one NACK so every process is pending.
      const int forced = static_cast<int>(rng() % static_cast<unsigned>(n_ues));
      std::map<int, double> u;
      for (int ue = 0; ue < n_ues; ++ue) u[ue] = ue == forced ? 1.0 : uniform01(rng);
      harq::transmit_round(p, env.unicast_links, draws_from(u), env.mcs_table, env.bler);
      if (harq::needs_retransmission(p)) procs.push_back(std::move(p));
    }
    if (procs.empty()) continue;

    auto coded_procs = procs;
    auto plain_procs = procs;
    frame::ResourceLedger l1(env.frame), l2(env.frame);
    const auto rc = dispatch_retransmissions(100, pending_of(coded_procs, env), env.sessions[0], env,
                                             l1, true, [](int) { return 0.5; });
    const auto rp = dispatch_retransmissions(100, pending_of(plain_procs, env), env.sessions[0], env,
                                             l2, false, [](int) { return 0.5; });
    REQUIRE(rc.rounds.size() == procs.size());
    REQUIRE(rp.rounds.size() == procs.size());
    CHECK(l1.cumulative_total().prbs <= l2.cumulative_total().prbs);
    CHECK(rc.transmissions.size() <= rp.transmissions.size());

    // Same MCS rule for both sides: a plan costs its largest component at
    // the plan MCS; equality iff nothing was combined.
    std::vector<const harq::HarqProcess*> ptrs;
    for (const auto& p : procs) ptrs.push_back(&p);
    const auto matrix = harq::build_reception_matrix(ptrs, env.sessions[0].members);
    const auto plans = coding::plan_combinations(matrix, env.access.ic_max_m);
    auto cost = [&](std::vector<const harq::HarqProcess*> comps) {
      int bytes = 0;
      for (const auto* c : comps) bytes = std::max(bytes, c->tb().size_bytes());
      return frame::prbs_needed(bytes * 8, retransmission_mcs(comps, env).mcs, ChannelKind::kScPtm,
                                env.frame, env.mcs_table);
    };
    int coded = 0, separate = 0;
    bool combined = false;
    for (const auto& plan : plans) {
      std::vector<const harq::HarqProcess*> comps;
      for (int id : plan.process_ids) {
        for (const auto& p : procs) {
          if (p.id() == id) comps.push_back(&p);
        }
      }
      coded += cost(comps);
      for (const auto* c : comps) separate += cost({c});
      combined = combined || plan.m() > 1;
    }
    CHECK(coded <= separate);
    CHECK((coded == separate) == !combined);
  }
}

TEST_CASE("coded payloads decode byte-exactly at every NACK UE") {
  auto s = two_process_state();
  std::vector<harq::TransportBlock> tbs;
  for (const auto& p : s.procs) tbs.push_back(p.tb());
  frame::ResourceLedger ledger(s.env.frame);
  // dispatch verifies the XOR round trip internally and throws on mismatch
  CHECK_NOTHROW(dispatch_retransmissions(8, pending_of(s.procs, s.env), s.env.sessions[0], s.env,
                                         ledger, true, [](int) { return 0.0; }));
}
