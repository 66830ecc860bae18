#include "gcsim/access/strategies.h"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "gcsim/access/delivery.h"
#include "gcsim/access/retransmission.h"

namespace gcsim::access {

using frame::ChannelKind;
using frame::RntiKind;

Strategy::Strategy(const CellEnvironment& env, frame::ResourceLedger& ledger, std::uint64_t seed)
    : env_(env), ledger_(ledger), draws_(seed), draw_(draws_.source()) {}

std::vector<std::vector<std::uint8_t>> segment_payload(const std::vector<std::uint8_t>& payload,
                                                       int mcs, ChannelKind kind,
                                                       const frame::FrameConfig& cfg,
                                                       const radio::McsTable& table) {
  if (payload.empty()) throw std::invalid_argument("segment_payload: empty payload");
  const std::size_t max_bytes = static_cast<std::size_t>(frame::max_tbs_bits(mcs, kind, cfg, table) / 8);
  if (max_bytes == 0) {
    throw frame::SegmentationRequired("segment_payload: MCS " + std::to_string(mcs) +
                                      " cannot carry a single byte");
  }
  const std::size_t pieces = (payload.size() + max_bytes - 1) / max_bytes;
  const std::size_t chunk = (payload.size() + pieces - 1) / pieces;
  std::vector<std::vector<std::uint8_t>> out;
  for (std::size_t off = 0; off < payload.size(); off += chunk) {
    const std::size_t end = std::min(payload.size(), off + chunk);
    out.emplace_back(payload.begin() + static_cast<std::ptrdiff_t>(off),
                     payload.begin() + static_cast<std::ptrdiff_t>(end));
  }
  return out;
}

namespace {

using PacketKey = std::pair<int, int>;  // (group, seq)

std::uint32_t c_rnti_for(int ue) { return 0x0100u + static_cast<std::uint32_t>(ue); }

std::vector<radio::LinkQuality> member_links(const harq::LinkMap& links,
                                             const std::vector<int>& members) {
  std::vector<radio::LinkQuality> out;
  out.reserve(members.size());
  for (int ue : members) out.push_back(links.at(ue));
  return out;
}

struct InitialItem {
  int group = 0;
  int packet = 0;
  std::vector<std::uint8_t> payload;
  std::vector<int> targets;
  int mcs = 0;
  bool feasible = true;
  int prbs = 0;
  ChannelKind channel = ChannelKind::kScPtm;
  RntiKind rnti_kind = RntiKind::kGroupRnti;
  std::uint32_t rnti = 0;
};

// Shared machinery of the PDSCH-family methods: an initial queue, HARQ
// processes awaiting feedback, and NACKed processes awaiting a retransmission.
class HarqStrategy : public Strategy {
 public:
  HarqStrategy(const CellEnvironment& env, frame::ResourceLedger& ledger, std::uint64_t seed,
               ChannelKind channel, bool index_coding)
      : Strategy(env, ledger, seed), channel_(channel), index_coding_(index_coding) {}

  void on_arrival(const GroupPacket& packet) override {
    const GroupSession& session = env_.session(packet.group);
    auto [it, inserted] = packets_.try_emplace(PacketKey{packet.group, packet.seq}, packet.group,
                                               packet.seq, packet.arrival, session.members, 1);
    if (!inserted) {
      throw std::invalid_argument("duplicate packet " + std::to_string(packet.group) + "/" +
                                  std::to_string(packet.seq));
    }
    log_.arrivals.push_back({packet.arrival, packet.group, packet.seq,
                             static_cast<int>(session.members.size())});
    PacketProgress& progress = it->second;
    const std::size_t before = queue_.size();
    enqueue(packet, session, progress);
    progress.processes = static_cast<int>(queue_.size() - before);
  }

  void on_subframe(std::int64_t t) override {
    process_feedback(t);
    if (!ledger_.can_schedule(t, channel_)) return;
    send_retransmissions(t);
    send_initial(t);
  }

  bool idle() const override { return packets_.empty() && queue_.empty(); }

 protected:
  virtual void enqueue(const GroupPacket& packet, const GroupSession& session,
                       PacketProgress& progress) = 0;

  std::deque<InitialItem> queue_;

 private:
  struct Job {
    harq::HarqProcess proc;
    int packet = 0;
    int prbs = 0;
    ChannelKind channel = ChannelKind::kScPtm;
    RntiKind rnti_kind = RntiKind::kGroupRnti;
    std::uint32_t rnti = 0;
    std::int64_t ready_since = -1;  // >= 0 while waiting for a retransmission
    bool mcs_feasible = true;
  };

  void record_acks(PacketProgress& progress, const std::vector<harq::UeFeedback>& fb,
                   std::int64_t t) {
    for (const auto& f : fb) {
      if (f.ack) progress.record_decode(f.ue, t);
    }
  }

  void process_feedback(std::int64_t t) {
    auto end = feedback_due_.upper_bound(t);
    for (auto it = feedback_due_.begin(); it != end; ++it) {
      Job& job = jobs_.at(it->second);
      if (job.proc.status() == harq::ProcessStatus::kActive) {
        job.ready_since = t;
        pending_[job.proc.group()].push_back(job.proc.id());
      } else {
        finish(it->second, t);
      }
    }
    feedback_due_.erase(feedback_due_.begin(), end);
  }

  void finish(int process_id, std::int64_t t) {
    auto jit = jobs_.find(process_id);
    const PacketKey key{jit->second.proc.group(), jit->second.packet};
    PacketProgress& progress = packets_.at(key);
    ++progress.terminal_processes;
    if (jit->second.proc.status() == harq::ProcessStatus::kFailed) ++progress.failed_processes;
    jobs_.erase(jit);
    if (progress.complete()) {
      log_.deliveries.push_back(delivery_report(progress, t));
      packets_.erase(key);
    }
  }

  void send_retransmissions(std::int64_t t) {
    // Groups holding the oldest pending process go first.
    std::vector<std::pair<std::pair<std::int64_t, int>, int>> order;
    for (const auto& [group, ids] : pending_) {
      if (ids.empty()) continue;
      std::pair<std::int64_t, int> oldest{jobs_.at(ids.front()).proc.birth(), ids.front()};
      for (int id : ids) oldest = std::min(oldest, {jobs_.at(id).proc.birth(), id});
      order.push_back({oldest, group});
    }
    std::sort(order.begin(), order.end());

    for (const auto& entry : order) {
      if (ledger_.remaining(t) == 0) break;
      const int group = entry.second;
      std::vector<int>& ids = pending_[group];
      std::vector<PendingRetx> batch;
      for (int id : ids) {
        Job& job = jobs_.at(id);
        batch.push_back({&job.proc, job.packet, job.prbs, job.channel, job.rnti_kind, job.rnti,
                         job.ready_since, job.mcs_feasible});
      }
      DispatchResult r = dispatch_retransmissions(t, batch, env_.session(group), env_, ledger_,
                                                  index_coding_, draw_);
      for (const TxEvent& e : r.transmissions) {
        PacketProgress& progress = packets_.at({group, e.packet});
        progress.prbs += e.prbs;
        ++progress.retx_allocations;
        log_.transmissions.push_back(e);
      }
      for (const RoundOutcome& round : r.rounds) {
        Job& job = jobs_.at(round.process_id);
        PacketProgress& progress = packets_.at({group, job.packet});
        ++progress.retx_rounds;
        record_acks(progress, round.feedback, t);
        job.ready_since = -1;
        feedback_due_.emplace(t + env_.access.feedback_delay, round.process_id);
        ids.erase(std::find(ids.begin(), ids.end(), round.process_id));
      }
    }
  }

  void send_initial(std::int64_t t) {
    for (auto it = queue_.begin(); it != queue_.end();) {
      if (ledger_.remaining(t) == 0) break;
      if (!ledger_.fits(t, it->prbs)) {
        ++it;
        continue;
      }
      const int id = next_process_id_++;
      frame::Allocation alloc = ledger_.allocate(t, it->prbs, it->channel, it->rnti_kind, it->group);
      ledger_.emit_dci(alloc, it->rnti, {frame::HarqInfo{id, true, id}});
      harq::HarqProcess proc = harq::start_process(id, harq::make_tb(id, it->group, it->payload),
                                                   it->mcs, it->targets, env_.access.max_retx, t);
      auto fb = harq::transmit_round(proc, env_.unicast_links, draw_, env_.mcs_table, env_.bler);

      TxEvent e;
      e.subframe = t;
      e.group = it->group;
      e.packet = it->packet;
      e.alloc = alloc.id;
      e.prbs = it->prbs;
      e.channel = it->channel;
      e.rnti_kind = it->rnti_kind;
      e.rnti = it->rnti;
      e.mcs = it->mcs;
      e.mcs_feasible = it->feasible;
      e.union_nack = static_cast<int>(it->targets.size());
      e.feedback = static_cast<int>(fb.size());
      log_.transmissions.push_back(e);

      PacketProgress& progress = packets_.at({it->group, it->packet});
      progress.prbs += it->prbs;
      ++progress.initial_allocations;
      progress.record_transmission(t);
      record_acks(progress, fb, t);

      jobs_.emplace(id, Job{std::move(proc), it->packet, it->prbs, it->channel, it->rnti_kind,
                            it->rnti, -1, it->feasible});
      feedback_due_.emplace(t + env_.access.feedback_delay, id);
      it = queue_.erase(it);
    }
  }

  ChannelKind channel_;
  bool index_coding_;
  int next_process_id_ = 0;
  std::map<PacketKey, PacketProgress> packets_;
  std::map<int, Job> jobs_;
  std::multimap<std::int64_t, int> feedback_due_;
  std::map<int, std::vector<int>> pending_;  // group -> process ids in NACK order
};

class UnicastStrategy final : public HarqStrategy {
 public:
  UnicastStrategy(const CellEnvironment& env, frame::ResourceLedger& ledger, std::uint64_t seed)
      : HarqStrategy(env, ledger, seed, ChannelKind::kPdschUnicast, false) {}

  StrategyKind kind() const override { return StrategyKind::kUnicastPdsch; }

 protected:
  void enqueue(const GroupPacket& packet, const GroupSession& session,
               PacketProgress& progress) override {
    for (int ue : session.members) {
      const radio::McsChoice& choice = mcs_for(ue);
      auto pieces = segment_payload(packet.payload, choice.mcs, ChannelKind::kPdschUnicast,
                                    env_.frame, env_.mcs_table);
      progress.require(ue, static_cast<int>(pieces.size()));
      for (auto& piece : pieces) {
        InitialItem item;
        item.group = packet.group;
        item.packet = packet.seq;
        item.prbs = frame::prbs_needed(static_cast<int>(piece.size()) * 8, choice.mcs,
                                       ChannelKind::kPdschUnicast, env_.frame, env_.mcs_table);
        item.payload = std::move(piece);
        item.targets = {ue};
        item.mcs = choice.mcs;
        item.feasible = choice.feasible;
        item.channel = ChannelKind::kPdschUnicast;
        item.rnti_kind = RntiKind::kCRnti;
        item.rnti = c_rnti_for(ue);
        queue_.push_back(std::move(item));
      }
    }
  }

 private:
  const radio::McsChoice& mcs_for(int ue) {
    auto it = mcs_.find(ue);
    if (it == mcs_.end()) {
      const radio::LinkQuality link = env_.unicast_links.at(ue);
      it = mcs_.emplace(ue, radio::select_mcs(std::span(&link, 1), env_.mcs_table,
                                              env_.access.target_bler, env_.bler))
               .first;
    }
    return it->second;
  }

  std::map<int, radio::McsChoice> mcs_;
};

class ScPtmStrategy final : public HarqStrategy {
 public:
  ScPtmStrategy(const CellEnvironment& env, frame::ResourceLedger& ledger, std::uint64_t seed,
                bool index_coding)
      : HarqStrategy(env, ledger, seed, ChannelKind::kScPtm, index_coding),
        index_coding_(index_coding) {}

  StrategyKind kind() const override {
    return index_coding_ ? StrategyKind::kScPtmIc : StrategyKind::kScPtm;
  }

 protected:
  void enqueue(const GroupPacket& packet, const GroupSession& session,
               PacketProgress& progress) override {
    auto it = mcs_.find(session.group);
    if (it == mcs_.end()) {
      const auto links = member_links(env_.unicast_links, session.members);
      it = mcs_.emplace(session.group,
                        radio::select_mcs(links, env_.mcs_table, env_.access.target_bler, env_.bler,
                                          env_.access.ignore_worst_fraction))
               .first;
    }
    const radio::McsChoice choice = it->second;
    auto pieces = segment_payload(packet.payload, choice.mcs, ChannelKind::kScPtm, env_.frame,
                                  env_.mcs_table);
    const int segments = static_cast<int>(pieces.size());
    for (auto& piece : pieces) {
      InitialItem item;
      item.group = packet.group;
      item.packet = packet.seq;
      item.prbs = frame::prbs_needed(static_cast<int>(piece.size()) * 8, choice.mcs,
                                     ChannelKind::kScPtm, env_.frame, env_.mcs_table);
      item.payload = std::move(piece);
      item.targets = session.members;
      item.mcs = choice.mcs;
      item.feasible = choice.feasible;
      item.channel = ChannelKind::kScPtm;
      item.rnti_kind = RntiKind::kGroupRnti;
      item.rnti = session.group_rnti;
      queue_.push_back(std::move(item));
    }
    for (int ue : session.members) progress.require(ue, segments);
  }

 private:
  bool index_coding_;
  std::map<int, radio::McsChoice> mcs_;
};

// One shot per packet at a fixed robust MCS in MBSFN subframes; no HARQ.
class PmchStrategy final : public Strategy {
 public:
  PmchStrategy(const CellEnvironment& env, frame::ResourceLedger& ledger, std::uint64_t seed)
      : Strategy(env, ledger, seed) {
    if (env.frame.eligible_per_frame(ChannelKind::kPmch) == 0) {
      throw frame::ChannelConfigError("pmch strategy needs at least one MBSFN subframe per frame");
    }
    if (!env.mcs_table.contains(env.access.pmch_mcs)) {
      throw std::invalid_argument("pmch.mcs " + std::to_string(env.access.pmch_mcs) +
                                  " is not in the MCS table");
    }
    if (env.access.mcch_period < 1) throw std::invalid_argument("pmch.mcch_period must be >= 1");
  }

  StrategyKind kind() const override { return StrategyKind::kPmch; }

  void on_arrival(const GroupPacket& packet) override {
    const GroupSession& session = env_.session(packet.group);
    const int period = env_.access.mcch_period;
    auto act = activation_.find(packet.group);
    if (act == activation_.end()) {
      const std::int64_t boundary = (packet.arrival + period - 1) / period * period;
      act = activation_.emplace(packet.group, boundary).first;
    }
    const std::int64_t schedulable = std::max(packet.arrival, act->second);

    auto pieces = segment_payload(packet.payload, env_.access.pmch_mcs, ChannelKind::kPmch,
                                  env_.frame, env_.mcs_table);
    auto [it, inserted] =
        packets_.try_emplace(PacketKey{packet.group, packet.seq}, packet.group, packet.seq,
                             packet.arrival, session.members, static_cast<int>(pieces.size()));
    if (!inserted) {
      throw std::invalid_argument("duplicate packet " + std::to_string(packet.group) + "/" +
                                  std::to_string(packet.seq));
    }
    it->second.schedulable = schedulable;
    it->second.processes = static_cast<int>(pieces.size());
    log_.arrivals.push_back({packet.arrival, packet.group, packet.seq,
                             static_cast<int>(session.members.size())});
    for (auto& piece : pieces) {
      queue_.push_back({packet.group, packet.seq, std::move(piece), schedulable});
    }
  }

  void on_subframe(std::int64_t t) override {
    if (!ledger_.can_schedule(t, ChannelKind::kPmch)) return;
    const int mcs = env_.access.pmch_mcs;
    bool sent = false;
    for (auto it = queue_.begin(); it != queue_.end();) {
      if (ledger_.remaining(t) == 0) break;
      if (it->schedulable > t) {
        ++it;
        continue;
      }
      const int prbs = frame::prbs_needed(static_cast<int>(it->payload.size()) * 8, mcs,
                                          ChannelKind::kPmch, env_.frame, env_.mcs_table);
      if (!ledger_.fits(t, prbs)) {
        ++it;
        continue;
      }
      const GroupSession& session = env_.session(it->group);
      const int id = next_process_id_++;
      frame::Allocation alloc =
          ledger_.allocate(t, prbs, ChannelKind::kPmch, RntiKind::kMbsfnArea, it->group);
      harq::HarqProcess proc = harq::start_process(id, harq::make_tb(id, it->group, it->payload),
                                                   mcs, session.members, 0, t);
      auto fb = harq::transmit_round(proc, env_.mbsfn_links, draw_, env_.mcs_table, env_.bler);

      TxEvent e;
      e.subframe = t;
      e.group = it->group;
      e.packet = it->packet;
      e.alloc = alloc.id;
      e.prbs = prbs;
      e.channel = ChannelKind::kPmch;
      e.rnti_kind = RntiKind::kMbsfnArea;
      e.rnti = kMRnti;
      e.mcs = mcs;
      e.mcs_feasible = feasible(session);
      e.union_nack = static_cast<int>(session.members.size());
      e.feedback = 0;
      log_.transmissions.push_back(e);
      sent = true;

      const PacketKey key{it->group, it->packet};
      PacketProgress& progress = packets_.at(key);
      progress.prbs += prbs;
      ++progress.initial_allocations;
      progress.record_transmission(t);
      for (const auto& f : fb) {
        if (f.ack) progress.record_decode(f.ue, t);
      }
      ++progress.terminal_processes;
      if (proc.status() == harq::ProcessStatus::kFailed) ++progress.failed_processes;
      if (progress.complete()) {
        log_.deliveries.push_back(delivery_report(progress, t));
        packets_.erase(key);
      }
      it = queue_.erase(it);
    }
    if (sent) log_.pmch_idle.push_back({t, ledger_.remaining(t)});
  }

  bool idle() const override { return packets_.empty() && queue_.empty(); }

 private:
  static constexpr std::uint32_t kMRnti = 0xFFFD;

  struct Item {
    int group = 0;
    int packet = 0;
    std::vector<std::uint8_t> payload;
    std::int64_t schedulable = 0;
  };

  bool feasible(const GroupSession& session) {
    auto it = feasible_.find(session.group);
    if (it == feasible_.end()) {
      double worst = 0;
      bool first = true;
      for (int ue : session.members) {
        const double db = env_.mbsfn_links.at(ue).sinr_db();
        if (first || db < worst) worst = db;
        first = false;
      }
      const bool ok =
          radio::bler(env_.access.pmch_mcs, worst, env_.mcs_table, env_.bler) <=
          env_.access.target_bler;
      it = feasible_.emplace(session.group, ok).first;
    }
    return it->second;
  }

  int next_process_id_ = 0;
  std::map<int, std::int64_t> activation_;
  std::map<PacketKey, PacketProgress> packets_;
  std::deque<Item> queue_;
  std::map<int, bool> feasible_;
};

}  // namespace

std::unique_ptr<Strategy> make_strategy(StrategyKind kind, const CellEnvironment& env,
                                        frame::ResourceLedger& ledger, std::uint64_t seed) {
  switch (kind) {
    case StrategyKind::kUnicastPdsch: return std::make_unique<UnicastStrategy>(env, ledger, seed);
    case StrategyKind::kPmch: return std::make_unique<PmchStrategy>(env, ledger, seed);
    case StrategyKind::kScPtm: return std::make_unique<ScPtmStrategy>(env, ledger, seed, false);
    case StrategyKind::kScPtmIc: return std::make_unique<ScPtmStrategy>(env, ledger, seed, true);
  }
  throw std::invalid_argument("make_strategy: unknown strategy");
}

}  // namespace gcsim::access
