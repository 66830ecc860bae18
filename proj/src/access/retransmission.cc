#include "gcsim/access/retransmission.h"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "gcsim/coding/index_coder.h"
#include "gcsim/coding/xor_codec.h"
#include "gcsim/harq/reception_matrix.h"

namespace gcsim::access {

namespace {

bool older(const PendingRetx& a, const PendingRetx& b) {
  if (a.proc->birth() != b.proc->birth()) return a.proc->birth() < b.proc->birth();
  return a.proc->id() < b.proc->id();
}

const harq::LinkMap& links_for(const CellEnvironment& env, frame::ChannelKind kind) {
  return kind == frame::ChannelKind::kPmch ? env.mbsfn_links : env.unicast_links;
}

void send_separately(std::int64_t t, std::vector<PendingRetx> order, const GroupSession& session,
                     const CellEnvironment& env, frame::ResourceLedger& ledger,
                     const harq::DrawSource& draw, DispatchResult& out) {
  std::sort(order.begin(), order.end(), older);
  for (const PendingRetx& p : order) {
    if (ledger.remaining(t) == 0) break;
    if (!ledger.fits(t, p.prbs)) continue;
    harq::HarqProcess& proc = *p.proc;
    frame::Allocation alloc = ledger.allocate(t, p.prbs, p.channel, p.rnti_kind, session.group);
    ledger.emit_dci(alloc, p.rnti, {frame::HarqInfo{proc.id(), false, proc.tb().id}});
    auto fb = harq::transmit_round(proc, links_for(env, p.channel), draw, env.mcs_table, env.bler);

    TxEvent e;
    e.subframe = t;
    e.group = session.group;
    e.packet = p.packet;
    e.alloc = alloc.id;
    e.prbs = p.prbs;
    e.channel = p.channel;
    e.rnti_kind = p.rnti_kind;
    e.rnti = p.rnti;
    e.mcs = proc.mcs();
    e.mcs_feasible = p.mcs_feasible;
    e.retransmission = true;
    e.m = 1;
    e.union_nack = static_cast<int>(fb.size());
    e.feedback = static_cast<int>(fb.size());
    out.transmissions.push_back(e);
    out.rounds.push_back({proc.id(), p.packet, std::move(fb)});
  }
}

void check_plans(const std::vector<coding::CombinationPlan>& plans,
                 const harq::ReceptionMatrix& matrix) {
  if (!coding::is_partition(plans, matrix)) {
    throw std::logic_error("index coder: plans do not partition the pending processes");
  }
  for (const auto& plan : plans) {
    if (!coding::nack_sets_disjoint(plan, matrix) ||
        !coding::structurally_decodable(plan, matrix)) {
      throw std::logic_error("index coder: plan with " + std::to_string(plan.m()) +
                             " components is not decodable by its NACK UEs");
    }
  }
}

void verify_round_trip(const coding::CodedTb& coded,
                       const std::vector<harq::TransportBlock>& components) {
  if (components.size() < 2) return;
  std::vector<harq::TransportBlock> side;
  for (std::size_t k = 0; k < components.size(); ++k) {
    side.clear();
    for (std::size_t j = 0; j < components.size(); ++j) {
      if (j != k) side.push_back(components[j]);
    }
    if (coding::xor_decode(coded, side).payload != components[k].payload) {
      throw std::logic_error("index coder: XOR round trip failed for TB " +
                             std::to_string(components[k].id));
    }
  }
}

void send_coded(std::int64_t t, std::span<const PendingRetx> pending, const GroupSession& session,
                const CellEnvironment& env, frame::ResourceLedger& ledger,
                const harq::DrawSource& draw, DispatchResult& out) {
  std::unordered_map<int, const PendingRetx*> by_id;
  std::vector<const harq::HarqProcess*> procs;
  for (const PendingRetx& p : pending) {
    by_id.emplace(p.proc->id(), &p);
    procs.push_back(p.proc);
  }
  const harq::ReceptionMatrix matrix = harq::build_reception_matrix(procs, session.members);
  const auto plans = coding::plan_combinations(matrix, env.access.ic_max_m);
  check_plans(plans, matrix);

  const int members = static_cast<int>(session.members.size());
  for (const auto& plan : plans) {
    if (ledger.remaining(t) == 0) break;
    std::vector<const PendingRetx*> parts;
    for (int id : plan.process_ids) parts.push_back(by_id.at(id));
    std::sort(parts.begin(), parts.end(),
              [](const PendingRetx* a, const PendingRetx* b) { return older(*a, *b); });

    if (plan.m() == 1 && t - parts.front()->ready_since < env.access.ic_hold_subframes) continue;

    std::vector<const harq::HarqProcess*> components;
    for (const PendingRetx* p : parts) components.push_back(p->proc);
    const radio::McsChoice choice = retransmission_mcs(components, env);
    const int mcs = choice.mcs;
    const int prbs = frame::prbs_needed(plan.coded_bytes * 8, mcs, frame::ChannelKind::kScPtm,
                                        env.frame, env.mcs_table);
    if (!ledger.fits(t, prbs)) continue;

    frame::Allocation alloc = ledger.allocate(t, prbs, frame::ChannelKind::kScPtm,
                                              frame::RntiKind::kGroupRnti, session.group);
    std::vector<frame::HarqInfo> infos;
    std::vector<harq::TransportBlock> tbs;
    for (const PendingRetx* p : parts) {
      infos.push_back({p->proc->id(), false, p->proc->tb().id});
      tbs.push_back(p->proc->tb());
    }
    ledger.emit_dci(alloc, session.group_rnti, std::move(infos));
    verify_round_trip(coding::xor_encode(tbs), tbs);

    int separate_redundant = 0;
    int feedback = 0;
    for (const PendingRetx* p : parts) {
      separate_redundant += members - static_cast<int>(p->proc->nack_set().size());
      std::optional<int> override_mcs;
      if (p->proc->mcs() != mcs) override_mcs = mcs;
      auto fb = harq::transmit_round(*p->proc, env.unicast_links, draw, env.mcs_table, env.bler,
                                     override_mcs);
      feedback += static_cast<int>(fb.size());
      out.rounds.push_back({p->proc->id(), p->packet, std::move(fb)});
    }
    const int union_nack = static_cast<int>(plan.union_nack.size());

    TxEvent e;
    e.subframe = t;
    e.group = session.group;
    e.packet = parts.front()->packet;
    e.alloc = alloc.id;
    e.prbs = prbs;
    e.channel = frame::ChannelKind::kScPtm;
    e.rnti_kind = frame::RntiKind::kGroupRnti;
    e.rnti = session.group_rnti;
    e.mcs = mcs;
    e.mcs_feasible = choice.feasible;
    e.retransmission = true;
    e.m = static_cast<int>(plan.m());
    e.union_nack = union_nack;
    e.redundant_avoided = separate_redundant - (members - union_nack);
    e.feedback = feedback;
    out.transmissions.push_back(e);
  }
}

}  // namespace

radio::McsChoice retransmission_mcs(std::span<const harq::HarqProcess* const> components,
                                    const CellEnvironment& env) {
  // The coded TB only has to reach the NACK UEs, each of which combines it
  // with what it already accumulated for its own component.
  std::vector<radio::LinkQuality> acc;
  for (const harq::HarqProcess* p : components) {
    for (int ue : p->nack_set()) {
      acc.emplace_back(p->accumulated_sinr(ue), radio::ReceptionMode::kUnicast);
    }
  }
  return radio::select_mcs(acc, env.mcs_table, env.access.target_bler, env.bler);
}

DispatchResult dispatch_retransmissions(std::int64_t subframe, std::span<const PendingRetx> pending,
                                        const GroupSession& session, const CellEnvironment& env,
                                        frame::ResourceLedger& ledger, bool index_coding,
                                        const harq::DrawSource& draw) {
  DispatchResult out;
  if (pending.empty()) return out;
  for (const PendingRetx& p : pending) {
    if (p.proc == nullptr || p.proc->group() != session.group) {
      throw std::invalid_argument("dispatch_retransmissions: process outside group " +
                                  std::to_string(session.group));
    }
    if (!harq::needs_retransmission(*p.proc)) {
      throw std::logic_error("dispatch_retransmissions: process " + std::to_string(p.proc->id()) +
                             " has nothing to retransmit");
    }
  }
  if (index_coding) {
    send_coded(subframe, pending, session, env, ledger, draw, out);
  } else {
    send_separately(subframe, {pending.begin(), pending.end()}, session, env, ledger, draw, out);
  }
  return out;
}

}  // namespace gcsim::access
