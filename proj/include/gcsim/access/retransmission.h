#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gcsim/access/context.h"
#include "gcsim/access/events.h"
#include "gcsim/frame/ledger.h"
#include "gcsim/harq/harq.h"

namespace gcsim::access {

// A HARQ process whose NACK feedback has arrived and that awaits its next round.
struct PendingRetx {
  harq::HarqProcess* proc = nullptr;
  int packet = 0;                 // packet the process belongs to
  int prbs = 0;                   // size of its initial allocation
  frame::ChannelKind channel = frame::ChannelKind::kScPtm;
  frame::RntiKind rnti_kind = frame::RntiKind::kGroupRnti;
  std::uint32_t rnti = 0;
  std::int64_t ready_since = 0;   // subframe the NACK was processed
  bool mcs_feasible = true;       // of the original transmission
};

struct RoundOutcome {
  int process_id = 0;
  int packet = 0;
  std::vector<harq::UeFeedback> feedback;
};

struct DispatchResult {
  std::vector<TxEvent> transmissions;  // one per allocation
  std::vector<RoundOutcome> rounds;    // one per retransmitted process
};

// MCS of a coded retransmission: select_mcs over the current accumulated SINR
// of every UE still NACKing one of the components.
radio::McsChoice retransmission_mcs(std::span<const harq::HarqProcess* const> components,
                                    const CellEnvironment& env);

// Sends what fits of one group's pending retransmissions in `subframe`.
//
// Without index coding every process gets its own allocation of its original
// size, MCS and RNTI, oldest first. With index coding the group's reception
// matrix is partitioned by plan_combinations and each plan becomes a single
// SC-PTM allocation with one m-HARQ-info DCI carrying the XOR of the
// components, at the MCS select_mcs picks for the union NACK UEs'
// accumulated SINR. A plan of one process waits up to ic_hold_subframes for
// a partner. Processes that did not go out stay pending with the caller.
DispatchResult dispatch_retransmissions(std::int64_t subframe, std::span<const PendingRetx> pending,
                                        const GroupSession& session, const CellEnvironment& env,
                                        frame::ResourceLedger& ledger, bool index_coding,
                                        const harq::DrawSource& draw);

}  // namespace gcsim::access
