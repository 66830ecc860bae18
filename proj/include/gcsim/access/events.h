#pragma once

#include <cstdint>
#include <vector>

#include "gcsim/frame/frame.h"

namespace gcsim::access {

struct ArrivalEvent {
  std::int64_t subframe = 0;
  int group = 0;
  int packet = 0;
  int members = 0;
};

// One data allocation. `packet` is the packet the PRBs are charged to; for
// an index-coded allocation that is the oldest component's packet.
struct TxEvent {
  std::int64_t subframe = 0;
  int group = 0;
  int packet = 0;
  int alloc = 0;
  int prbs = 0;
  frame::ChannelKind channel = frame::ChannelKind::kScPtm;
  frame::RntiKind rnti_kind = frame::RntiKind::kGroupRnti;
  std::uint32_t rnti = 0;
  int mcs = 0;
  bool mcs_feasible = true;   // MCS met the BLER target at the worst target UE
  bool retransmission = false;
  int m = 1;                  // HARQ infos carried by the DCI
  int union_nack = 0;         // UEs the allocation is meant for
  // Receptions by UEs that already hold the data, saved relative to sending
  // the m components one by one.
  int redundant_avoided = 0;
  int feedback = 0;           // ACK/NACK messages this round will produce
};

// Terminal outcome of one group packet (the delivery log).
struct PacketDoneEvent {
  std::int64_t subframe = 0;  // when the scheduler learned the final outcome
  int group = 0;
  int packet = 0;
  std::int64_t arrival = 0;
  std::int64_t schedulable = 0;
  std::int64_t first_tx = -1;
  std::int64_t full_delivery = -1;  // subframe of the last member decode, -1 if any member lost
  int members = 0;
  int delivered = 0;
  std::int64_t prbs = 0;
  int initial_allocations = 0;
  int retx_allocations = 0;
  int retx_rounds = 0;
  int failed_processes = 0;
};

// PRBs left unused in an MBSFN subframe that carried PMCH data.
struct PmchIdleEvent {
  std::int64_t subframe = 0;
  int prbs = 0;
};

struct EventLog {
  std::vector<ArrivalEvent> arrivals;
  std::vector<TxEvent> transmissions;
  std::vector<PacketDoneEvent> deliveries;
  std::vector<PmchIdleEvent> pmch_idle;
};

}  // namespace gcsim::access
