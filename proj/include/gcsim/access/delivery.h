#pragma once

#include <cstdint>
#include <vector>

#include "gcsim/access/events.h"

namespace gcsim::access {

// Scheduler-side bookkeeping for one group packet while its HARQ processes
// run. A member counts as delivered once it decoded every segment.
struct PacketProgress {
  int group = 0;
  int seq = 0;
  std::int64_t arrival = 0;
  std::int64_t schedulable = 0;
  std::int64_t first_tx = -1;
  std::vector<int> members;  // sorted
  std::vector<int> required_segments;      // per member
  std::vector<int> decoded_segments;       // per member
  std::vector<std::int64_t> last_decode;   // per member
  int processes = 0;
  int terminal_processes = 0;
  int failed_processes = 0;
  std::int64_t prbs = 0;
  int initial_allocations = 0;
  int retx_allocations = 0;
  int retx_rounds = 0;

  PacketProgress(int group, int seq, std::int64_t arrival, std::vector<int> members, int segments);

  // Members whose TBs were segmented differently (unicast, per-UE MCS).
  void require(int ue, int segments);
  void record_decode(int ue, std::int64_t subframe);
  void record_transmission(std::int64_t subframe);
  bool complete() const { return processes > 0 && terminal_processes == processes; }

 private:
  std::size_t index_of(int ue) const;
};

// Final accounting for a packet whose processes are all terminal; throws
// std::logic_error otherwise. Lost members show up as delivered < members.
PacketDoneEvent delivery_report(const PacketProgress& progress, std::int64_t now);

}  // namespace gcsim::access
