#include "gcsim/access/delivery.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gcsim::access {

PacketProgress::PacketProgress(int group_id, int packet_seq, std::int64_t arrival_subframe,
                               std::vector<int> member_ues, int segment_count)
    : group(group_id),
      seq(packet_seq),
      arrival(arrival_subframe),
      schedulable(arrival_subframe),
      members(std::move(member_ues)),
      required_segments(members.size(), segment_count),
      decoded_segments(members.size(), 0),
      last_decode(members.size(), -1) {
  std::sort(members.begin(), members.end());
}

std::size_t PacketProgress::index_of(int ue) const {
  auto it = std::lower_bound(members.begin(), members.end(), ue);
  if (it == members.end() || *it != ue) {
    throw std::out_of_range("UE " + std::to_string(ue) + " is not a member of group " +
                            std::to_string(group));
  }
  return static_cast<std::size_t>(it - members.begin());
}

void PacketProgress::require(int ue, int segment_count) {
  required_segments[index_of(ue)] = segment_count;
}

void PacketProgress::record_decode(int ue, std::int64_t subframe) {
  const std::size_t i = index_of(ue);
  ++decoded_segments[i];
  last_decode[i] = std::max(last_decode[i], subframe);
}

void PacketProgress::record_transmission(std::int64_t subframe) {
  if (first_tx < 0) first_tx = subframe;
}

PacketDoneEvent delivery_report(const PacketProgress& p, std::int64_t now) {
  if (!p.complete()) {
    throw std::logic_error("delivery_report: packet " + std::to_string(p.group) + "/" +
                           std::to_string(p.seq) + " still has " +
                           std::to_string(p.processes - p.terminal_processes) +
                           " active HARQ processes");
  }
  PacketDoneEvent e;
  e.subframe = now;
  e.group = p.group;
  e.packet = p.seq;
  e.arrival = p.arrival;
  e.schedulable = p.schedulable;
  e.first_tx = p.first_tx;
  e.members = static_cast<int>(p.members.size());
  std::int64_t last = -1;
  for (std::size_t i = 0; i < p.members.size(); ++i) {
    if (p.decoded_segments[i] >= p.required_segments[i]) {
      ++e.delivered;
      last = std::max(last, p.last_decode[i]);
    }
  }
  e.full_delivery = e.delivered == e.members ? last : -1;
  e.prbs = p.prbs;
  e.initial_allocations = p.initial_allocations;
  e.retx_allocations = p.retx_allocations;
  e.retx_rounds = p.retx_rounds;
  e.failed_processes = p.failed_processes;
  return e;
}

}  // namespace gcsim::access
