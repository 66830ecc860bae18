#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gcsim/rng.h"

namespace gcsim::access {

enum class StrategyKind { kUnicastPdsch, kPmch, kScPtm, kScPtmIc };

inline constexpr StrategyKind kAllStrategies[] = {StrategyKind::kUnicastPdsch, StrategyKind::kPmch,
                                                  StrategyKind::kScPtm, StrategyKind::kScPtmIc};

std::string_view to_string(StrategyKind kind);
StrategyKind parse_strategy(std::string_view name);

// A multicast session in the serving cell (TMGI ~ group id).
struct GroupSession {
  int group = 0;
  std::uint32_t group_rnti = 0;
  std::vector<int> members;
  int serving_cell = 0;
};

// Group RNTIs sit at the top of the RNTI space, one per group id.
std::uint32_t group_rnti_for(int group);

struct GroupPacket {
  int group = 0;
  int seq = 0;
  std::int64_t arrival = 0;
  std::vector<std::uint8_t> payload;
};

struct TrafficConfig {
  int payload_bytes = 40;
  int period_subframes = 20;
};

// Arrival phase of a group's talk-spurt: group id modulo the period.
int arrival_phase(int group, const TrafficConfig& cfg);

// One fixed-size packet per period for arrivals in [0, horizon). Payload
// bytes come from the ("traffic.payload", group) substream.
std::vector<GroupPacket> gen_voice_traffic(const GroupSession& session, std::int64_t horizon,
                                           const TrafficConfig& cfg, const RngFactory& rngs);

}  // namespace gcsim::access
