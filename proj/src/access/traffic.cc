#include "gcsim/access/traffic.h"

#include <stdexcept>
#include <string>

namespace gcsim::access {

std::string_view to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kUnicastPdsch: return "unicast-pdsch";
    case StrategyKind::kPmch: return "pmch";
    case StrategyKind::kScPtm: return "sc-ptm";
    case StrategyKind::kScPtmIc: return "sc-ptm-ic";
  }
  return "?";
}

StrategyKind parse_strategy(std::string_view name) {
  for (StrategyKind k : kAllStrategies) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown strategy '" + std::string(name) +
                              "' (expected unicast-pdsch, pmch, sc-ptm, sc-ptm-ic)");
}

std::uint32_t group_rnti_for(int group) { return 0xF000u + static_cast<std::uint32_t>(group); }

int arrival_phase(int group, const TrafficConfig& cfg) { return group % cfg.period_subframes; }

std::vector<GroupPacket> gen_voice_traffic(const GroupSession& session, std::int64_t horizon,
                                           const TrafficConfig& cfg, const RngFactory& rngs) {
  if (horizon < 1) throw std::invalid_argument("gen_voice_traffic: horizon must be >= 1");
  if (cfg.period_subframes < 1 || cfg.payload_bytes < 1) {
    throw std::invalid_argument("gen_voice_traffic: period and payload must be >= 1");
  }
  Rng rng = rngs.stream("traffic.payload", static_cast<std::uint64_t>(session.group));
  std::vector<GroupPacket> packets;
  int seq = 0;
  for (std::int64_t t = arrival_phase(session.group, cfg); t < horizon; t += cfg.period_subframes) {
    GroupPacket p{session.group, seq++, t, std::vector<std::uint8_t>(
                                               static_cast<std::size_t>(cfg.payload_bytes))};
    for (auto& b : p.payload) b = static_cast<std::uint8_t>(rng() & 0xFF);
    packets.push_back(std::move(p));
  }
  return packets;
}

}  // namespace gcsim::access
