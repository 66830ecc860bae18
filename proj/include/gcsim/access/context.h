#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "gcsim/access/traffic.h"
#include "gcsim/frame/frame.h"
#include "gcsim/harq/harq.h"
#include "gcsim/radio/link.h"
#include "gcsim/rng.h"

namespace gcsim::access {

struct AccessConfig {
  double target_bler = 0.01;
  double ignore_worst_fraction = 0.0;
  int max_retx = harq::kDefaultMaxRetx;
  int feedback_delay = 4;
  int ic_max_m = 4;
  // A pending retransmission that found no coding partner may wait this
  // many subframes for one before going out alone.
  int ic_hold_subframes = 0;
  int pmch_mcs = 0;
  int mcch_period = 512;
  TrafficConfig traffic;
};

// Everything a scheduler needs to know about the cell; immutable during a run.
struct CellEnvironment {
  frame::FrameConfig frame;
  radio::McsTable mcs_table = radio::McsTable::default_table();
  radio::BlerCurve bler;
  AccessConfig access;
  std::vector<GroupSession> sessions;
  harq::LinkMap unicast_links;
  harq::LinkMap mbsfn_links;

  const GroupSession& session(int group) const;
};

// Lazily created per-UE decode streams ("harq.decode", ue).
class UeDraws {
 public:
  explicit UeDraws(std::uint64_t seed) : rngs_(seed) {}
  double operator()(int ue);
  harq::DrawSource source() {
    return [this](int ue) { return (*this)(ue); };
  }

 private:
  RngFactory rngs_;
  std::unordered_map<int, Rng> streams_;
};

}  // namespace gcsim::access
