#pragma once

#include <cstdint>
#include <memory>

#include "gcsim/access/context.h"
#include "gcsim/access/events.h"
#include "gcsim/access/traffic.h"
#include "gcsim/frame/ledger.h"

namespace gcsim::access {

// A dissemination method driven by the subframe loop. Per subframe the loop
// first hands over the packets arriving in it, then calls on_subframe, which
// processes HARQ feedback due now, sends retransmissions, and finally sends
// initial transmissions into whatever PRBs remain.
class Strategy {
 public:
  Strategy(const CellEnvironment& env, frame::ResourceLedger& ledger, std::uint64_t seed);
  virtual ~Strategy() = default;
  Strategy(const Strategy&) = delete;
  Strategy& operator=(const Strategy&) = delete;

  virtual StrategyKind kind() const = 0;
  virtual void on_arrival(const GroupPacket& packet) = 0;
  virtual void on_subframe(std::int64_t subframe) = 0;
  // Nothing queued and no packet outcome outstanding.
  virtual bool idle() const = 0;

  const EventLog& log() const { return log_; }
  EventLog take_log() { return std::move(log_); }

 protected:
  const CellEnvironment& env_;
  frame::ResourceLedger& ledger_;
  UeDraws draws_;
  harq::DrawSource draw_;
  EventLog log_;
};

// Throws frame::ChannelConfigError for PMCH when the frame has no MBSFN subframe.
std::unique_ptr<Strategy> make_strategy(StrategyKind kind, const CellEnvironment& env,
                                        frame::ResourceLedger& ledger, std::uint64_t seed);

// Splits a payload into the fewest equal-sized pieces that each fit one
// full-bandwidth TB at `mcs`.
std::vector<std::vector<std::uint8_t>> segment_payload(const std::vector<std::uint8_t>& payload,
                                                       int mcs, frame::ChannelKind kind,
                                                       const frame::FrameConfig& cfg,
                                                       const radio::McsTable& table);

}  // namespace gcsim::access
