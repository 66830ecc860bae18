#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gcsim/radio/link.h"
#include "gcsim/rng.h"

namespace gcsim::harq {

// The unit of one HARQ transmission.
struct TransportBlock {
  int id = 0;
  int group = 0;
  std::vector<std::uint8_t> payload;

  int size_bits() const { return static_cast<int>(payload.size()) * 8; }
  int size_bytes() const { return static_cast<int>(payload.size()); }
};

TransportBlock make_tb(int id, int group, std::vector<std::uint8_t> payload);

enum class ProcessStatus { kActive, kDone, kFailed };

std::string_view to_string(ProcessStatus s);

struct UeFeedback {
  int ue = 0;
  bool ack = false;
};

using LinkMap = std::unordered_map<int, radio::LinkQuality>;
// Uniform [0,1) draw for one UE's decode attempt.
using DrawSource = std::function<double(int ue)>;

inline constexpr int kDefaultMaxRetx = 3;

// One HARQ process of a multicast (or unicast) transmission.
//
// nack_set holds the targets that have not decoded yet, sorted ascending.
// Chase combining accumulates each round's linear SINR per UE.
class HarqProcess {
 public:
  int id() const { return id_; }
  int group() const { return tb_.group; }
  const TransportBlock& tb() const { return tb_; }
  int mcs() const { return mcs_; }
  int tx_count() const { return tx_count_; }
  int max_retx() const { return max_retx_; }
  std::int64_t birth() const { return birth_; }
  ProcessStatus status() const { return status_; }
  const std::vector<int>& targets() const { return targets_; }
  const std::vector<int>& nack_set() const { return nack_set_; }
  bool in_nack_set(int ue) const;
  // Accumulated linear SINR for a target UE, 0 before the first round.
  double accumulated_sinr(int ue) const;

 private:
  friend HarqProcess start_process(int, TransportBlock, int, std::span<const int>, int,
                                   std::int64_t);
  friend std::vector<UeFeedback> transmit_round(HarqProcess&, const LinkMap&, const DrawSource&,
                                                const radio::McsTable&, const radio::BlerCurve&,
                                                std::optional<int>);

  int id_ = 0;
  TransportBlock tb_;
  int mcs_ = 0;
  int tx_count_ = 0;
  int max_retx_ = kDefaultMaxRetx;
  std::int64_t birth_ = 0;
  ProcessStatus status_ = ProcessStatus::kActive;
  std::vector<int> targets_;
  std::vector<int> nack_set_;
  std::vector<double> acc_sinr_;  // parallel to targets_
};

// Duplicate target ids collapse. Throws on an empty target set.
HarqProcess start_process(int id, TransportBlock tb, int mcs, std::span<const int> targets,
                          int max_retx = kDefaultMaxRetx, std::int64_t birth = 0);

// One (re)transmission of the process. Every UE still in the NACK set adds
// this round's SINR to its accumulator and decodes with probability
// 1 - BLER(mcs, accumulated SINR). `mcs_override` evaluates the round at a
// different MCS (index-coded retransmissions). Returns feedback for the UEs
// that were in the NACK set before the round.
std::vector<UeFeedback> transmit_round(HarqProcess& proc, const LinkMap& links,
                                       const DrawSource& draw, const radio::McsTable& table,
                                       const radio::BlerCurve& curve,
                                       std::optional<int> mcs_override = std::nullopt);

std::vector<UeFeedback> transmit_round(HarqProcess& proc, const LinkMap& links, Rng& rng,
                                       const radio::McsTable& table,
                                       const radio::BlerCurve& curve,
                                       std::optional<int> mcs_override = std::nullopt);

bool needs_retransmission(const HarqProcess& proc);

}  // namespace gcsim::harq
