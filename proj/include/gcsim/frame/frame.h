#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "gcsim/radio/link.h"

namespace gcsim::frame {

enum class ChannelKind { kPdschUnicast, kPmch, kScPtm };
enum class RntiKind { kCRnti, kGroupRnti, kMbsfnArea };

std::string_view to_string(ChannelKind kind);
std::string_view to_string(RntiKind kind);
ChannelKind parse_channel_kind(std::string_view s);
RntiKind parse_rnti_kind(std::string_view s);

inline bool is_pdsch_family(ChannelKind kind) { return kind != ChannelKind::kPmch; }

inline constexpr int kSubframesPerFrame = 10;
inline constexpr int kSubcarriersPerPrb = 12;

// FDD subframes that may carry MBSFN: 1, 2, 3, 6, 7, 8.
bool is_mbsfn_capable(int subframe_in_frame);

struct FrameConfig {
  int total_prb = 50;
  int pdcch_symbols = 2;
  int symbols_per_subframe = 14;
  // Subframe numbers (0..9) carrying PMCH in every radio frame.
  std::vector<int> mbsfn_subframes = {1, 6};
  // Every subframe is PMCH. Goes beyond the FDD MBSFN limit; used to model a
  // dedicated multicast carrier.
  bool all_mbsfn = false;

  void validate() const;  // throws std::invalid_argument
  bool is_mbsfn(std::int64_t subframe) const;
  int mbsfn_per_frame() const;
  // Subframes per radio frame in which `kind` may be scheduled.
  int eligible_per_frame(ChannelKind kind) const;
  int data_res_per_prb(ChannelKind kind) const;
};

// Standard LTE channel bandwidth to PRB mapping:
// 1.4 -> 6, 3 -> 15, 5 -> 25, 10 -> 50, 15 -> 75, 20 -> 100.
int derive_total_prb(double bandwidth_mhz);

// floor(n_prb * data_res_per_prb * modulation_bits * code_rate).
int tbs_bits(int mcs, int n_prb, ChannelKind kind, const FrameConfig& cfg,
             const radio::McsTable& table);

// Thrown when a payload does not fit into a full-bandwidth transport block.
class SegmentationRequired : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Smallest n_prb with tbs_bits(mcs, n_prb) >= payload_bits.
int prbs_needed(int payload_bits, int mcs, ChannelKind kind, const FrameConfig& cfg,
                const radio::McsTable& table);

// Largest TB a single full-bandwidth allocation can carry.
int max_tbs_bits(int mcs, ChannelKind kind, const FrameConfig& cfg, const radio::McsTable& table);

}  // namespace gcsim::frame
