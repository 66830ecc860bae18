#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gcsim/harq/harq.h"

namespace gcsim::coding {

// XOR of several TBs of one group. Shorter components are zero-padded; the
// per-component lengths travel along so a decoder can truncate.
struct CodedTb {
  int group = 0;
  std::vector<std::uint8_t> bytes;
  std::vector<int> component_ids;
  std::vector<int> component_lengths;
};

CodedTb xor_encode(std::span<const harq::TransportBlock> components);

// Recovers the single component missing from `side_info`.
harq::TransportBlock xor_decode(const CodedTb& coded,
                                std::span<const harq::TransportBlock> side_info);

}  // namespace gcsim::coding
