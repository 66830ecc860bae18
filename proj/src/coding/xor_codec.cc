#include "gcsim/coding/xor_codec.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gcsim::coding {

namespace {

void xor_into(std::vector<std::uint8_t>& acc, const std::vector<std::uint8_t>& src) {
  for (std::size_t i = 0; i < src.size(); ++i) acc[i] ^= src[i];
}

}  // namespace

CodedTb xor_encode(std::span<const harq::TransportBlock> components) {
  if (components.empty()) throw std::invalid_argument("xor_encode: no components");
  CodedTb coded;
  coded.group = components.front().group;
  std::size_t length = 0;
  for (const auto& tb : components) {
    if (tb.group != coded.group) {
      throw std::invalid_argument("xor_encode: components from different groups");
    }
    if (std::find(coded.component_ids.begin(), coded.component_ids.end(), tb.id) !=
        coded.component_ids.end()) {
      throw std::invalid_argument("xor_encode: duplicate component id " + std::to_string(tb.id));
    }
    coded.component_ids.push_back(tb.id);
    coded.component_lengths.push_back(tb.size_bytes());
    length = std::max(length, tb.payload.size());
  }
  coded.bytes.assign(length, 0);
  for (const auto& tb : components) xor_into(coded.bytes, tb.payload);
  return coded;
}

harq::TransportBlock xor_decode(const CodedTb& coded,
                                std::span<const harq::TransportBlock> side_info) {
  std::vector<bool> have(coded.component_ids.size(), false);
  for (const auto& tb : side_info) {
    auto it = std::find(coded.component_ids.begin(), coded.component_ids.end(), tb.id);
    if (it == coded.component_ids.end()) {
      throw std::invalid_argument("xor_decode: TB " + std::to_string(tb.id) +
                                  " is not a component");
    }
    const auto idx = static_cast<std::size_t>(it - coded.component_ids.begin());
    if (have[idx]) throw std::invalid_argument("xor_decode: TB " + std::to_string(tb.id) + " given twice");
    have[idx] = true;
  }
  const auto missing = static_cast<std::size_t>(std::count(have.begin(), have.end(), false));
  if (missing != 1) {
    throw std::invalid_argument("xor_decode: side information must cover all but one component (" +
                                std::to_string(missing) + " missing)");
  }
  const auto idx = static_cast<std::size_t>(std::find(have.begin(), have.end(), false) - have.begin());
  std::vector<std::uint8_t> out = coded.bytes;
  for (const auto& tb : side_info) xor_into(out, tb.payload);
  out.resize(static_cast<std::size_t>(coded.component_lengths[idx]));
  return harq::TransportBlock{coded.component_ids[idx], coded.group, std::move(out)};
}

}  // namespace gcsim::coding
