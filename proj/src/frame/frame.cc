#include "gcsim/frame/frame.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gcsim::frame {

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kPdschUnicast: return "pdsch-unicast";
    case ChannelKind::kPmch: return "pmch";
    case ChannelKind::kScPtm: return "sc-ptm";
  }
  return "?";
}

std::string_view to_string(RntiKind kind) {
  switch (kind) {
    case RntiKind::kCRnti: return "c-rnti";
    case RntiKind::kGroupRnti: return "group-rnti";
    case RntiKind::kMbsfnArea: return "mbsfn-area";
  }
  return "?";
}

ChannelKind parse_channel_kind(std::string_view s) {
  if (s == "pdsch-unicast") return ChannelKind::kPdschUnicast;
  if (s == "pmch") return ChannelKind::kPmch;
  if (s == "sc-ptm") return ChannelKind::kScPtm;
  throw std::invalid_argument("unknown channel kind '" + std::string(s) + "'");
}

RntiKind parse_rnti_kind(std::string_view s) {
  if (s == "c-rnti") return RntiKind::kCRnti;
  if (s == "group-rnti") return RntiKind::kGroupRnti;
  if (s == "mbsfn-area") return RntiKind::kMbsfnArea;
  throw std::invalid_argument("unknown rnti kind '" + std::string(s) + "'");
}

bool is_mbsfn_capable(int sf) {
  return sf == 1 || sf == 2 || sf == 3 || sf == 6 || sf == 7 || sf == 8;
}

void FrameConfig::validate() const {
  if (total_prb < 1) throw std::invalid_argument("frame: total_prb must be >= 1");
  if (pdcch_symbols < 1 || pdcch_symbols > 3) {
    throw std::invalid_argument("frame: pdcch_symbols must be 1, 2 or 3");
  }
  if (symbols_per_subframe <= pdcch_symbols) {
    throw std::invalid_argument("frame: symbols_per_subframe must exceed pdcch_symbols");
  }
  if (all_mbsfn) return;
  std::vector<int> seen;
  for (int sf : mbsfn_subframes) {
    if (!is_mbsfn_capable(sf)) {
      throw std::invalid_argument("frame: subframe " + std::to_string(sf) +
                                  " cannot carry MBSFN in FDD (allowed 1,2,3,6,7,8)");
    }
    if (std::find(seen.begin(), seen.end(), sf) != seen.end()) {
      throw std::invalid_argument("frame: duplicate MBSFN subframe " + std::to_string(sf));
    }
    seen.push_back(sf);
  }
}

bool FrameConfig::is_mbsfn(std::int64_t subframe) const {
  if (all_mbsfn) return true;
  const int sf = static_cast<int>(subframe % kSubframesPerFrame);
  return std::find(mbsfn_subframes.begin(), mbsfn_subframes.end(), sf) != mbsfn_subframes.end();
}

int FrameConfig::mbsfn_per_frame() const {
  return all_mbsfn ? kSubframesPerFrame : static_cast<int>(mbsfn_subframes.size());
}

int FrameConfig::eligible_per_frame(ChannelKind kind) const {
  return kind == ChannelKind::kPmch ? mbsfn_per_frame() : kSubframesPerFrame - mbsfn_per_frame();
}

int FrameConfig::data_res_per_prb(ChannelKind kind) const {
  const int symbols = kind == ChannelKind::kPmch ? symbols_per_subframe
                                                 : symbols_per_subframe - pdcch_symbols;
  return kSubcarriersPerPrb * symbols;
}

int derive_total_prb(double bandwidth_mhz) {
  struct Row {
    double mhz;
    int prb;
  };
  static constexpr Row kRows[] = {{1.4, 6}, {3, 15}, {5, 25}, {10, 50}, {15, 75}, {20, 100}};
  for (const Row& r : kRows) {
    if (std::abs(bandwidth_mhz - r.mhz) < 1e-9) return r.prb;
  }
  throw std::invalid_argument("unsupported LTE bandwidth " + std::to_string(bandwidth_mhz) +
                              " MHz");
}

namespace {

double bits_per_prb(int mcs, ChannelKind kind, const FrameConfig& cfg,
                    const radio::McsTable& table) {
  const radio::McsEntry& e = table.at(mcs);
  return cfg.data_res_per_prb(kind) * e.modulation_bits * e.code_rate;
}

}  // namespace

int tbs_bits(int mcs, int n_prb, ChannelKind kind, const FrameConfig& cfg,
             const radio::McsTable& table) {
  if (n_prb < 1) throw std::invalid_argument("tbs_bits: n_prb must be >= 1");
  // The epsilon absorbs representation error for rates such as 2/3.
  return static_cast<int>(std::floor(n_prb * bits_per_prb(mcs, kind, cfg, table) + 1e-9));
}

int max_tbs_bits(int mcs, ChannelKind kind, const FrameConfig& cfg, const radio::McsTable& table) {
  return tbs_bits(mcs, cfg.total_prb, kind, cfg, table);
}

int prbs_needed(int payload_bits, int mcs, ChannelKind kind, const FrameConfig& cfg,
                const radio::McsTable& table) {
  if (payload_bits < 1) throw std::invalid_argument("prbs_needed: payload_bits must be >= 1");
  const double per_prb = bits_per_prb(mcs, kind, cfg, table);
  int n = std::max(1, static_cast<int>(std::ceil(payload_bits / per_prb)) - 1);
  while (tbs_bits(mcs, n, kind, cfg, table) < payload_bits) ++n;
  if (n > cfg.total_prb) {
    throw SegmentationRequired("payload of " + std::to_string(payload_bits) +
                               " bits exceeds the full-bandwidth TB at MCS " + std::to_string(mcs));
  }
  return n;
}

}  // namespace gcsim::frame
