#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <vector>

#include "gcsim/frame/frame.h"

namespace gcsim::frame {

struct Allocation {
  int id = 0;
  std::int64_t subframe = 0;
  int prb_count = 0;
  ChannelKind channel = ChannelKind::kPdschUnicast;
  RntiKind rnti_kind = RntiKind::kCRnti;
  int group = -1;
};

struct HarqInfo {
  int process_id = 0;
  bool new_data = true;
  int tb_id = 0;
};

// One downlink control message. More than one HARQ info only for
// index-coded retransmissions.
struct DciRecord {
  std::int64_t subframe = 0;
  std::uint32_t rnti = 0;
  int allocation_id = 0;
  std::vector<HarqInfo> harq_infos;

  std::size_t m() const { return harq_infos.size(); }
};

// Not enough PRBs left in the subframe; the caller retries later.
class ShortageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The channel kind may not be scheduled in that subframe.
class ChannelConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Per-subframe PRB accounting plus the control (DCI) log.
//
// Allocations must respect the PMCH/PDSCH time split: PMCH only in MBSFN
// subframes, PDSCH-family channels only outside them. Per subframe,
// allocated + remaining == total_prb always.
class ResourceLedger {
 public:
  struct Counter {
    std::int64_t allocations = 0;
    std::int64_t prbs = 0;
  };

  explicit ResourceLedger(FrameConfig cfg, bool keep_history = true);

  const FrameConfig& frame() const { return cfg_; }

  bool can_schedule(std::int64_t subframe, ChannelKind kind) const;
  bool fits(std::int64_t subframe, int prb_count) const { return remaining(subframe) >= prb_count; }

  Allocation allocate(std::int64_t subframe, int prb_count, ChannelKind kind, RntiKind rnti_kind,
                      int group = -1);

  DciRecord emit_dci(const Allocation& alloc, std::uint32_t rnti,
                            std::vector<HarqInfo> harq_infos);

  int remaining(std::int64_t subframe) const;
  int allocated(std::int64_t subframe) const;
  int allocated(std::int64_t subframe, ChannelKind kind) const;

  Counter cumulative(ChannelKind kind, int group) const;
  Counter cumulative_total() const { return total_; }
  std::int64_t dci_count() const { return dci_total_; }
  int allocation_count() const { return next_id_; }
  // Allocations that have not received their DCI.
  std::vector<int> allocations_without_dci() const;

  // Empty unless constructed with keep_history.
  const std::vector<Allocation>& allocations() const { return allocations_; }
  const std::vector<DciRecord>& control_log() const { return control_log_; }

  // Columns: subframe,kind,prbs,rnti_kind,group
  void export_csv(const std::filesystem::path& path) const;

 private:
  struct Usage {
    int by_kind[3] = {0, 0, 0};
    int total() const { return by_kind[0] + by_kind[1] + by_kind[2]; }
  };

  FrameConfig cfg_;
  bool keep_history_;
  std::map<std::int64_t, Usage> usage_;
  std::map<std::pair<int, int>, Counter> counters_;
  Counter total_;
  std::vector<Allocation> allocations_;
  std::vector<DciRecord> control_log_;
  std::vector<std::uint8_t> has_dci_;
  std::int64_t dci_total_ = 0;
  int next_id_ = 0;
};

}  // namespace gcsim::frame
