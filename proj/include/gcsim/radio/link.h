#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcsim/radio/geometry.h"
#include "gcsim/radio/propagation.h"

namespace gcsim::radio {

enum class ReceptionMode { kUnicast, kMbsfn };

std::string_view to_string(ReceptionMode mode);

// Effective SINR of one UE for one reception mode. Always positive.
class LinkQuality {
 public:
  LinkQuality(double sinr_linear, ReceptionMode mode);
  static LinkQuality from_db(double sinr_db, ReceptionMode mode);

  double sinr_linear() const { return sinr_linear_; }
  double sinr_db() const { return sinr_db_; }
  ReceptionMode mode() const { return mode_; }

 private:
  double sinr_linear_;
  double sinr_db_;
  ReceptionMode mode_;
};

struct LinkBudget {
  double tx_power_dbm = 46.0;
  double antenna_gain_dbi = 15.0;
  double carrier_ghz = 0.8;
  double noise_dbm = -97.5;
  // Fixed SINR gain standing in for 2x2 transmit diversity.
  double diversity_gain_db = 3.0;
  RmaParams rma;
};

// Signal = sum of received powers from `serving`; interference = every other
// cell of the grid (full load). Unicast mode needs exactly one serving cell.
LinkQuality sinr(int ue, std::span<const int> serving, const CellGrid& grid, const UeDrop& drop,
                 const LinkBudget& budget, ReceptionMode mode);

struct McsEntry {
  int index = 0;
  int modulation_bits = 2;
  double code_rate = 0.5;
  // SINR at which one transmission sees BLER = 0.10.
  double sinr_threshold_db = 0.0;

  double efficiency() const { return modulation_bits * code_rate; }
};

// Ordered MCS table. Efficiency and threshold are strictly increasing in the
// index; construction rejects anything else.
class McsTable {
 public:
  explicit McsTable(std::vector<McsEntry> entries);

  // QPSK 1/8 .. 64QAM 3/4, eight entries.
  static McsTable default_table();
  // "bits:rate:threshold, ..." with indices assigned in order.
  static McsTable parse(std::string_view text);
  std::string to_string() const;

  const McsEntry& at(int index) const;
  bool contains(int index) const { return index >= 0 && index < size(); }
  int size() const { return static_cast<int>(entries_.size()); }
  int lowest() const { return 0; }
  int highest() const { return size() - 1; }
  const std::vector<McsEntry>& entries() const { return entries_; }

 private:
  std::vector<McsEntry> entries_;
};

// Shifted logistic in dB: BLER(s) = 1 / (1 + exp(k (s - s_thr - c))).
// k and c are pinned so that BLER is 0.10 at s_thr and 0.01 at
// s_thr + decade_db.
class BlerCurve {
 public:
  explicit BlerCurve(double decade_db = 2.0);

  double slope_per_db() const { return slope_; }
  double offset_db() const { return offset_; }
  double decade_db() const { return decade_db_; }

  double error_probability(double sinr_db, double threshold_db) const;
  // 1 - error probability, computed without cancellation.
  double success_probability(double sinr_db, double threshold_db) const;

 private:
  double decade_db_;
  double slope_;
  double offset_;
};

double bler(int mcs, double eff_sinr_db, const McsTable& table, const BlerCurve& curve = BlerCurve());

struct McsChoice {
  int mcs = 0;
  bool feasible = true;
};

// Highest MCS whose single-transmission BLER at the worst considered link is
// at most target_bler. When ignore_worst_fraction > 0 the floor(fraction * n)
// weakest links are left out (at least one link always remains). Falls back
// to the lowest index with feasible = false.
McsChoice select_mcs(std::span<const LinkQuality> links, const McsTable& table, double target_bler,
                     const BlerCurve& curve = BlerCurve(), double ignore_worst_fraction = 0.0);

}  // namespace gcsim::radio
