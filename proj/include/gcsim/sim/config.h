#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gcsim/access/context.h"
#include "gcsim/access/traffic.h"
#include "gcsim/frame/frame.h"
#include "gcsim/radio/link.h"

namespace gcsim::sim {

// shared: PMCH and PDSCH split one carrier by the MBSFN subframe pattern.
// dedicated: each method owns the whole carrier (PMCH in every subframe,
// PDSCH-family methods with no MBSFN subframes).
enum class FrameLayout { kShared, kDedicated };

std::string_view to_string(FrameLayout layout);

struct SimConfig {
  struct Grid {
    double isd_m = 1732.0;
    int rings = 2;
  } grid;

  struct Radio {
    double tx_power_dbm = 46.0;
    double antenna_gain_dbi = 15.0;
    double carrier_ghz = 0.8;
    double bandwidth_mhz = 10.0;
    double noise_figure_db = 7.0;
    double shadowing_std_db = radio::kDefaultShadowingStdDb;
    double diversity_gain_db = 3.0;
    double bs_height_m = 35.0;
    double ue_height_m = 1.5;
    double building_height_m = 5.0;
    double min_distance_m = 35.0;
    // Every link gets this SINR in both reception modes when set.
    std::optional<double> frozen_sinr_db;
  } radio;

  struct Frame {
    int total_prb = 0;  // 0: derived from radio.bandwidth_mhz
    int pdcch_symbols = 2;
    std::vector<int> mbsfn_subframes = {1, 6};
    FrameLayout layout = FrameLayout::kShared;
  } frame;

  std::string mcs_table = radio::McsTable::default_table().to_string();
  double bler_decade_db = 2.0;

  double target_bler = 0.01;
  double ignore_worst_fraction = 0.0;

  int max_retx = 3;
  int feedback_delay = 4;

  int ic_max_m = 4;
  int ic_hold_subframes = 0;
  std::string ic_tx_count_policy = "all";

  int pmch_mcs = 0;
  int mcch_period = 512;

  access::TrafficConfig traffic;

  access::StrategyKind strategy = access::StrategyKind::kScPtm;
  int group_size = 8;
  int groups = 1;
  std::int64_t warmup = 2000;
  std::int64_t horizon = 20000;
  std::uint64_t seed = 1;
};

// Configuration problem; keys() names every offending key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::vector<std::string> keys, const std::string& what)
      : std::invalid_argument(what), keys_(std::move(keys)) {}
  const std::vector<std::string>& keys() const { return keys_; }

 private:
  std::vector<std::string> keys_;
};

// Dotted key names in documentation order.
const std::vector<std::string>& config_keys();
std::string config_doc(std::string_view key);

std::string get_value(const SimConfig& cfg, std::string_view key);
// Throws ConfigError for unknown keys and unparsable values.
void set_value(SimConfig& cfg, std::string_view key, std::string_view value);

// "key = value" lines with '#' comments. Every bad line is reported at once.
SimConfig parse_config(std::string_view text, SimConfig base = {});
SimConfig load_config(const std::filesystem::path& path, SimConfig base = {});
// The effective configuration in the same format, every key present.
std::string to_text(const SimConfig& cfg);

// Throws ConfigError listing all offending keys.
void validate(const SimConfig& cfg);

int total_prb(const SimConfig& cfg);
radio::McsTable mcs_table(const SimConfig& cfg);
radio::LinkBudget link_budget(const SimConfig& cfg);
access::AccessConfig access_config(const SimConfig& cfg);
// Frame used by a run of `kind`; the layout decides the MBSFN pattern.
frame::FrameConfig frame_config(const SimConfig& cfg, access::StrategyKind kind);
frame::ChannelKind channel_of(access::StrategyKind kind);

}  // namespace gcsim::sim
