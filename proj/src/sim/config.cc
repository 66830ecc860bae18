#include "gcsim/sim/config.h"

#include <cmath>
#include <functional>
#include <map>

#include "gcsim/sim/csv.h"

namespace gcsim::sim {

std::string_view to_string(FrameLayout layout) {
  return layout == FrameLayout::kShared ? "shared" : "dedicated";
}

namespace {

struct Field {
  std::string name;
  std::string doc;
  std::function<std::string(const SimConfig&)> get;
  std::function<void(SimConfig&, std::string_view)> set;
};

template <typename T>
Field number(std::string name, std::string doc, T SimConfig::*member) {
  return {std::move(name), std::move(doc),
          [member](const SimConfig& c) {
            if constexpr (std::is_floating_point_v<T>) {
              return format_double(c.*member);
            } else {
              return std::to_string(c.*member);
            }
          },
          [member](SimConfig& c, std::string_view v) {
            if constexpr (std::is_floating_point_v<T>) {
              c.*member = parse_double(v);
            } else {
              c.*member = static_cast<T>(parse_int(v));
            }
          }};
}

// Same as number() for members of a nested struct.
template <typename S, typename T>
Field nested(std::string name, std::string doc, S SimConfig::*outer, T S::*inner) {
  return {std::move(name), std::move(doc),
          [outer, inner](const SimConfig& c) {
            if constexpr (std::is_floating_point_v<T>) {
              return format_double(c.*outer.*inner);
            } else {
              return std::to_string(c.*outer.*inner);
            }
          },
          [outer, inner](SimConfig& c, std::string_view v) {
            if constexpr (std::is_floating_point_v<T>) {
              c.*outer.*inner = parse_double(v);
            } else {
              c.*outer.*inner = static_cast<T>(parse_int(v));
            }
          }};
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (int x : v) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

const std::vector<Field>& fields() {
  using G = SimConfig::Grid;
  using R = SimConfig::Radio;
  using F = SimConfig::Frame;
  static const std::vector<Field> table = {
      nested("grid.isd_m", "inter-site distance in metres", &SimConfig::grid, &G::isd_m),
      nested("grid.rings", "hexagon rings around the centre cell", &SimConfig::grid, &G::rings),
      nested("radio.tx_power_dbm", "eNodeB transmit power", &SimConfig::radio, &R::tx_power_dbm),
      nested("radio.antenna_gain_dbi", "eNodeB antenna gain", &SimConfig::radio,
             &R::antenna_gain_dbi),
      nested("radio.carrier_ghz", "carrier frequency", &SimConfig::radio, &R::carrier_ghz),
      nested("radio.bandwidth_mhz", "channel bandwidth", &SimConfig::radio, &R::bandwidth_mhz),
      nested("radio.noise_figure_db", "UE noise figure", &SimConfig::radio, &R::noise_figure_db),
      nested("radio.shadowing_std_db", "lognormal shadowing standard deviation",
             &SimConfig::radio, &R::shadowing_std_db),
      nested("radio.diversity_gain_db", "SINR offset for transmit diversity", &SimConfig::radio,
             &R::diversity_gain_db),
      nested("radio.bs_height_m", "eNodeB antenna height", &SimConfig::radio, &R::bs_height_m),
      nested("radio.ue_height_m", "UE antenna height", &SimConfig::radio, &R::ue_height_m),
      nested("radio.building_height_m", "average building height", &SimConfig::radio,
             &R::building_height_m),
      nested("radio.min_distance_m", "path loss distance clamp", &SimConfig::radio,
             &R::min_distance_m),
      {"radio.frozen_sinr_db", "fixed SINR for every link (empty: computed from geometry)",
       [](const SimConfig& c) {
         return c.radio.frozen_sinr_db ? format_double(*c.radio.frozen_sinr_db) : std::string();
       },
       [](SimConfig& c, std::string_view v) {
         if (trim(v).empty()) {
           c.radio.frozen_sinr_db.reset();
         } else {
           c.radio.frozen_sinr_db = parse_double(v);
         }
       }},
      nested("frame.total_prb", "PRBs per subframe (0: from bandwidth)", &SimConfig::frame,
             &F::total_prb),
      nested("frame.pdcch_symbols", "control symbols per PDSCH subframe", &SimConfig::frame,
             &F::pdcch_symbols),
      {"frame.mbsfn_subframes", "MBSFN subframe numbers per radio frame, comma separated",
       [](const SimConfig& c) { return join_ints(c.frame.mbsfn_subframes); },
       [](SimConfig& c, std::string_view v) {
         std::vector<int> out;
         if (!trim(v).empty()) {
           for (const auto& part : split(v, ',')) out.push_back(static_cast<int>(parse_int(part)));
         }
         c.frame.mbsfn_subframes = std::move(out);
       }},
      {"frame.layout", "shared | dedicated",
       [](const SimConfig& c) { return std::string(to_string(c.frame.layout)); },
       [](SimConfig& c, std::string_view v) {
         v = trim(v);
         if (v == "shared") {
           c.frame.layout = FrameLayout::kShared;
         } else if (v == "dedicated") {
           c.frame.layout = FrameLayout::kDedicated;
         } else {
           throw std::invalid_argument("expected shared or dedicated");
         }
       }},
      {"mcs.table", "bits:rate:threshold_db entries, comma separated",
       [](const SimConfig& c) { return c.mcs_table; },
       [](SimConfig& c, std::string_view v) {
         c.mcs_table = radio::McsTable::parse(trim(v)).to_string();
       }},
      number("bler.decade_db", "dB from BLER 10% to 1%", &SimConfig::bler_decade_db),
      number("link.target_bler", "single-shot BLER target of link adaptation",
             &SimConfig::target_bler),
      number("link.ignore_worst_fraction", "share of weakest members left out of MCS selection",
             &SimConfig::ignore_worst_fraction),
      number("harq.max_retx", "retransmissions per HARQ process", &SimConfig::max_retx),
      number("harq.feedback_delay", "subframes from transmission to usable feedback",
             &SimConfig::feedback_delay),
      number("ic.max_m", "most TBs XOR-combined into one retransmission", &SimConfig::ic_max_m),
      number("ic.hold_subframes", "wait for a coding partner before sending alone",
             &SimConfig::ic_hold_subframes),
      {"ic.tx_count_policy", "all | targeted: which components a coded round counts against",
       [](const SimConfig& c) { return c.ic_tx_count_policy; },
       [](SimConfig& c, std::string_view v) {
         v = trim(v);
         if (v != "all" && v != "targeted") throw std::invalid_argument("expected all or targeted");
         c.ic_tx_count_policy = std::string(v);
       }},
      number("pmch.mcs", "fixed PMCH MCS index", &SimConfig::pmch_mcs),
      number("pmch.mcch_period", "MCCH modification period in subframes",
             &SimConfig::mcch_period),
      {"traffic.payload_bytes", "voice packet size",
       [](const SimConfig& c) { return std::to_string(c.traffic.payload_bytes); },
       [](SimConfig& c, std::string_view v) {
         c.traffic.payload_bytes = static_cast<int>(parse_int(v));
       }},
      {"traffic.period_subframes", "voice inter-arrival time",
       [](const SimConfig& c) { return std::to_string(c.traffic.period_subframes); },
       [](SimConfig& c, std::string_view v) {
         c.traffic.period_subframes = static_cast<int>(parse_int(v));
       }},
      {"sim.strategy", "unicast-pdsch | pmch | sc-ptm | sc-ptm-ic",
       [](const SimConfig& c) { return std::string(access::to_string(c.strategy)); },
       [](SimConfig& c, std::string_view v) { c.strategy = access::parse_strategy(trim(v)); }},
      number("sim.group_size", "members per group", &SimConfig::group_size),
      number("sim.groups", "groups in the centre cell", &SimConfig::groups),
      number("sim.warmup", "subframes before measurement starts", &SimConfig::warmup),
      number("sim.horizon", "measured subframes", &SimConfig::horizon),
      {"sim.seed", "master seed",
       [](const SimConfig& c) { return std::to_string(c.seed); },
       [](SimConfig& c, std::string_view v) {
         const auto n = parse_int(v);
         if (n < 0) throw std::invalid_argument("seed must be >= 0");
         c.seed = static_cast<std::uint64_t>(n);
       }},
  };
  return table;
}

const Field* find_field(std::string_view key) {
  for (const Field& f : fields()) {
    if (f.name == key) return &f;
  }
  return nullptr;
}

std::string join(const std::vector<std::string>& v, std::string_view sep) {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const Field& f : fields()) out.push_back(f.name);
    return out;
  }();
  return keys;
}

std::string config_doc(std::string_view key) {
  const Field* f = find_field(key);
  if (f == nullptr) throw ConfigError({std::string(key)}, "unknown config key '" + std::string(key) + "'");
  return f->doc;
}

std::string get_value(const SimConfig& cfg, std::string_view key) {
  const Field* f = find_field(key);
  if (f == nullptr) throw ConfigError({std::string(key)}, "unknown config key '" + std::string(key) + "'");
  return f->get(cfg);
}

void set_value(SimConfig& cfg, std::string_view key, std::string_view value) {
  const Field* f = find_field(trim(key));
  if (f == nullptr) {
    throw ConfigError({std::string(trim(key))}, "unknown config key '" + std::string(trim(key)) + "'");
  }
  try {
    f->set(cfg, value);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError({f->name}, f->name + ": " + e.what());
  }
}

SimConfig parse_config(std::string_view text, SimConfig base) {
  std::vector<std::string> bad_keys;
  std::vector<std::string> messages;
  int line_no = 0;
  for (const std::string& raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = raw;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      bad_keys.push_back("line " + std::to_string(line_no));
      messages.push_back("line " + std::to_string(line_no) + ": expected 'key = value'");
      continue;
    }
    try {
      set_value(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const ConfigError& e) {
      bad_keys.insert(bad_keys.end(), e.keys().begin(), e.keys().end());
      messages.push_back("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!bad_keys.empty()) throw ConfigError(bad_keys, join(messages, "; "));
  return base;
}

SimConfig load_config(const std::filesystem::path& path, SimConfig base) {
  return parse_config(read_text_file(path), std::move(base));
}

std::string to_text(const SimConfig& cfg) {
  std::string out;
  for (const Field& f : fields()) {
    out += "# " + f.doc + "\n" + f.name + " = " + f.get(cfg) + "\n";
  }
  return out;
}

void validate(const SimConfig& cfg) {
  std::vector<std::string> keys;
  std::vector<std::string> messages;
  auto check = [&](bool ok, const char* key, const std::string& msg) {
    if (!ok) {
      keys.emplace_back(key);
      messages.push_back(std::string(key) + ": " + msg);
    }
  };
  auto finite = [](double v) { return std::isfinite(v); };

  check(cfg.grid.isd_m > 0 && finite(cfg.grid.isd_m), "grid.isd_m", "must be > 0");
  check(cfg.grid.rings >= 0 && cfg.grid.rings <= 10, "grid.rings", "must be in [0, 10]");
  check(finite(cfg.radio.tx_power_dbm), "radio.tx_power_dbm", "must be finite");
  check(finite(cfg.radio.antenna_gain_dbi), "radio.antenna_gain_dbi", "must be finite");
  check(cfg.radio.carrier_ghz > 0 && finite(cfg.radio.carrier_ghz), "radio.carrier_ghz",
        "must be > 0");
  check(cfg.radio.bandwidth_mhz > 0 && finite(cfg.radio.bandwidth_mhz), "radio.bandwidth_mhz",
        "must be > 0");
  check(cfg.radio.noise_figure_db >= 0 && finite(cfg.radio.noise_figure_db),
        "radio.noise_figure_db", "must be >= 0");
  check(cfg.radio.shadowing_std_db >= 0 && finite(cfg.radio.shadowing_std_db),
        "radio.shadowing_std_db", "must be >= 0");
  check(finite(cfg.radio.diversity_gain_db), "radio.diversity_gain_db", "must be finite");
  check(cfg.radio.bs_height_m > 0, "radio.bs_height_m", "must be > 0");
  check(cfg.radio.ue_height_m > 0, "radio.ue_height_m", "must be > 0");
  check(cfg.radio.building_height_m > 0, "radio.building_height_m", "must be > 0");
  check(cfg.radio.min_distance_m > 0, "radio.min_distance_m", "must be > 0");
  check(!cfg.radio.frozen_sinr_db || finite(*cfg.radio.frozen_sinr_db), "radio.frozen_sinr_db",
        "must be finite");

  if (cfg.frame.total_prb == 0) {
    bool derivable = true;
    try {
      frame::derive_total_prb(cfg.radio.bandwidth_mhz);
    } catch (const std::exception&) {
      derivable = false;
    }
    check(derivable, "radio.bandwidth_mhz",
          "no standard PRB count for this bandwidth; set frame.total_prb");
  } else {
    check(cfg.frame.total_prb > 0, "frame.total_prb", "must be >= 0");
  }
  check(cfg.frame.pdcch_symbols >= 1 && cfg.frame.pdcch_symbols <= 3, "frame.pdcch_symbols",
        "must be 1, 2 or 3");
  {
    frame::FrameConfig fc;
    fc.mbsfn_subframes = cfg.frame.mbsfn_subframes;
    bool ok = true;
    try {
      fc.validate();
    } catch (const std::exception&) {
      ok = false;
    }
    check(ok, "frame.mbsfn_subframes", "entries must be distinct and among 1,2,3,6,7,8");
  }

  std::optional<radio::McsTable> table;
  try {
    table = radio::McsTable::parse(cfg.mcs_table);
  } catch (const std::exception& e) {
    check(false, "mcs.table", e.what());
  }
  check(cfg.bler_decade_db > 0 && finite(cfg.bler_decade_db), "bler.decade_db", "must be > 0");
  check(cfg.target_bler > 0 && cfg.target_bler < 1, "link.target_bler", "must be in (0, 1)");
  check(cfg.ignore_worst_fraction >= 0 && cfg.ignore_worst_fraction < 1,
        "link.ignore_worst_fraction", "must be in [0, 1)");
  check(cfg.max_retx >= 0, "harq.max_retx", "must be >= 0");
  check(cfg.feedback_delay >= 1, "harq.feedback_delay", "must be >= 1");
  check(cfg.ic_max_m >= 1, "ic.max_m", "must be >= 1");
  check(cfg.ic_hold_subframes >= 0, "ic.hold_subframes", "must be >= 0");
  check(!table || table->contains(cfg.pmch_mcs), "pmch.mcs", "must index the MCS table");
  check(cfg.mcch_period >= 1, "pmch.mcch_period", "must be >= 1");
  check(cfg.traffic.payload_bytes >= 1, "traffic.payload_bytes", "must be >= 1");
  check(cfg.traffic.period_subframes >= 1, "traffic.period_subframes", "must be >= 1");
  check(cfg.group_size >= 1, "sim.group_size", "must be >= 1");
  check(cfg.groups >= 0, "sim.groups", "must be >= 0");
  check(cfg.warmup >= 0, "sim.warmup", "must be >= 0");
  check(cfg.horizon >= 1, "sim.horizon", "must be >= 1");

  if (!keys.empty()) throw ConfigError(keys, "invalid config: " + join(messages, "; "));
}

int total_prb(const SimConfig& cfg) {
  return cfg.frame.total_prb > 0 ? cfg.frame.total_prb
                                 : frame::derive_total_prb(cfg.radio.bandwidth_mhz);
}

radio::McsTable mcs_table(const SimConfig& cfg) { return radio::McsTable::parse(cfg.mcs_table); }

radio::LinkBudget link_budget(const SimConfig& cfg) {
  radio::LinkBudget b;
  b.tx_power_dbm = cfg.radio.tx_power_dbm;
  b.antenna_gain_dbi = cfg.radio.antenna_gain_dbi;
  b.carrier_ghz = cfg.radio.carrier_ghz;
  // Noise over the occupied PRBs (180 kHz each).
  b.noise_dbm = radio::thermal_noise_dbm(total_prb(cfg) * 180e3, cfg.radio.noise_figure_db);
  b.diversity_gain_db = cfg.radio.diversity_gain_db;
  b.rma.bs_height_m = cfg.radio.bs_height_m;
  b.rma.ue_height_m = cfg.radio.ue_height_m;
  b.rma.building_height_m = cfg.radio.building_height_m;
  b.rma.min_distance_m = cfg.radio.min_distance_m;
  return b;
}

access::AccessConfig access_config(const SimConfig& cfg) {
  access::AccessConfig a;
  a.target_bler = cfg.target_bler;
  a.ignore_worst_fraction = cfg.ignore_worst_fraction;
  a.max_retx = cfg.max_retx;
  a.feedback_delay = cfg.feedback_delay;
  a.ic_max_m = cfg.ic_max_m;
  a.ic_hold_subframes = cfg.ic_hold_subframes;
  a.pmch_mcs = cfg.pmch_mcs;
  a.mcch_period = cfg.mcch_period;
  a.traffic = cfg.traffic;
  return a;
}

frame::ChannelKind channel_of(access::StrategyKind kind) {
  switch (kind) {
    case access::StrategyKind::kUnicastPdsch: return frame::ChannelKind::kPdschUnicast;
    case access::StrategyKind::kPmch: return frame::ChannelKind::kPmch;
    case access::StrategyKind::kScPtm:
    case access::StrategyKind::kScPtmIc: return frame::ChannelKind::kScPtm;
  }
  return frame::ChannelKind::kScPtm;
}

frame::FrameConfig frame_config(const SimConfig& cfg, access::StrategyKind kind) {
  frame::FrameConfig fc;
  fc.total_prb = total_prb(cfg);
  fc.pdcch_symbols = cfg.frame.pdcch_symbols;
  if (cfg.frame.layout == FrameLayout::kShared) {
    fc.mbsfn_subframes = cfg.frame.mbsfn_subframes;
  } else if (kind == access::StrategyKind::kPmch) {
    fc.all_mbsfn = true;
  } else {
    fc.mbsfn_subframes.clear();
  }
  fc.validate();
  return fc;
}

}  // namespace gcsim::sim
