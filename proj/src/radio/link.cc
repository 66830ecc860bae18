#include "gcsim/radio/link.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gcsim::radio {

std::string_view to_string(ReceptionMode mode) {
  return mode == ReceptionMode::kUnicast ? "unicast" : "mbsfn";
}

LinkQuality::LinkQuality(double sinr_linear, ReceptionMode mode)
    : sinr_linear_(sinr_linear), sinr_db_(linear_to_db(sinr_linear)), mode_(mode) {
  if (!(sinr_linear > 0.0) || !std::isfinite(sinr_linear)) {
    throw std::invalid_argument("LinkQuality: SINR must be positive and finite");
  }
}

LinkQuality LinkQuality::from_db(double sinr_db, ReceptionMode mode) {
  return LinkQuality(db_to_linear(sinr_db), mode);
}

LinkQuality sinr(int ue, std::span<const int> serving, const CellGrid& grid, const UeDrop& drop,
                 const LinkBudget& budget, ReceptionMode mode) {
  if (serving.empty()) throw std::invalid_argument("sinr: serving set is empty");
  if (mode == ReceptionMode::kUnicast && serving.size() != 1) {
    throw std::invalid_argument("sinr: unicast reception needs exactly one serving cell");
  }
  const Ue& u = drop.ue(ue);
  std::vector<bool> is_serving(grid.size(), false);
  for (int c : serving) is_serving.at(static_cast<std::size_t>(c)) = true;

  double signal_mw = 0.0;
  double interference_mw = 0.0;
  for (const CellSite& site : grid.cells) {
    const double pl = path_loss_db(distance(u.position, site.position), budget.carrier_ghz, budget.rma);
    const double rx = rx_power_dbm(budget.tx_power_dbm, budget.antenna_gain_dbi, pl,
                                   drop.shadow_db(ue, site.id));
    const double mw = db_to_linear(rx);
    if (is_serving[static_cast<std::size_t>(site.id)]) {
      signal_mw += mw;
    } else {
      interference_mw += mw;
    }
  }
  const double ratio = signal_mw / (interference_mw + db_to_linear(budget.noise_dbm));
  return LinkQuality(ratio * db_to_linear(budget.diversity_gain_db), mode);
}

McsTable::McsTable(std::vector<McsEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("McsTable: empty table");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    McsEntry& e = entries_[i];
    e.index = static_cast<int>(i);
    if (e.modulation_bits <= 0 || !(e.code_rate > 0.0 && e.code_rate <= 1.0)) {
      throw std::invalid_argument("McsTable: entry " + std::to_string(i) +
                                  " needs modulation_bits > 0 and code rate in (0,1]");
    }
    if (i > 0) {
      const McsEntry& prev = entries_[i - 1];
      if (!(e.efficiency() > prev.efficiency()) || !(e.sinr_threshold_db > prev.sinr_threshold_db)) {
        throw std::invalid_argument("McsTable: entry " + std::to_string(i) +
                                    " must strictly increase efficiency and threshold");
      }
    }
  }
}

McsTable McsTable::default_table() {
  return McsTable({
      {0, 2, 0.125, -5.0},
      {1, 2, 0.25, -2.5},
      {2, 2, 0.5, 1.5},
      {3, 2, 0.75, 4.5},
      {4, 4, 0.5, 7.0},
      {5, 4, 0.75, 11.0},
      {6, 6, 0.625, 13.5},
      {7, 6, 0.75, 16.0},
  });
}

namespace {

double parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("McsTable: bad number '" + std::string(s) + "'");
  }
  return v;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

McsTable McsTable::parse(std::string_view text) {
  std::vector<McsEntry> entries;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto c1 = item.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : item.find(':', c1 + 1);
    if (c2 == std::string_view::npos) {
      throw std::invalid_argument("McsTable: expected bits:rate:threshold, got '" +
                                  std::string(item) + "'");
    }
    McsEntry e;
    e.index = static_cast<int>(entries.size());
    e.modulation_bits = static_cast<int>(parse_double(item.substr(0, c1)));
    e.code_rate = parse_double(item.substr(c1 + 1, c2 - c1 - 1));
    e.sinr_threshold_db = parse_double(item.substr(c2 + 1));
    entries.push_back(e);
  }
  return McsTable(std::move(entries));
}

std::string McsTable::to_string() const {
  std::string out;
  for (const McsEntry& e : entries_) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.modulation_bits) + ':' + format_double(e.code_rate) + ':' +
           format_double(e.sinr_threshold_db);
  }
  return out;
}

const McsEntry& McsTable::at(int index) const {
  if (!contains(index)) throw std::out_of_range("unknown MCS index " + std::to_string(index));
  return entries_[static_cast<std::size_t>(index)];
}

BlerCurve::BlerCurve(double decade_db) : decade_db_(decade_db) {
  if (!(decade_db > 0.0)) throw std::invalid_argument("BlerCurve: decade_db must be > 0");
  // logit(0.10) = -ln 9 and logit(0.01) = -ln 99 are decade_db apart.
  slope_ = std::log(11.0) / decade_db;
  offset_ = -std::log(9.0) / slope_;
}

double BlerCurve::error_probability(double sinr_db, double threshold_db) const {
  return 1.0 / (1.0 + std::exp(slope_ * (sinr_db - threshold_db - offset_)));
}

double BlerCurve::success_probability(double sinr_db, double threshold_db) const {
  return 1.0 / (1.0 + std::exp(-slope_ * (sinr_db - threshold_db - offset_)));
}

double bler(int mcs, double eff_sinr_db, const McsTable& table, const BlerCurve& curve) {
  return curve.error_probability(eff_sinr_db, table.at(mcs).sinr_threshold_db);
}

McsChoice select_mcs(std::span<const LinkQuality> links, const McsTable& table, double target_bler,
                     const BlerCurve& curve, double ignore_worst_fraction) {
  if (links.empty()) throw std::invalid_argument("select_mcs: empty link set");
  if (!(target_bler > 0.0 && target_bler < 1.0)) {
    throw std::invalid_argument("select_mcs: target BLER must be in (0,1)");
  }
  if (!(ignore_worst_fraction >= 0.0 && ignore_worst_fraction < 1.0)) {
    throw std::invalid_argument("select_mcs: ignore_worst_fraction must be in [0,1)");
  }
  double worst_db;
  const auto skip = static_cast<std::size_t>(std::floor(ignore_worst_fraction * links.size()));
  if (skip == 0) {
    worst_db = std::min_element(links.begin(), links.end(), [](const auto& a, const auto& b) {
                 return a.sinr_linear() < b.sinr_linear();
               })->sinr_db();
  } else {
    std::vector<double> db;
    db.reserve(links.size());
    for (const auto& l : links) db.push_back(l.sinr_db());
    const std::size_t k = std::min(skip, db.size() - 1);
    std::nth_element(db.begin(), db.begin() + static_cast<std::ptrdiff_t>(k), db.end());
    worst_db = db[k];
  }
  for (int m = table.highest(); m >= table.lowest(); --m) {
    if (bler(m, worst_db, table, curve) <= target_bler) return McsChoice{m, true};
  }
  return McsChoice{table.lowest(), false};
}

}  // namespace gcsim::radio
