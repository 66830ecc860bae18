#include "gcsim/radio/propagation.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gcsim::radio {

namespace {

// The RMa model evaluates the breakpoint with c = 3.0e8 m/s.
constexpr double kSpeedOfLight = 3.0e8;

double rma_los_near(double d, double fc_ghz, double h) {
  const double h172 = std::pow(h, 1.72);
  return 20.0 * std::log10(40.0 * std::numbers::pi * d * fc_ghz / 3.0) +
         std::min(0.03 * h172, 10.0) * std::log10(d) - std::min(0.044 * h172, 14.77) +
         0.002 * std::log10(h) * d;
}

}  // namespace

double breakpoint_distance_m(double carrier_ghz, const RmaParams& params) {
  return 2.0 * std::numbers::pi * params.bs_height_m * params.ue_height_m * carrier_ghz * 1e9 /
         kSpeedOfLight;
}

double path_loss_db(double distance_m, double carrier_ghz, const RmaParams& params) {
  if (!(carrier_ghz > 0.0)) throw std::invalid_argument("path_loss_db: carrier must be > 0");
  const double d = std::max(distance_m, params.min_distance_m);
  const double h = params.building_height_m;
  const double d_bp = breakpoint_distance_m(carrier_ghz, params);
  if (d <= d_bp) return rma_los_near(d, carrier_ghz, h);
  return rma_los_near(d_bp, carrier_ghz, h) + 40.0 * std::log10(d / d_bp);
}

double rx_power_dbm(double tx_dbm, double antenna_gain_dbi, double pl_db, double shadow_db) {
  return tx_dbm + antenna_gain_dbi - pl_db + shadow_db;
}

double thermal_noise_dbm(double bandwidth_hz, double noise_figure_db) {
  return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

}  // namespace gcsim::radio
