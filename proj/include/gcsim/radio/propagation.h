#pragma once

namespace gcsim::radio {

// Rural-macro line-of-sight path loss (ITU-R M.2135 RMa LOS):
//
//   PL1(d) = 20 log10(40 pi d fc / 3) + min(0.03 h^1.72, 10) log10(d)
//            - min(0.044 h^1.72, 14.77) + 0.002 log10(h) d
//   PL2(d) = PL1(d_bp) + 40 log10(d / d_bp)
//   d_bp   = 2 pi h_bs h_ut fc / c          (fc in Hz here, GHz above)
//
// PL1 applies below the breakpoint, PL2 above it. Distances below
// min_distance_m are clamped. h is the average building height.
struct RmaParams {
  double bs_height_m = 35.0;
  double ue_height_m = 1.5;
  double building_height_m = 5.0;
  double min_distance_m = 35.0;
};

double breakpoint_distance_m(double carrier_ghz, const RmaParams& params = {});

double path_loss_db(double distance_m, double carrier_ghz, const RmaParams& params = {});

double rx_power_dbm(double tx_dbm, double antenna_gain_dbi, double pl_db, double shadow_db);

// kT = -174 dBm/Hz at 290 K.
double thermal_noise_dbm(double bandwidth_hz, double noise_figure_db);

double db_to_linear(double db);
double linear_to_db(double linear);

}  // namespace gcsim::radio
