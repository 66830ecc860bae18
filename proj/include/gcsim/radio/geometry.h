#pragma once

#include <cstdint>
#include <vector>

namespace gcsim::radio {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point a, Point b);

struct CellSite {
  int id = 0;
  Point position;
};

// Hexagonal macro layout. Cell 0 sits at the origin; ids then grow ring by
// ring. Each site serves the hexagon of points closer to it than to any
// other lattice site (apothem isd/2, flat sides facing the neighbors).
struct CellGrid {
  double isd_m = 0.0;
  int rings = 0;
  std::vector<CellSite> cells;

  const CellSite& cell(int id) const;
  std::size_t size() const { return cells.size(); }
  double circumradius() const;
};

CellGrid build_grid(double isd_m, int rings);

struct Ue {
  int id = 0;
  Point position;
  int serving_cell = 0;
};

// Static UE positions plus one lognormal shadowing realization per
// (UE, cell) link. Positions are drawn uniformly in the serving hexagon.
struct UeDrop {
  std::vector<Ue> ues;
  std::vector<double> shadowing_db;  // ue-major: [ue * cell_count + cell]
  std::size_t cell_count = 0;
  std::uint64_t seed = 0;

  const Ue& ue(int id) const { return ues.at(static_cast<std::size_t>(id)); }
  double shadow_db(int ue, int cell) const;
  // UEs whose serving cell is `cell`, in id order.
  std::vector<int> ues_in_cell(int cell) const;
};

inline constexpr double kDefaultShadowingStdDb = 8.0;

UeDrop drop_ues(const CellGrid& grid, int per_cell, std::uint64_t seed,
                double shadowing_std_db = kDefaultShadowingStdDb);

}  // namespace gcsim::radio
