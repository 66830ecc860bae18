#include "gcsim/radio/geometry.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "gcsim/rng.h"

namespace gcsim::radio {

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

const CellSite& CellGrid::cell(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= cells.size()) {
    throw std::out_of_range("unknown cell id " + std::to_string(id));
  }
  return cells[static_cast<std::size_t>(id)];
}

double CellGrid::circumradius() const { return isd_m / std::sqrt(3.0); }

CellGrid build_grid(double isd_m, int rings) {
  if (!(isd_m > 0.0) || rings < 0) {
    throw std::invalid_argument("build_grid: need isd_m > 0 and rings >= 0");
  }
  CellGrid grid;
  grid.isd_m = isd_m;
  grid.rings = rings;

  // Axial lattice coordinates; basis (isd, 0) and (isd/2, isd*sqrt(3)/2).
  const double half_sqrt3 = std::sqrt(3.0) / 2.0;
  auto place = [&](int q, int r) {
    Point p{isd_m * (q + 0.5 * r), isd_m * half_sqrt3 * r};
    grid.cells.push_back(CellSite{static_cast<int>(grid.cells.size()), p});
  };
  place(0, 0);
  // Walk each ring starting at the corner (ring, 0), counter-clockwise.
  static constexpr int kDirQ[6] = {-1, -1, 0, 1, 1, 0};
  static constexpr int kDirR[6] = {1, 0, -1, -1, 0, 1};
  for (int ring = 1; ring <= rings; ++ring) {
    int q = ring;
    int r = 0;
    for (int side = 0; side < 6; ++side) {
      for (int step = 0; step < ring; ++step) {
        place(q, r);
        q += kDirQ[side];
        r += kDirR[side];
      }
    }
  }
  return grid;
}

double UeDrop::shadow_db(int ue, int cell) const {
  return shadowing_db.at(static_cast<std::size_t>(ue) * cell_count +
                         static_cast<std::size_t>(cell));
}

std::vector<int> UeDrop::ues_in_cell(int cell) const {
  std::vector<int> out;
  for (const Ue& u : ues) {
    if (u.serving_cell == cell) out.push_back(u.id);
  }
  return out;
}

namespace {

// Uniform point in a regular hexagon centered at the origin with the given
// circumradius and vertices at 30 + 60k degrees. The hexagon is the union of
// three congruent rhombi, each spanned by two vertices 120 degrees apart.
Point sample_hexagon(Rng& rng, double circumradius) {
  const int rhombus = static_cast<int>(uniform01(rng) * 3.0);
  const double u = uniform01(rng);
  const double v = uniform01(rng);
  const double a0 = std::numbers::pi / 6.0 + (2.0 * std::numbers::pi / 3.0) * rhombus;
  const double a1 = a0 + 2.0 * std::numbers::pi / 3.0;
  return Point{circumradius * (u * std::cos(a0) + v * std::cos(a1)),
               circumradius * (u * std::sin(a0) + v * std::sin(a1))};
}

}  // namespace

UeDrop drop_ues(const CellGrid& grid, int per_cell, std::uint64_t seed,
                double shadowing_std_db) {
  if (per_cell < 0) throw std::invalid_argument("drop_ues: per_cell must be >= 0");
  if (!(shadowing_std_db >= 0.0)) {
    throw std::invalid_argument("drop_ues: shadowing std must be >= 0");
  }
  RngFactory rngs(seed);
  UeDrop drop;
  drop.seed = seed;
  drop.cell_count = grid.size();
  drop.ues.reserve(grid.size() * static_cast<std::size_t>(per_cell));
  const double radius = grid.circumradius();

  for (const CellSite& site : grid.cells) {
    Rng rng = rngs.stream("drop.position", static_cast<std::uint64_t>(site.id));
    for (int k = 0; k < per_cell; ++k) {
      const Point offset = sample_hexagon(rng, radius);
      drop.ues.push_back(Ue{static_cast<int>(drop.ues.size()),
                            Point{site.position.x + offset.x, site.position.y + offset.y},
                            site.id});
    }
  }

  drop.shadowing_db.resize(drop.ues.size() * drop.cell_count);
  for (const Ue& u : drop.ues) {
    Rng rng = rngs.stream("drop.shadowing", static_cast<std::uint64_t>(u.id));
    std::normal_distribution<double> normal(0.0, shadowing_std_db);
    for (std::size_t c = 0; c < drop.cell_count; ++c) {
      drop.shadowing_db[static_cast<std::size_t>(u.id) * drop.cell_count + c] =
          shadowing_std_db > 0.0 ? normal(rng) : 0.0;
    }
  }
  return drop;
}

}  // namespace gcsim::radio
