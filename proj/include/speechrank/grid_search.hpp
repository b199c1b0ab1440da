#pragma once

#include <vector>

#include "speechrank/rank_table.hpp"
#include "speechrank/zml.hpp"

namespace speechrank {

enum class AxisScale { linear, log };

struct AxisSpec {
  double low = 0.0;
  double high = 1.0;
  int steps = 2;  // number of lattice points on this axis, >= 2
  AxisScale scale = AxisScale::linear;

  double point(int i) const;
};

// Lattice for the brute-force initializer. The default brackets every
// calibrated value the corpus analysis produces on relative frequencies;
// scale the alpha axis by N for absolute frequencies.
struct GridSpec {
  AxisSpec alpha{0.01, 0.5, 20, AxisScale::log};
  AxisSpec beta{-0.9, 10.0, 30, AxisScale::linear};
  AxisSpec gamma{0.3, 2.0, 20, AxisScale::linear};

  GridSpec scaled_alpha(double factor) const;
  long long total_points() const;
};

// Exhaustive search over the lattice for the point minimizing the sum of
// squared residuals against the table frequencies. Requires >= 4 entries.
// `threads` <= 1 runs the serial reference path; both paths perform the
// identical arithmetic per lattice point and return the identical argmin
// (ties broken by lattice index).
ZmlParams grid_init(const RankTable& table, const GridSpec& grid,
                    int threads = 1);

// Serial reference implementation, kept callable for tests and benchmarks.
ZmlParams grid_init_serial(const RankTable& table, const GridSpec& grid);

// Sum of squared residuals of g(.) against the table, the quantity the grid
// search minimizes.
double grid_loss(const RankTable& table, const ZmlParams& p);

}  // namespace speechrank
