#include "speechrank/grid_search.hpp"

#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "speechrank/errors.hpp"

namespace speechrank {

double AxisSpec::point(int i) const {
  const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
  if (scale == AxisScale::log)
    return low * std::pow(high / low, t);
  return low + (high - low) * t;
}

GridSpec GridSpec::scaled_alpha(double factor) const {
  GridSpec g = *this;
  g.alpha.low *= factor;
  g.alpha.high *= factor;
  return g;
}

long long GridSpec::total_points() const {
  return static_cast<long long>(alpha.steps) * beta.steps * gamma.steps;
}

namespace {

void check_axis(const AxisSpec& axis, const char* name) {
  if (!(axis.low < axis.high) || axis.steps < 2)
    throw DomainError(std::string("grid_init: degenerate ") + name + " axis");
  if (axis.scale == AxisScale::log && axis.low <= 0.0)
    throw DomainError(std::string("grid_init: log-scaled ") + name +
                      " axis needs positive bounds");
}

// Loss of every alpha on one (beta, gamma) column. The rank shape
// (r+beta)^-gamma is hoisted so each lattice point costs one pass of
// multiply-adds; the per-point arithmetic is identical in the serial and
// parallel paths, so both return the same argmin bit for bit.
struct ColumnScratch {
  std::vector<double> shape;
};

void best_alpha_on_column(const RankTable& table, const GridSpec& grid,
                          double beta, double gamma, ColumnScratch& scratch,
                          double& best_loss, int& best_alpha_idx) {
  const std::size_t n = table.entries.size();
  scratch.shape.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    scratch.shape[i] =
        std::pow(static_cast<double>(i + 1) + beta, -gamma);
  }
  best_loss = std::numeric_limits<double>::infinity();
  best_alpha_idx = 0;
  for (int ai = 0; ai < grid.alpha.steps; ++ai) {
    const double alpha = grid.alpha.point(ai);
    double loss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double resid = table.entries[i].freq - alpha * scratch.shape[i];
      loss += resid * resid;
    }
    if (loss < best_loss) {
      best_loss = loss;
      best_alpha_idx = ai;
    }
  }
}

struct GridBest {
  double loss = std::numeric_limits<double>::infinity();
  long long column = std::numeric_limits<long long>::max();
  int alpha_idx = 0;

  // lower loss wins; lattice order breaks ties so the result never depends
  // on scheduling
  bool better_than(const GridBest& o) const {
    if (loss != o.loss) return loss < o.loss;
    return column < o.column;
  }
};

ZmlParams run_search(const RankTable& table, const GridSpec& grid,
                     int threads) {
  if (table.entries.size() < 4)
    throw DomainError("grid_init: need at least 4 entries, got " +
                      std::to_string(table.entries.size()));
  check_axis(grid.alpha, "alpha");
  check_axis(grid.beta, "beta");
  check_axis(grid.gamma, "gamma");
  if (grid.beta.low <= -1.0)
    throw DomainError("grid_init: beta axis must stay above -1");

  const long long columns =
      static_cast<long long>(grid.beta.steps) * grid.gamma.steps;
  GridBest best;

#ifdef _OPENMP
  if (threads > 1) {
    #pragma omp parallel num_threads(threads)
    {
      GridBest local;
      ColumnScratch scratch;
      #pragma omp for schedule(static) nowait
      for (long long c = 0; c < columns; ++c) {
        const double beta = grid.beta.point(static_cast<int>(c / grid.gamma.steps));
        const double gamma = grid.gamma.point(static_cast<int>(c % grid.gamma.steps));
        double loss;
        int alpha_idx;
        best_alpha_on_column(table, grid, beta, gamma, scratch, loss,
                             alpha_idx);
        GridBest cand{loss, c, alpha_idx};
        if (cand.better_than(local)) local = cand;
      }
      #pragma omp critical
      {
        if (local.better_than(best)) best = local;
      }
    }
  } else
#endif
  {
    (void)threads;
    ColumnScratch scratch;
    for (long long c = 0; c < columns; ++c) {
      const double beta = grid.beta.point(static_cast<int>(c / grid.gamma.steps));
      const double gamma = grid.gamma.point(static_cast<int>(c % grid.gamma.steps));
      double loss;
      int alpha_idx;
      best_alpha_on_column(table, grid, beta, gamma, scratch, loss, alpha_idx);
      GridBest cand{loss, c, alpha_idx};
      if (cand.better_than(best)) best = cand;
    }
  }

  ZmlParams p;
  p.alpha = grid.alpha.point(best.alpha_idx);
  p.beta = grid.beta.point(static_cast<int>(best.column / grid.gamma.steps));
  p.gamma = grid.gamma.point(static_cast<int>(best.column % grid.gamma.steps));
  return p;
}

}  // namespace

double grid_loss(const RankTable& table, const ZmlParams& p) {
  double loss = 0.0;
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    const double fitted =
        p.alpha * std::pow(static_cast<double>(i + 1) + p.beta, -p.gamma);
    const double resid = table.entries[i].freq - fitted;
    loss += resid * resid;
  }
  return loss;
}

ZmlParams grid_init(const RankTable& table, const GridSpec& grid,
                    int threads) {
  return run_search(table, grid, threads);
}

ZmlParams grid_init_serial(const RankTable& table, const GridSpec& grid) {
  return run_search(table, grid, 1);
}

}  // namespace speechrank
