#pragma once

#include <span>
#include <vector>

#include "speechrank/grid_search.hpp"
#include "speechrank/rank_table.hpp"
#include "speechrank/zml.hpp"

namespace speechrank {

enum class FitMode { absolute, relative };

struct FitTolerances {
  double loss = 1e-10;  // stop when the relative loss decrease drops below
  double step = 1e-10;  // stop when the step norm drops below
  int max_iterations = 200;
};

struct FitResult {
  ZmlParams params;
  FitMode mode = FitMode::absolute;
  double r_squared = 0.0;
  double std_error = 0.0;           // sqrt(SS_res / (n - 3))
  std::vector<double> residuals;    // observed - fitted, by rank
  std::vector<double> std_residuals;
  double sw_w = 0.0;
  double sw_p = 0.0;
  bool sw_truncated = false;  // test ran on the first 5000 ranks only
  double area = 0.0;
  int r_max = 0;
  bool converged = false;
  int iterations = 0;
  double loss = 0.0;     // final sum of squared residuals
  double n_total = 0.0;  // speech length backing the fitted table
};

// Levenberg-Marquardt refinement of `init` against the table frequencies,
// analytic Jacobian, damping 1e-3 scaled x10 on rejected and /10 on accepted
// steps. Unconstrained except that a step taking beta out of the model
// domain (beta <= -1 + 1e-9) is rejected like any failed step; a fit pinned
// against that boundary is an error, not a silent clamp.
FitResult lm_fit(const RankTable& table, const ZmlParams& init,
                 const FitTolerances& tol = {});

// grid_init + lm_fit on absolute or relative frequencies, with the full
// diagnostic block filled in (R^2, standard error, standardized residuals,
// Shapiro-Wilk, area).
FitResult fit(const RankTable& table, FitMode mode, const GridSpec& grid,
              const FitTolerances& tol = {}, int grid_threads = 1);

// Default lattice for a table: the relative-frequency grid, alpha axis
// scaled by n_total in absolute mode.
GridSpec default_grid(FitMode mode, double n_total);

// 1 - SS_res/SS_tot; throws DomainError for a constant observed vector.
double r_squared(std::span<const double> observed,
                 std::span<const double> fitted);

// sqrt(sum residuals^2 / (n - n_params)); n must exceed n_params.
double regression_std_error(std::span<const double> residuals,
                            int n_params = 3);

// (x - mean) / sample std; output has mean 0 and std 1.
std::vector<double> standardize_residuals(std::span<const double> residuals);

}  // namespace speechrank
