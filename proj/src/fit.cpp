#include "speechrank/fit.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "speechrank/errors.hpp"
#include "speechrank/shapiro_wilk.hpp"

namespace speechrank {

namespace {

struct Model {
  // value and partials at rank r: g = alpha*(r+beta)^-gamma
  static void eval_row(const ZmlParams& p, int r, double& g, double jac[3]) {
    const double base = static_cast<double>(r) + p.beta;
    const double shape = std::pow(base, -p.gamma);
    const double lb = std::log(base);
    g = p.alpha * shape;
    jac[0] = shape;                  // d/d alpha
    jac[1] = -p.alpha * p.gamma * shape / base;  // d/d beta
    jac[2] = -p.alpha * shape * lb;  // d/d gamma
  }
};

double sum_sq(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

// residuals = observed - fitted; throws on non-finite values, naming the rank
double residuals_at(const RankTable& table, const ZmlParams& p,
                    std::vector<double>& out) {
  const std::size_t n = table.entries.size();
  out.resize(n);
  double loss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double base = static_cast<double>(i + 1) + p.beta;
    const double fitted = p.alpha * std::pow(base, -p.gamma);
    const double r = table.entries[i].freq - fitted;
    if (!std::isfinite(r))
      throw DomainError("lm_fit: non-finite residual at rank " +
                        std::to_string(i + 1));
    out[i] = r;
    loss += r * r;
  }
  return loss;
}

// Cholesky solve of the 3x3 normal equations; false when not positive
// definite.
bool solve3(const double a[3][3], const double b[3], double x[3]) {
  double l[3][3] = {};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = a[i][j];
      for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j) {
        if (s <= 0.0 || !std::isfinite(s)) return false;
        l[i][i] = std::sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  }
  double y[3];
  for (int i = 0; i < 3; ++i) {
    double s = b[i];
    for (int k = 0; k < i; ++k) s -= l[i][k] * y[k];
    y[i] = s / l[i][i];
  }
  for (int i = 2; i >= 0; --i) {
    double s = y[i];
    for (int k = i + 1; k < 3; ++k) s -= l[k][i] * x[k];
    x[i] = s / l[i][i];
  }
  return std::isfinite(x[0]) && std::isfinite(x[1]) && std::isfinite(x[2]);
}

}  // namespace

FitResult lm_fit(const RankTable& table, const ZmlParams& init,
                 const FitTolerances& tol) {
  const std::size_t n = table.entries.size();
  if (n < 4)
    throw DomainError("lm_fit: need at least 4 entries, got " +
                      std::to_string(n));
  if (init.beta <= -1.0 || !std::isfinite(init.alpha) ||
      !std::isfinite(init.beta) || !std::isfinite(init.gamma))
    throw DomainError("lm_fit: invalid initial parameters");

  FitResult result;
  ZmlParams p = init;
  std::vector<double> resid, trial_resid;
  double loss = residuals_at(table, p, resid);

  double lambda = 1e-3;
  int boundary_rejects = 0;
  result.converged = false;
  result.iterations = 0;

  for (int iter = 0; iter < tol.max_iterations; ++iter) {
    result.iterations = iter + 1;

    // normal equations J^T J + lambda I, J^T r
    double a[3][3] = {};
    double g[3] = {};
    for (std::size_t i = 0; i < n; ++i) {
      double fitted, jac[3];
      Model::eval_row(p, static_cast<int>(i + 1), fitted, jac);
      if (!std::isfinite(jac[0]) || !std::isfinite(jac[1]) ||
          !std::isfinite(jac[2]))
        throw DomainError("lm_fit: non-finite Jacobian at rank " +
                          std::to_string(i + 1));
      for (int r = 0; r < 3; ++r) {
        g[r] += jac[r] * resid[i];
        for (int c = 0; c <= r; ++c) a[r][c] += jac[r] * jac[c];
      }
    }
    a[0][1] = a[1][0];
    a[0][2] = a[2][0];
    a[1][2] = a[2][1];

    double damped[3][3];
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        damped[r][c] = a[r][c] + (r == c ? lambda : 0.0);

    double step[3];
    if (!solve3(damped, g, step)) {
      lambda *= 10.0;
      if (lambda > 1e15) break;
      continue;
    }

    const double step_norm =
        std::sqrt(step[0] * step[0] + step[1] * step[1] + step[2] * step[2]);
    if (step_norm < tol.step) {
      result.converged = true;
      break;
    }

    ZmlParams trial{p.alpha + step[0], p.beta + step[1], p.gamma + step[2]};
    if (trial.beta <= -1.0 + 1e-9) {
      // out of the model's domain: rejected like any failed step
      lambda *= 10.0;
      if (++boundary_rejects >= 30)
        throw DomainError(
            "lm_fit: beta driven to the domain boundary (beta <= -1)");
      if (lambda > 1e15) break;
      continue;
    }

    const double trial_loss = residuals_at(table, trial, trial_resid);
    if (trial_loss < loss) {
      const double decrease = (loss - trial_loss) / loss;
      p = trial;
      resid.swap(trial_resid);
      loss = trial_loss;
      lambda = std::max(lambda / 10.0, 1e-12);
      boundary_rejects = 0;
      if (decrease < tol.loss) {
        result.converged = true;
        break;
      }
    } else {
      lambda *= 10.0;
      if (lambda > 1e15) break;
    }
  }

  result.params = p;
  result.residuals = std::move(resid);
  result.loss = loss;
  result.r_max = static_cast<int>(n);
  std::vector<double> observed(n), fitted(n);
  for (std::size_t i = 0; i < n; ++i) {
    observed[i] = table.entries[i].freq;
    fitted[i] = observed[i] - result.residuals[i];
  }
  result.r_squared = r_squared(observed, fitted);
  result.std_error = regression_std_error(result.residuals);
  result.n_total = table.n_total;
  return result;
}

FitResult fit(const RankTable& table, FitMode mode, const GridSpec& grid,
              const FitTolerances& tol, int grid_threads) {
  if (table.entries.empty()) throw DomainError("fit: empty table");
  const double speech_n = table.n_total;
  RankTable rel;
  const RankTable* work = &table;
  if (mode == FitMode::relative) {
    rel = to_relative(table);
    work = &rel;
  }

  const ZmlParams init = grid_init(*work, grid, grid_threads);
  FitResult result = lm_fit(*work, init, tol);
  result.mode = mode;
  result.n_total = speech_n;

  // diagnostics
  const double var = [&] {
    double mean = 0.0;
    for (double r : result.residuals) mean += r;
    mean /= static_cast<double>(result.residuals.size());
    double v = 0.0;
    for (double r : result.residuals) v += (r - mean) * (r - mean);
    return v;
  }();
  if (var == 0.0) {
    // an exactly perfect fit: trivially standardized, trivially normal
    result.std_residuals.assign(result.residuals.size(), 0.0);
    result.sw_w = 1.0;
    result.sw_p = 1.0;
  } else {
    result.std_residuals = standardize_residuals(result.residuals);
    std::span<const double> sw_input(result.std_residuals);
    if (sw_input.size() > 5000) {
      sw_input = sw_input.subspan(0, 5000);
      result.sw_truncated = true;
    }
    auto [w, pval] = shapiro_wilk(sw_input);
    result.sw_w = w;
    result.sw_p = pval;
  }

  if (!params_valid(result.params))
    throw DomainError("fit: optimization left the parameter domain");
  result.area = area_under_model(result.params, result.r_max);
  return result;
}

GridSpec default_grid(FitMode mode, double n_total) {
  GridSpec grid;
  if (mode == FitMode::absolute) grid = grid.scaled_alpha(n_total);
  return grid;
}

double r_squared(std::span<const double> observed,
                 std::span<const double> fitted) {
  if (observed.size() != fitted.size())
    throw DomainError("r_squared: length mismatch");
  if (observed.size() < 2) throw DomainError("r_squared: need >= 2 points");
  double mean = 0.0;
  for (double y : observed) mean += y;
  mean /= static_cast<double>(observed.size());
  double ss_tot = 0.0, ss_res = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    ss_tot += (observed[i] - mean) * (observed[i] - mean);
    ss_res += (observed[i] - fitted[i]) * (observed[i] - fitted[i]);
  }
  if (ss_tot == 0.0) throw DomainError("r_squared: constant observed vector");
  return 1.0 - ss_res / ss_tot;
}

double regression_std_error(std::span<const double> residuals, int n_params) {
  const int n = static_cast<int>(residuals.size());
  if (n <= n_params)
    throw DomainError("regression_std_error: need more than " +
                      std::to_string(n_params) + " residuals");
  return std::sqrt(sum_sq(residuals) / static_cast<double>(n - n_params));
}

std::vector<double> standardize_residuals(std::span<const double> residuals) {
  const std::size_t n = residuals.size();
  if (n < 2) throw DomainError("standardize_residuals: need >= 2 values");
  double mean = 0.0;
  for (double r : residuals) mean += r;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double r : residuals) var += (r - mean) * (r - mean);
  var /= static_cast<double>(n - 1);
  if (var == 0.0)
    throw DomainError("standardize_residuals: zero variance");
  const double sd = std::sqrt(var);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (residuals[i] - mean) / sd;
  return out;
}

}  // namespace speechrank
