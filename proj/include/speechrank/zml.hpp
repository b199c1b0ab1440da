#pragma once

namespace speechrank {

// Zipf-Mandelbrot parameters for g(r) = alpha * (r + beta)^(-gamma).
// alpha > 0, gamma > 0, and beta > -1 so r + beta > 0 for every rank r >= 1.
struct ZmlParams {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 1.0;
};

bool params_valid(const ZmlParams& p);

// g(r); throws DomainError when r + beta <= 0.
double zml_eval(const ZmlParams& p, int r);

// Integral of g over [1, r_max]:
//   alpha/(1-gamma) * ((r_max+beta)^(1-gamma) - (1+beta)^(1-gamma))
// with the analytic log limit at gamma == 1. The general branch is computed
// via expm1 so it stays accurate arbitrarily close to the singularity.
double area_under_model(const ZmlParams& p, int r_max);

}  // namespace speechrank
