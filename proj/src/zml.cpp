#include "speechrank/zml.hpp"

#include <cmath>
#include <string>

#include "speechrank/errors.hpp"

namespace speechrank {

bool params_valid(const ZmlParams& p) {
  return p.alpha > 0.0 && p.gamma > 0.0 && p.beta > -1.0 &&
         std::isfinite(p.alpha) && std::isfinite(p.beta) &&
         std::isfinite(p.gamma);
}

double zml_eval(const ZmlParams& p, int r) {
  const double base = static_cast<double>(r) + p.beta;
  if (base <= 0.0)
    throw DomainError("zml_eval: r + beta <= 0 at r = " + std::to_string(r));
  return p.alpha * std::pow(base, -p.gamma);
}

double area_under_model(const ZmlParams& p, int r_max) {
  if (r_max < 1) throw DomainError("area_under_model: r_max must be >= 1");
  if (!params_valid(p)) throw DomainError("area_under_model: invalid params");
  const double hi = static_cast<double>(r_max) + p.beta;
  const double lo = 1.0 + p.beta;
  const double eps = 1.0 - p.gamma;
  if (std::abs(p.gamma - 1.0) < 1e-9) {
    return p.alpha * std::log(hi / lo);
  }
  // (hi^eps - lo^eps)/eps = lo^eps * expm1(eps*log(hi/lo)) / eps,
  // stable straight through the gamma -> 1 singularity
  return p.alpha * std::pow(lo, eps) * std::expm1(eps * std::log(hi / lo)) /
         eps;
}

}  // namespace speechrank
