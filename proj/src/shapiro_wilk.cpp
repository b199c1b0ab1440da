#include "speechrank/shapiro_wilk.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "speechrank/errors.hpp"

namespace speechrank {

namespace {

// Wichura's PPND16 (AS 241): inverse of the standard normal CDF.
double ppnd16(double p) {
  static constexpr double a[8] = {
      3.3871328727963666080e0, 1.3314166789178437745e2,
      1.9715909503065514427e3, 1.3731693765509461125e4,
      4.5921953931549871457e4, 6.7265770927008700853e4,
      3.3430575583588128105e4, 2.5090809287301226727e3};
  static constexpr double b[8] = {
      1.0,                     4.2313330701600911252e1,
      6.8718700749205790830e2, 5.3941960214247511077e3,
      2.1213794301586595867e4, 3.9307895800092710610e4,
      2.8729085735721942674e4, 5.2264952788528545610e3};
  static constexpr double c[8] = {
      1.42343711074968357734e0,  4.63033784615654529590e0,
      5.76949722146069140550e0,  3.64784832476320460504e0,
      1.27045825245236838258e0,  2.41780725177450611770e-1,
      2.27238449892691845833e-2, 7.74545014278341407640e-4};
  static constexpr double d[8] = {
      1.0,                       2.05319162663775882187e0,
      1.67638483018380384940e0,  6.89767334985100004550e-1,
      1.48103976427480074590e-1, 1.51986665636164571966e-2,
      5.47593808499534494600e-4, 1.05075007164441684324e-9};
  static constexpr double e[8] = {
      6.65790464350110377720e0,  5.46378491116411436990e0,
      1.78482653991729133580e0,  2.96560571828504891230e-1,
      2.65321895265761230930e-2, 1.24266094738807843860e-3,
      2.71155556874348757815e-5, 2.01033439929228813265e-7};
  static constexpr double f[8] = {
      1.0,                       5.99832206555887937690e-1,
      1.36929880922735805310e-1, 1.48753612908506148525e-2,
      7.86869131145613259100e-4, 1.84631831751005468180e-6,
      1.42151175831644588870e-9, 2.04426310338993978564e-15};

  auto ratio = [](const double* num, const double* den, double r) {
    double n = num[7], dd = den[7];
    for (int i = 6; i >= 0; --i) {
      n = n * r + num[i];
      dd = dd * r + den[i];
    }
    return n / dd;
  };

  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q * ratio(a, b, r);
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    val = ratio(c, d, r - 1.6);
  } else {
    val = ratio(e, f, r - 5.0);
  }
  return q < 0.0 ? -val : val;
}

double poly(const double* coef, int n, double x) {
  double v = coef[0];
  double p = 1.0;
  for (int i = 1; i < n; ++i) {
    p *= x;
    v += coef[i] * p;
  }
  return v;
}

// upper tail of the standard normal
double norm_upper(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace

std::pair<double, double> shapiro_wilk(std::span<const double> sample) {
  // Royston, Applied Statistics 44(4), 1995: algorithm AS R94, uncensored.
  static constexpr double kC1[6] = {0.0,      0.221157, -0.147981,
                                    -2.071190, 4.434685, -2.706056};
  static constexpr double kC2[6] = {0.0,      0.042981, -0.293762,
                                    -1.752461, 5.682633, -3.582633};
  static constexpr double kC3[4] = {0.5440, -0.39978, 0.025054, -6.714e-4};
  static constexpr double kC4[4] = {1.3822, -0.77857, 0.062767, -0.0020322};
  static constexpr double kC5[4] = {-1.5861, -0.31082, -0.083751, 0.0038915};
  static constexpr double kC6[3] = {-0.4803, -0.082676, 0.0030302};
  static constexpr double kG[2] = {-2.273, 0.459};
  static constexpr double kPi6 = 1.909859;   // 6/pi
  static constexpr double kStqr = 1.047198;  // asin(sqrt(3)/2)
  static constexpr double kSmall = 1e-19;

  const int n = static_cast<int>(sample.size());
  if (n < 3) throw DomainError("shapiro_wilk: need at least 3 values");
  if (n > 5000)
    throw DomainError("shapiro_wilk: n = " + std::to_string(n) +
                      " beyond the approximation's validity range");

  std::vector<double> x(sample.begin(), sample.end());
  std::sort(x.begin(), x.end());
  const double range = x[n - 1] - x[0];
  if (!(range > 0.0) || !std::isfinite(range))
    throw DomainError("shapiro_wilk: sample has zero range");

  const int n2 = n / 2;
  std::vector<double> w_coef(n2);  // positive weights for the upper half
  const double an = static_cast<double>(n);
  if (n == 3) {
    w_coef[0] = std::sqrt(0.5);
  } else {
    const double an25 = an + 0.25;
    double summ2 = 0.0;
    std::vector<double> m(n2);
    for (int i = 0; i < n2; ++i) {
      m[i] = ppnd16((static_cast<double>(i + 1) - 0.375) / an25);
      summ2 += m[i] * m[i];
    }
    summ2 *= 2.0;
    const double ssumm2 = std::sqrt(summ2);
    const double rsn = 1.0 / std::sqrt(an);
    const double a1 = poly(kC1, 6, rsn) - m[0] / ssumm2;
    int i1;
    double fac;
    if (n > 5) {
      i1 = 2;
      const double a2 = -m[1] / ssumm2 + poly(kC2, 6, rsn);
      fac = std::sqrt((summ2 - 2.0 * m[0] * m[0] - 2.0 * m[1] * m[1]) /
                      (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
      w_coef[0] = a1;
      w_coef[1] = a2;
    } else {
      i1 = 1;
      fac = std::sqrt((summ2 - 2.0 * m[0] * m[0]) / (1.0 - 2.0 * a1 * a1));
      w_coef[0] = a1;
    }
    for (int i = i1; i < n2; ++i) w_coef[i] = -m[i] / fac;
  }

  // W as the squared correlation between data and coefficients; the lower
  // half takes the negated weights.
  auto coef_at = [&](int i) {  // 0-based position in the sorted sample
    const int j = n - 1 - i;
    if (i == j) return 0.0;
    const double a = w_coef[std::min(i, j)];
    return i < j ? -a : a;
  };

  double sa = 0.0, sx = 0.0;
  for (int i = 0; i < n; ++i) {
    sa += coef_at(i);
    sx += x[i] / range;
  }
  sa /= n;
  sx /= n;
  double ssa = 0.0, ssx = 0.0, sax = 0.0;
  for (int i = 0; i < n; ++i) {
    const double asa = coef_at(i) - sa;
    const double xsx = x[i] / range - sx;
    ssa += asa * asa;
    ssx += xsx * xsx;
    sax += asa * xsx;
  }
  const double ssassx = std::sqrt(ssa * ssx);
  // 1 - W computed directly to dodge rounding for W near 1
  double w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);
  if (w1 < 0.0) w1 = 0.0;
  const double w = 1.0 - w1;

  double p;
  if (n == 3) {
    p = kPi6 * (std::asin(std::sqrt(w)) - kStqr);
    p = std::clamp(p, 0.0, 1.0);
    return {w, p};
  }
  if (w1 <= 0.0) return {w, 1.0};
  double y = std::log(w1);
  const double lx = std::log(an);
  double mu, sigma;
  if (n <= 11) {
    const double gamma = poly(kG, 2, an);
    if (y >= gamma) return {w, kSmall};
    y = -std::log(gamma - y);
    mu = poly(kC3, 4, an);
    sigma = std::exp(poly(kC4, 4, an));
  } else {
    mu = poly(kC5, 4, lx);
    sigma = std::exp(poly(kC6, 3, lx));
  }
  p = norm_upper((y - mu) / sigma);
  return {w, p};
}

}  // namespace speechrank
