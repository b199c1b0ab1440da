#pragma once

#include <span>
#include <utility>

namespace speechrank {

// Shapiro-Wilk normality test, Royston's AS R94 approximation, valid for
// 3 <= n <= 5000. Input need not be sorted. Returns (W, p-value).
// Throws DomainError for out-of-range n or an effectively constant sample.
std::pair<double, double> shapiro_wilk(std::span<const double> sample);

}  // namespace speechrank
