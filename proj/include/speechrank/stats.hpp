#pragma once

#include <span>
#include <vector>

#include "speechrank/document.hpp"
#include "speechrank/fit.hpp"
#include "speechrank/rank_table.hpp"

namespace speechrank {

// Descriptive-statistic block. Conventions: sample (n-1) denominators for
// std_dev/variance, bias-adjusted sample skewness (G1), kurtosis non-excess
// (normal = 3) unless `excess_kurtosis` was requested. RMS is the true
// root-mean-square of the values.
struct SummaryStats {
  double max = 0.0;
  double min = 0.0;
  double median = 0.0;
  double mean = 0.0;
  double rms = 0.0;
  double std_dev = 0.0;
  double variance = 0.0;
  double std_error = 0.0;  // std_dev / sqrt(n)
  double skewness = 0.0;
  double kurtosis = 0.0;
  double mean_over_std = 0.0;  // mu / sigma
  double pearson_skew = 0.0;   // 3 (mu - median) / sigma
};

SummaryStats describe(std::span<const double> values,
                      bool excess_kurtosis = false);

// One per-speech row of the corpus time series.
struct SeriesRow {
  std::string id;
  std::string speaker;
  std::string title;
  Date date;
  double n_total = 0.0;
  int n_distinct = 0;
  double hapax = 0.0;
  double top1_rel_freq = 0.0;
  double top_diff6 = 0.0;  // NaN when the table has fewer than 6 entries
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double r_squared = 0.0;
  double std_error = 0.0;
  double sw_p = 0.0;
  double area = 0.0;
};

// Assembles the aligned per-speech rows, sorted by date (ties keep input
// order). Throws DomainError when the lists are misaligned.
std::vector<SeriesRow> corpus_series(const std::vector<FitResult>& fits,
                                     const std::vector<RankTable>& tables,
                                     const std::vector<SpeechMeta>& meta);

}  // namespace speechrank
