#include "speechrank/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "speechrank/errors.hpp"

namespace speechrank {

SummaryStats describe(std::span<const double> values, bool excess_kurtosis) {
  const std::size_t n = values.size();
  if (n < 2) throw DomainError("describe: need at least 2 values");
  const double dn = static_cast<double>(n);

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  SummaryStats s;
  s.min = sorted.front();
  s.max = sorted.back();
  s.median = n % 2 == 1 ? sorted[n / 2]
                        : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

  double sum = 0.0, sum_sq = 0.0;
  for (double v : values) {
    sum += v;
    sum_sq += v * v;
  }
  s.mean = sum / dn;
  s.rms = std::sqrt(sum_sq / dn);

  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double d = v - s.mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= dn;
  m3 /= dn;
  m4 /= dn;

  s.variance = m2 * dn / (dn - 1.0);
  s.std_dev = std::sqrt(s.variance);
  s.std_error = s.std_dev / std::sqrt(dn);

  if (m2 > 0.0) {
    const double g1 = m3 / std::pow(m2, 1.5);
    // adjusted Fisher-Pearson sample skewness
    s.skewness = n > 2 ? g1 * std::sqrt(dn * (dn - 1.0)) / (dn - 2.0) : g1;
    s.kurtosis = m4 / (m2 * m2);
    if (excess_kurtosis) s.kurtosis -= 3.0;
  } else {
    s.skewness = 0.0;
    s.kurtosis = excess_kurtosis ? -3.0 : 0.0;
  }

  s.mean_over_std = s.std_dev > 0.0
                        ? s.mean / s.std_dev
                        : std::numeric_limits<double>::quiet_NaN();
  s.pearson_skew = s.std_dev > 0.0
                       ? 3.0 * (s.mean - s.median) / s.std_dev
                       : std::numeric_limits<double>::quiet_NaN();
  return s;
}

std::vector<SeriesRow> corpus_series(const std::vector<FitResult>& fits,
                                     const std::vector<RankTable>& tables,
                                     const std::vector<SpeechMeta>& meta) {
  if (fits.size() != tables.size() || fits.size() != meta.size())
    throw DomainError("corpus_series: misaligned inputs (" +
                      std::to_string(fits.size()) + " fits, " +
                      std::to_string(tables.size()) + " tables, " +
                      std::to_string(meta.size()) + " meta)");

  std::vector<SeriesRow> rows;
  rows.reserve(fits.size());
  for (std::size_t i = 0; i < fits.size(); ++i) {
    const auto& fit = fits[i];
    const auto& table = tables[i];
    if (fit.r_max != static_cast<int>(table.n_distinct()))
      throw DomainError("corpus_series: fit " + std::to_string(i) +
                        " does not match its table");
    SeriesRow row;
    row.id = meta[i].id;
    row.speaker = meta[i].speaker;
    row.title = meta[i].title;
    row.date = meta[i].date;
    row.n_total = table.n_total;
    row.n_distinct = static_cast<int>(table.n_distinct());
    row.hapax = hapax_ratio(table);
    row.top1_rel_freq = table.entries.front().freq / table.n_total;
    row.top_diff6 = table.n_distinct() >= 6
                        ? top_diff_sum(table, 6)
                        : std::numeric_limits<double>::quiet_NaN();
    row.alpha = fit.params.alpha;
    row.beta = fit.params.beta;
    row.gamma = fit.params.gamma;
    row.r_squared = fit.r_squared;
    row.std_error = fit.std_error;
    row.sw_p = fit.sw_p;
    row.area = fit.area;
    rows.push_back(std::move(row));
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const SeriesRow& a, const SeriesRow& b) {
                     return a.date < b.date;
                   });
  return rows;
}

}  // namespace speechrank
