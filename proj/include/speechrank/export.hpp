#pragma once

#include <string>
#include <vector>

#include "speechrank/fit.hpp"
#include "speechrank/rank_table.hpp"
#include "speechrank/stats.hpp"

namespace speechrank {

// Wide matrix: a (token, frequency) column pair per speech, two header rows
// (speaker; "title (date)"), body rows padded with NA up to the largest
// n_distinct. UTF-8, comma-separated, RFC 4180 quoting.
void write_wide_csv(const std::vector<RankTable>& tables,
                    const std::vector<SpeechMeta>& meta,
                    const std::string& path);

struct WideCsv {
  std::vector<RankTable> tables;
  std::vector<SpeechMeta> meta;  // dates parsed back from "title (date)"
};

WideCsv read_wide_csv(const std::string& path);

// Tidy long format, one speech per row, header documents the column order,
// numbers at 17 significant digits.
void write_fit_csv(const std::vector<SeriesRow>& series,
                   const std::string& path);

std::vector<SeriesRow> read_fit_csv(const std::string& path);

enum class PlotStyle { linear, loglog };

// Self-contained SVG: observed rank-frequency points, the fitted curve
// sampled at every integer rank, and a caption in the
// "α̃=0.39; β=5.54; γ=1.16; N=1107; R²=0.97" layout.
void emit_plot(const RankTable& table, const FitResult& fit,
               const std::string& path, PlotStyle style = PlotStyle::linear);

// Shortest round-trip decimal representation (integers print bare).
std::string format_double(double v);

// 17 significant digits.
std::string format_double_full(double v);

namespace csv {
std::string quote(const std::string& field);
std::vector<std::string> parse_line(const std::string& line);
std::vector<std::vector<std::string>> read_file(const std::string& path);
}  // namespace csv

}  // namespace speechrank
