#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "speechrank/errors.hpp"
#include "speechrank/export.hpp"

namespace speechrank {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw DomainError("format_double failed");
  return std::string(buf, ptr);
}

std::string format_double_full(double v) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (ec != std::errc{}) throw DomainError("format_double_full failed");
  return std::string(buf, ptr);
}

namespace csv {

std::string quote(const std::string& field) {
  const bool needs =
      field.find_first_of(",\"\n\r") != std::string::npos ||
      (!field.empty() && (field.front() == ' ' || field.back() == ' '));
  if (!needs) return field;
  std::string out = "\"";
  for (char c : field) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

std::vector<std::string> parse_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

std::vector<std::vector<std::string>> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open CSV: " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    rows.push_back(parse_line(line));
  }
  return rows;
}

}  // namespace csv

namespace {

void write_or_throw(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

double parse_number(const std::string& s) {
  if (s == "NA") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("bad number in CSV: \"" + s + "\"");
  return v;
}

std::string freq_repr(double v) { return format_double(v); }

}  // namespace

void write_wide_csv(const std::vector<RankTable>& tables,
                    const std::vector<SpeechMeta>& meta,
                    const std::string& path) {
  if (tables.size() != meta.size())
    throw DomainError("write_wide_csv: misaligned metadata (" +
                      std::to_string(tables.size()) + " tables, " +
                      std::to_string(meta.size()) + " meta)");

  std::size_t body_rows = 0;
  for (const auto& t : tables) body_rows = std::max(body_rows, t.n_distinct());

  std::string out;
  out.reserve(64 * body_rows * std::max<std::size_t>(tables.size(), 1));

  // header row 1: speaker spanning its column pair
  for (std::size_t s = 0; s < tables.size(); ++s) {
    if (s) out += ',';
    out += csv::quote(meta[s].speaker);
    out += ',';
  }
  out += '\n';
  // header row 2: "title (date)"
  for (std::size_t s = 0; s < tables.size(); ++s) {
    if (s) out += ',';
    out += csv::quote(meta[s].title + " (" + meta[s].date.to_iso() + ")");
    out += ',';
  }
  out += '\n';

  for (std::size_t row = 0; row < body_rows; ++row) {
    for (std::size_t s = 0; s < tables.size(); ++s) {
      if (s) out += ',';
      if (row < tables[s].n_distinct()) {
        out += csv::quote(tables[s].entries[row].token);
        out += ',';
        out += freq_repr(tables[s].entries[row].freq);
      } else {
        out += "NA,NA";
      }
    }
    out += '\n';
  }
  write_or_throw(path, out);
}

WideCsv read_wide_csv(const std::string& path) {
  auto rows = csv::read_file(path);
  if (rows.size() < 2) throw ParseError("wide CSV: missing header rows");
  const std::size_t cols = rows[0].size();
  if (cols % 2 != 0) throw ParseError("wide CSV: odd column count");
  const std::size_t n_speeches = cols / 2;

  WideCsv result;
  result.tables.resize(n_speeches);
  result.meta.resize(n_speeches);
  for (std::size_t s = 0; s < n_speeches; ++s) {
    result.meta[s].speaker = rows[0][2 * s];
    const std::string& td = rows[1].size() > 2 * s ? rows[1][2 * s] : "";
    auto open = td.rfind(" (");
    if (open == std::string::npos || td.back() != ')')
      throw ParseError("wide CSV: bad title cell \"" + td + "\"");
    result.meta[s].title = td.substr(0, open);
    result.meta[s].date =
        parse_date(td.substr(open + 2, td.size() - open - 3));
  }
  for (std::size_t r = 2; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw ParseError("wide CSV: ragged row " + std::to_string(r + 1));
    for (std::size_t s = 0; s < n_speeches; ++s) {
      const std::string& token = rows[r][2 * s];
      const std::string& freq = rows[r][2 * s + 1];
      if (token == "NA" && freq == "NA") continue;
      auto& table = result.tables[s];
      table.entries.push_back(
          {token, parse_number(freq),
           static_cast<int>(table.entries.size()) + 1});
    }
  }
  for (auto& table : result.tables) {
    table.n_total = 0.0;
    for (const auto& e : table.entries) table.n_total += e.freq;
  }
  return result;
}

static const char* kFitCsvHeader =
    "id,speaker,title,date,n_total,n_distinct,hapax_ratio,top1_rel_freq,"
    "top_diff6,alpha,beta,gamma,r_squared,std_error,sw_p,area";

void write_fit_csv(const std::vector<SeriesRow>& series,
                   const std::string& path) {
  if (series.empty()) throw DomainError("write_fit_csv: empty series");
  std::string out = kFitCsvHeader;
  out += '\n';
  auto num = [](double v) {
    return std::isnan(v) ? std::string("NA") : format_double_full(v);
  };
  for (const auto& row : series) {
    out += csv::quote(row.id);
    out += ',';
    out += csv::quote(row.speaker);
    out += ',';
    out += csv::quote(row.title);
    out += ',';
    out += row.date.to_iso();
    out += ',';
    out += num(row.n_total);
    out += ',';
    out += std::to_string(row.n_distinct);
    out += ',';
    out += num(row.hapax);
    out += ',';
    out += num(row.top1_rel_freq);
    out += ',';
    out += num(row.top_diff6);
    out += ',';
    out += num(row.alpha);
    out += ',';
    out += num(row.beta);
    out += ',';
    out += num(row.gamma);
    out += ',';
    out += num(row.r_squared);
    out += ',';
    out += num(row.std_error);
    out += ',';
    out += num(row.sw_p);
    out += ',';
    out += num(row.area);
    out += '\n';
  }
  write_or_throw(path, out);
}

std::vector<SeriesRow> read_fit_csv(const std::string& path) {
  auto rows = csv::read_file(path);
  if (rows.empty()) throw ParseError("fit CSV: empty file");
  std::vector<SeriesRow> series;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& f = rows[r];
    if (f.size() == 1 && f[0].empty()) continue;
    if (f.size() != 16)
      throw ParseError("fit CSV: row " + std::to_string(r + 1) + " has " +
                       std::to_string(f.size()) + " fields, want 16");
    SeriesRow row;
    row.id = f[0];
    row.speaker = f[1];
    row.title = f[2];
    row.date = parse_date(f[3]);
    row.n_total = parse_number(f[4]);
    row.n_distinct = static_cast<int>(parse_number(f[5]));
    row.hapax = parse_number(f[6]);
    row.top1_rel_freq = parse_number(f[7]);
    row.top_diff6 = parse_number(f[8]);
    row.alpha = parse_number(f[9]);
    row.beta = parse_number(f[10]);
    row.gamma = parse_number(f[11]);
    row.r_squared = parse_number(f[12]);
    row.std_error = parse_number(f[13]);
    row.sw_p = parse_number(f[14]);
    row.area = parse_number(f[15]);
    series.push_back(std::move(row));
  }
  return series;
}

}  // namespace speechrank
