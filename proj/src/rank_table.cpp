#include "speechrank/rank_table.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "speechrank/errors.hpp"

namespace speechrank {

RankTable build_rank_table(const TokenList& tokens, TieBreak ties) {
  if (tokens.tokens.empty())
    throw DomainError("build_rank_table: empty token list");

  struct Count {
    double freq = 0.0;
    std::size_t first = 0;
  };
  std::unordered_map<std::string, Count> counts;
  counts.reserve(tokens.tokens.size());
  for (std::size_t i = 0; i < tokens.tokens.size(); ++i) {
    auto [it, fresh] = counts.try_emplace(tokens.tokens[i], Count{0.0, i});
    it->second.freq += 1.0;
  }

  struct Item {
    const std::string* token;
    double freq;
    std::size_t first;
  };
  std::vector<Item> items;
  items.reserve(counts.size());
  for (const auto& [token, c] : counts)
    items.push_back({&token, c.freq, c.first});

  if (ties == TieBreak::first_occurrence) {
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
      if (a.freq != b.freq) return a.freq > b.freq;
      return a.first < b.first;
    });
  } else {
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
      if (a.freq != b.freq) return a.freq > b.freq;
      return *a.token < *b.token;
    });
  }

  RankTable table;
  table.entries.reserve(items.size());
  int rank = 0;
  for (const auto& item : items)
    table.entries.push_back({*item.token, item.freq, ++rank});
  table.n_total = static_cast<double>(tokens.tokens.size());
  return table;
}

double hapax_ratio(const RankTable& table) {
  if (table.entries.empty()) throw DomainError("hapax_ratio: empty table");
  std::size_t hapax = 0;
  for (const auto& e : table.entries)
    if (e.freq == 1.0) ++hapax;
  return static_cast<double>(hapax) /
         static_cast<double>(table.entries.size());
}

RankTable repair_doubled(RankTable table, double threshold) {
  if (threshold <= 0.0 || threshold >= 1.0)
    throw DomainError("repair_doubled: threshold must be in (0,1)");
  if (hapax_ratio(table) >= threshold) return table;

  std::vector<RankEntry> repaired;
  repaired.reserve(table.entries.size());
  double total = 0.0;
  int rank = 0;
  for (auto& e : table.entries) {
    double half = e.freq / 2.0;
    if (half == 0.5) continue;  // residual stray token, drop it
    repaired.push_back({std::move(e.token), half, ++rank});
    total += half;
  }
  table.entries = std::move(repaired);
  table.n_total = total;
  table.doubled_repair = true;
  return table;
}

RankTable to_relative(RankTable table) {
  if (table.n_total <= 0.0)
    throw DomainError("to_relative: nonpositive total");
  const double n = table.n_total;
  for (auto& e : table.entries) e.freq /= n;
  table.n_total = 0.0;
  for (const auto& e : table.entries) table.n_total += e.freq;
  return table;
}

double top_diff_sum(const RankTable& table, int k) {
  if (k < 2) throw DomainError("top_diff_sum: k must be at least 2");
  if (static_cast<int>(table.entries.size()) < k)
    throw DomainError("top_diff_sum: table has " +
                      std::to_string(table.entries.size()) +
                      " entries, need " + std::to_string(k));
  if (table.n_total <= 0.0) throw DomainError("top_diff_sum: empty table");
  // telescoping sum of the first k-1 consecutive differences
  return table.entries[0].freq / table.n_total -
         table.entries[k - 1].freq / table.n_total;
}

void validate(const RankTable& table) {
  if (table.entries.empty()) throw DomainError("rank table: empty");
  double sum = 0.0;
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    const auto& e = table.entries[i];
    if (e.rank != static_cast<int>(i) + 1)
      throw DomainError("rank table: rank gap at position " +
                        std::to_string(i));
    if (e.freq <= 0.0)
      throw DomainError("rank table: nonpositive frequency at rank " +
                        std::to_string(e.rank));
    if (i > 0 && table.entries[i - 1].freq < e.freq)
      throw DomainError("rank table: frequencies increase at rank " +
                        std::to_string(e.rank));
    sum += e.freq;
  }
  if (std::abs(sum - table.n_total) >
      1e-9 * std::max(1.0, std::abs(table.n_total)))
    throw DomainError("rank table: frequencies do not sum to n_total");
}

}  // namespace speechrank
