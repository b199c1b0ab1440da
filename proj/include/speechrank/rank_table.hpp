#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "speechrank/tokenize.hpp"

namespace speechrank {

struct RankEntry {
  std::string token;
  double freq = 0.0;
  int rank = 0;  // 1-based, dense
};

// Rank-frequency table of one speech: frequencies non-increasing, ranks
// 1..n_distinct with no gaps, tokens unique, sum of freqs == n_total.
// Frequencies are reals so the transient 0.5 state of the doubled-transcript
// repair is representable; unrepaired tables carry exact integers.
struct RankTable {
  std::vector<RankEntry> entries;
  double n_total = 0.0;
  bool doubled_repair = false;

  std::size_t n_distinct() const { return entries.size(); }
};

enum class TieBreak {
  first_occurrence,  // deterministic and reproducible across runs
  lexicographic,
};

RankTable build_rank_table(const TokenList& tokens,
                           TieBreak ties = TieBreak::first_occurrence);

// Share of tokens occurring exactly once, over distinct tokens.
double hapax_ratio(const RankTable& table);

// A hapax ratio below `threshold` marks a transcript stored twice on the
// same page: frequencies are halved, entries landing at 0.5 dropped, ranks
// reassigned. Idempotent; healthy tables come back unchanged.
RankTable repair_doubled(RankTable table, double threshold = 0.2);

RankTable to_relative(RankTable table);

// Sum of the first k-1 frequency differences on relative frequencies,
// i.e. rel_freq(1) - rel_freq(k) by telescoping.
double top_diff_sum(const RankTable& table, int k = 6);

// Asserts the RankTable invariants; throws DomainError when violated.
void validate(const RankTable& table);

}  // namespace speechrank
