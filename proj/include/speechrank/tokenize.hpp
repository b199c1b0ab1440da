#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace speechrank {

struct TokenizerOptions {
  // Hyphenated words split into two tokens by default.
  bool split_hyphens = true;
};

struct TokenList {
  std::vector<std::string> tokens;

  std::size_t n_total() const { return tokens.size(); }
};

// Whitespace split with boundary punctuation stripped. Kept inside tokens:
// ',' and '.' when digits flank them (decimal and thousand separators),
// apostrophes when letters flank them (contractions). Letters lowercased.
// Curly apostrophes are treated as apostrophes. Throws DomainError when no
// token survives.
TokenList tokenize(std::string_view text, const TokenizerOptions& opt = {});

}  // namespace speechrank
