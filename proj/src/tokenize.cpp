#include "speechrank/tokenize.hpp"

#include <cctype>

#include "speechrank/errors.hpp"

namespace speechrank {

namespace {

inline bool is_alpha(char c) {
  // bytes >= 0x80 are UTF-8 continuation/lead bytes of letters; keep them
  return std::isalpha(static_cast<unsigned char>(c)) != 0 ||
         static_cast<unsigned char>(c) >= 0x80;
}
inline bool is_digit(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

// Curly quotes (U+2018/U+2019) flattened to ASCII so the apostrophe rule
// sees them; double curly quotes flattened to '"' (separators either way).
std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (static_cast<unsigned char>(text[i]) == 0xE2 && i + 2 < text.size() &&
        static_cast<unsigned char>(text[i + 1]) == 0x80) {
      unsigned char b = static_cast<unsigned char>(text[i + 2]);
      if (b == 0x98 || b == 0x99) {  // ' '
        out += '\'';
        i += 2;
        continue;
      }
      if (b == 0x9C || b == 0x9D) {  // " "
        out += '"';
        i += 2;
        continue;
      }
    }
    out += text[i];
  }
  return out;
}

}  // namespace

TokenList tokenize(std::string_view raw, const TokenizerOptions& opt) {
  if (raw.empty()) throw DomainError("tokenize: empty input");
  const std::string text = normalize(raw);

  TokenList result;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      result.tokens.push_back(cur);
      cur.clear();
    }
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (is_alpha(c)) {
      cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      continue;
    }
    if (is_digit(c)) {
      cur += c;
      continue;
    }
    const bool prev_digit = i > 0 && is_digit(text[i - 1]);
    const bool next_digit = i + 1 < text.size() && is_digit(text[i + 1]);
    const bool prev_alpha = i > 0 && is_alpha(text[i - 1]);
    const bool next_alpha = i + 1 < text.size() && is_alpha(text[i + 1]);
    if ((c == ',' || c == '.') && prev_digit && next_digit) {
      cur += c;  // decimal / thousand separator
      continue;
    }
    if (c == '\'' && prev_alpha && next_alpha) {
      cur += c;  // contraction or possessive
      continue;
    }
    if (c == '-' && !opt.split_hyphens && prev_alpha && next_alpha) {
      cur += c;
      continue;
    }
    flush();  // whitespace and all remaining punctuation separate
  }
  flush();

  if (result.tokens.empty()) throw DomainError("tokenize: no tokens in input");
  return result;
}

}  // namespace speechrank
