#include "speechrank/cleanse.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>

namespace speechrank {

namespace {

inline bool is_alpha(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}
inline bool is_digit(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) != 0;
}
inline bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}
inline bool is_lower(char c) {
  return std::islower(static_cast<unsigned char>(c)) != 0;
}
inline bool is_upper(char c) {
  return std::isupper(static_cast<unsigned char>(c)) != 0;
}
inline bool is_punct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

void note(std::vector<AuditEntry>* audit, std::string phase, std::string text,
          std::int64_t delta) {
  if (audit) audit->push_back({std::move(phase), std::move(text), delta});
}

std::string preview(std::string_view s, std::size_t cap = 40) {
  std::string out(s.substr(0, cap));
  for (auto& c : out)
    if (c == '\n' || c == '\r' || c == '\t') c = ' ';
  if (s.size() > cap) out += "...";
  return out;
}

bool starts_with_at(std::string_view text, std::size_t pos,
                    std::string_view prefix) {
  return text.substr(pos, prefix.size()) == prefix;
}

bool iequal_span(std::string_view text, std::size_t pos,
                 std::string_view word) {
  if (pos + word.size() > text.size()) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(text[pos + i])) !=
        std::tolower(static_cast<unsigned char>(word[i])))
      return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(ExclusionReason reason) {
  switch (reason) {
    case ExclusionReason::banned_title: return "banned-title";
    case ExclusionReason::too_short: return "too-short";
    case ExclusionReason::extraction_failed: return "extraction-failed";
    case ExclusionReason::press_conference_unmarked:
      return "press-conference-unmarked";
  }
  return "unknown";
}

std::string speaker_surname(std::string_view speaker) {
  std::size_t end = speaker.size();
  while (end > 0 && is_space(speaker[end - 1])) --end;
  std::size_t start = end;
  while (start > 0 && !is_space(speaker[start - 1])) --start;
  return std::string(speaker.substr(start, end - start));
}

std::string fix_period_merge(std::string_view text,
                             std::vector<AuditEntry>* audit) {
  std::string out;
  out.reserve(text.size() + 16);
  std::int64_t inserted = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    out += text[i];
    if (text[i] == '.' && i > 0 && i + 1 < text.size() &&
        is_alpha(text[i - 1]) && is_alpha(text[i + 1])) {
      out += ' ';
      ++inserted;
    }
  }
  if (inserted)
    note(audit, "fix-period-merge",
         "inserted " + std::to_string(inserted) + " space(s) after periods",
         inserted);
  return out;
}

std::string fix_number_word_merge(std::string_view text,
                                  std::vector<AuditEntry>* audit) {
  std::string out;
  out.reserve(text.size() + 16);
  std::int64_t inserted = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i > 0 && ((is_alpha(text[i - 1]) && is_digit(text[i])) ||
                  (is_digit(text[i - 1]) && is_alpha(text[i])))) {
      out += ' ';
      ++inserted;
    }
    out += text[i];
  }
  if (inserted)
    note(audit, "fix-number-word-merge",
         "split " + std::to_string(inserted) + " letter/digit boundary(ies)",
         inserted);
  return out;
}

std::string fix_case_merge(std::string_view text,
                           std::vector<AuditEntry>* audit) {
  std::string out;
  out.reserve(text.size() + 16);
  std::int64_t inserted = 0;
  std::string subs;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i > 0 && is_lower(text[i - 1]) && is_upper(text[i])) {
      // remainder of the word must be lowercase
      std::size_t end = i + 1;
      while (end < text.size() && is_alpha(text[end])) ++end;
      bool rest_lower = true;
      for (std::size_t j = i + 1; j < end; ++j)
        if (!is_lower(text[j])) rest_lower = false;
      // token prefix before the boundary; Mc/Mac stay together
      std::size_t start = i;
      while (start > 0 && is_alpha(text[start - 1])) --start;
      std::string_view prefix = text.substr(start, i - start);
      bool whitelisted = prefix == "Mc" || prefix == "Mac";
      if (rest_lower && !whitelisted) {
        out += ' ';
        ++inserted;
        if (!subs.empty()) subs += "; ";
        subs += preview(text.substr(start, end - start));
      }
    }
    out += text[i];
  }
  if (inserted)
    note(audit, "fix-case-merge", "split merged words: " + subs, inserted);
  return out;
}

std::string strip_bracketed(std::string_view text, const CleanConfig& cfg,
                            std::vector<AuditEntry>* audit) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '(' || c == '[') {
      const char closer = c == '(' ? ')' : ']';
      std::size_t depth = 1;
      std::size_t j = i + 1;
      while (j < text.size() && depth > 0) {
        if (text[j] == c) ++depth;
        else if (text[j] == closer) --depth;
        if (depth == 0) break;
        ++j;
      }
      if (depth == 0) {
        std::int64_t inner = static_cast<std::int64_t>(j - i - 1);
        if (inner <= cfg.bracket_max_chars) {
          note(audit, "strip-bracketed",
               "removed \"" + preview(text.substr(i, j - i + 1)) + "\"",
               -static_cast<std::int64_t>(j - i + 1));
          i = j + 1;
          continue;
        }
        // longer than the threshold: a typo, not content to eliminate
        note(audit, "strip-bracketed",
             "kept suspected typo span of " + std::to_string(inner) +
                 " chars at offset " + std::to_string(i),
             0);
        out.append(text.substr(i, j - i + 1));
        i = j + 1;
        continue;
      }
      // no matching closer at all: missing-bracket typo, kept
      note(audit, "strip-bracketed",
           std::string("kept unmatched '") + c + "' at offset " +
               std::to_string(i),
           0);
      out += c;
      ++i;
      continue;
    }
    out += c;
    ++i;
  }
  return out;
}

namespace {

// Standalone question marker: uppercase Q at a token start, followed by
// punctuation or a space, not preceded by a single-letter initial.
std::size_t find_question_marker(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'Q') continue;
    if (i > 0 && !is_space(text[i - 1])) continue;
    if (i + 1 >= text.size()) continue;
    if (!is_space(text[i + 1]) && !is_punct(text[i + 1])) continue;
    // lookbehind: "J. Q. Adams" style initials do not open a question
    if (i > 0) {
      std::size_t k = i - 1;
      while (k > 0 && is_space(text[k])) --k;
      if (text[k] == '.' && k > 0 && is_alpha(text[k - 1]) &&
          (k - 1 == 0 || !is_alpha(text[k - 2]))) {
        continue;
      }
    }
    return i;
  }
  return std::string_view::npos;
}

struct MarkerHit {
  std::size_t begin = std::string_view::npos;  // marker start
  std::size_t end = 0;                         // one past marker (+ colon + ws)
};

// "THE PRESIDENT" (+ optional ':' or '.') or "President <Capitalized>:".
MarkerHit find_president_marker(std::string_view text, std::size_t from) {
  for (std::size_t i = from; i < text.size(); ++i) {
    if (i > 0 && is_alpha(text[i - 1])) continue;
    if (starts_with_at(text, i, "THE PRESIDENT")) {
      std::size_t e = i + 13;
      if (e < text.size() && (text[e] == ':' || text[e] == '.')) ++e;
      while (e < text.size() && text[e] == ' ') ++e;
      return {i, e};
    }
    if (starts_with_at(text, i, "President ")) {
      std::size_t s = i + 10;
      if (s < text.size() && is_upper(text[s])) {
        std::size_t e = s + 1;
        while (e < text.size() && is_lower(text[e])) ++e;
        if (e < text.size() && text[e] == ':') {
          ++e;
          while (e < text.size() && text[e] == ' ') ++e;
          return {i, e};
        }
      }
    }
  }
  return {};
}

// One of the audience markers followed by a colon.
MarkerHit find_audience_marker(std::string_view text, std::size_t from) {
  static constexpr std::string_view kMarkers[] = {
      "THE AUDIENCE", "AUDIENCE MEMBER", "AUDIENCE", "Audience"};
  for (std::size_t i = from; i < text.size(); ++i) {
    if (i > 0 && is_alpha(text[i - 1])) continue;
    for (auto m : kMarkers) {
      if (starts_with_at(text, i, m) && i + m.size() < text.size() &&
          text[i + m.size()] == ':') {
        return {i, i + m.size() + 1};
      }
    }
  }
  return {};
}

}  // namespace

std::string strip_questions(std::string_view text,
                            std::vector<AuditEntry>* audit) {
  std::size_t pos = find_question_marker(text);
  if (pos == std::string_view::npos) return std::string(text);
  note(audit, "strip-questions",
       "removed question tail from offset " + std::to_string(pos),
       -static_cast<std::int64_t>(text.size() - pos));
  return std::string(text.substr(0, pos));
}

std::string strip_audience(std::string_view text, const CleanConfig& cfg,
                           std::vector<AuditEntry>* audit) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    MarkerHit aud = find_audience_marker(text, i);
    if (aud.begin == std::string_view::npos) {
      out.append(text.substr(i));
      break;
    }
    out.append(text.substr(i, aud.begin - i));
    MarkerHit pres = find_president_marker(text, aud.end);
    if (pres.begin == std::string_view::npos) {
      // no president marker follows; removal would be unbounded
      note(audit, "strip-audience",
           "kept unbounded audience span at offset " +
               std::to_string(aud.begin),
           0);
      out.append(text.substr(aud.begin));
      break;
    }
    std::size_t selected = pres.begin - aud.begin;
    if (selected <= static_cast<std::size_t>(cfg.audience_max_chars)) {
      note(audit, "strip-audience",
           "removed audience span \"" +
               preview(text.substr(aud.begin, pres.end - aud.begin)) + "\"",
           -static_cast<std::int64_t>(pres.end - aud.begin));
      i = pres.end;
    } else {
      // too long to cancel safely; likely a missing president marker.
      // Rescan right after this marker so later pairs still match up.
      note(audit, "strip-audience",
           "kept audience span of " + std::to_string(selected) +
               " chars at offset " + std::to_string(aud.begin),
           0);
      out.append(text.substr(aud.begin, aud.end - aud.begin));
      i = aud.end;
    }
  }
  return out;
}

std::string strip_spouse(std::string_view text, std::string_view surname,
                         std::vector<AuditEntry>* audit) {
  if (surname.empty()) return std::string(text);
  for (std::size_t i = 0; i + 5 + surname.size() <= text.size(); ++i) {
    if (!starts_with_at(text, i, "Mrs. ") && !starts_with_at(text, i, "MRS. "))
      continue;
    std::size_t s = i + 5;
    if (!iequal_span(text, s, surname)) continue;
    std::size_t e = s + surname.size();
    if (e < text.size() && is_alpha(text[e])) continue;  // longer word
    note(audit, "strip-spouse",
         "removed spouse intervention from offset " + std::to_string(i),
         -static_cast<std::int64_t>(text.size() - i));
    return std::string(text.substr(0, i));
  }
  return std::string(text);
}

std::string strip_leading_marker(std::string_view text,
                                 std::string_view surname,
                                 std::vector<AuditEntry>* audit) {
  std::size_t i = 0;
  while (i < text.size() && is_space(text[i])) ++i;

  std::size_t after = std::string_view::npos;
  for (std::string_view m : {std::string_view("THE PRESIDENT"),
                             std::string_view("The President")}) {
    if (!starts_with_at(text, i, m)) continue;
    std::size_t e = i + m.size();
    if (e < text.size() && (text[e] == ':' || text[e] == '.')) {
      after = e + 1;
      break;
    }
    // "The President <surname>"
    if (e < text.size() && text[e] == ' ' && !surname.empty() &&
        iequal_span(text, e + 1, surname)) {
      std::size_t s = e + 1 + surname.size();
      if (s >= text.size() || !is_alpha(text[s])) {
        if (s < text.size() && (text[s] == ':' || text[s] == '.')) ++s;
        after = s;
        break;
      }
    }
  }
  if (after == std::string_view::npos) return std::string(text);
  while (after < text.size() && is_space(text[after])) ++after;
  note(audit, "strip-leading-marker",
       "removed leading president marker",
       -static_cast<std::int64_t>(after));
  return std::string(text.substr(after));
}

CleanResult clean(const RawDocument& doc, const CleanConfig& cfg) {
  for (const auto& word : cfg.banned_title_words) {
    if (doc.title.find(word) != std::string::npos) {
      return Excluded{ExclusionReason::banned_title,
                      "title contains \"" + word + "\""};
    }
  }
  // press conferences whose questions carry no marker are mostly not the
  // speaker's words
  if (doc.title.find("Press Conference") != std::string::npos &&
      find_question_marker(doc.body) == std::string_view::npos) {
    return Excluded{ExclusionReason::press_conference_unmarked,
                    "press conference without question markers"};
  }

  Transcript t;
  t.speaker = doc.speaker;
  t.title = doc.title;
  t.date = doc.date;
  if (doc.resume_fallback) {
    t.audit.push_back(
        {"extract", "resume fallback: transcript taken from resume node", 0});
  }
  const std::string surname = speaker_surname(doc.speaker);

  std::string text = fix_period_merge(doc.body, &t.audit);
  text = fix_number_word_merge(text, &t.audit);
  text = fix_case_merge(text, &t.audit);
  text = strip_bracketed(text, cfg, &t.audit);
  text = strip_questions(text, &t.audit);
  text = strip_audience(text, cfg, &t.audit);
  text = strip_spouse(text, surname, &t.audit);
  text = strip_leading_marker(text, surname, &t.audit);

  if (text.size() < static_cast<std::size_t>(cfg.min_transcript_chars)) {
    return Excluded{ExclusionReason::too_short,
                    std::to_string(text.size()) + " chars after cleaning"};
  }
  t.text = std::move(text);
  return t;
}

}  // namespace speechrank
