#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "speechrank/document.hpp"

namespace speechrank {

struct CleanConfig {
  // Bracketed spans longer than this are treated as typos and kept.
  int bracket_max_chars = 600;
  // Audience spans longer than this are left in place.
  int audience_max_chars = 400;
  // Cleaned transcripts shorter than this are excluded.
  int min_transcript_chars = 600;
  std::vector<std::string> banned_title_words = {"Debate", "Conversation"};
};

struct AuditEntry {
  std::string phase;
  std::string note;
  std::int64_t delta = 0;  // chars inserted (+) or removed (-)
};

struct Transcript {
  std::string speaker;
  std::string title;
  Date date;
  std::string text;
  std::vector<AuditEntry> audit;
};

enum class ExclusionReason {
  banned_title,
  too_short,
  extraction_failed,
  press_conference_unmarked,
};

std::string_view to_string(ExclusionReason reason);

struct Excluded {
  ExclusionReason reason;
  std::string detail;
};

using CleanResult = std::variant<Transcript, Excluded>;

// --- typo fixes (never shorten the text) ---

// letter '.' letter -> letter '.' ' ' letter; decimal digits untouched.
std::string fix_period_merge(std::string_view text,
                             std::vector<AuditEntry>* audit = nullptr);

// space at every letter<->digit boundary; thousand separators preserved.
std::string fix_number_word_merge(std::string_view text,
                                  std::vector<AuditEntry>* audit = nullptr);

// space at a lowercase->uppercase boundary when the remainder of the token
// is lowercase; "Mc"/"Mac" prefixes are whitelisted. Every substitution is
// audited so a human pass can review them.
std::string fix_case_merge(std::string_view text,
                           std::vector<AuditEntry>* audit = nullptr);

// --- strips (never lengthen the text) ---

// Removes balanced (...) and [...] spans whose content is at most
// cfg.bracket_max_chars. Longer or unclosed spans are suspected typos:
// kept verbatim and audited.
std::string strip_bracketed(std::string_view text, const CleanConfig& cfg,
                            std::vector<AuditEntry>* audit = nullptr);

// Removes everything from the first standalone question marker ("Q" followed
// by punctuation or a space) to the end. A "Q" preceded by another
// single-letter initial ("J. Q. Adams") does not trigger.
std::string strip_questions(std::string_view text,
                            std::vector<AuditEntry>* audit = nullptr);

// Removes spans from an audience marker to the next president marker when
// the span is at most cfg.audience_max_chars; longer or unbounded spans are
// kept and audited.
std::string strip_audience(std::string_view text, const CleanConfig& cfg,
                           std::vector<AuditEntry>* audit = nullptr);

// Removes everything from "Mrs. <surname>" onward.
std::string strip_spouse(std::string_view text, std::string_view surname,
                         std::vector<AuditEntry>* audit = nullptr);

// Deletes a leading "THE PRESIDENT:" / "The President:" /
// "The President <surname>" marker; interior occurrences are untouched.
std::string strip_leading_marker(std::string_view text,
                                 std::string_view surname,
                                 std::vector<AuditEntry>* audit = nullptr);

// Full phase pipeline over one document: title filters, typo fixes, strips,
// length filter. Exclusion is a value, not an error.
CleanResult clean(const RawDocument& doc, const CleanConfig& cfg = {});

// Last word of the speaker name; used for the spouse and leading markers.
std::string speaker_surname(std::string_view speaker);

}  // namespace speechrank
