#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "speechrank/document.hpp"

namespace speechrank {

// CSS-ish selectors for the two configurable nodes of an archived page.
// Supported forms: "tag", ".class", "#id", "tag.class", "tag#id".
// The fixed parts of the page layout are: title in the first <h1>,
// date in the first element with class "date", speaker in the first
// element with class "speaker".
struct HtmlSelectors {
  std::string transcript = "div.transcript";
  std::string resume = "div.resume";
};

// Reads a manifest of archived pages: UTF-8, one record per line,
// tab-separated `id<TAB>format<TAB>path`, `#` lines ignored.
// Throws IoError if the file is missing, ParseError for a malformed row
// (message carries the row number) or a duplicate id.
std::vector<DocumentRef> load_manifest(const std::string& path);

// Pulls the document fields out of one archived page. `content` is the
// full page: HTML, or plaintext with a 4-line header
// (speaker / title / date / blank line) followed by the body.
// If the transcript node is empty but the resume node is not, the body is
// taken from the resume and `resume_fallback` is set.
// Throws DomainError when both nodes are empty (message carries ref.id).
RawDocument extract_document(const DocumentRef& ref, std::string_view content,
                             const HtmlSelectors& selectors = {});

// Drops repeated (title, date) pairs, keeping the first occurrence.
// Returns the kept documents (input order preserved) and the dropped titles.
std::pair<std::vector<RawDocument>, std::vector<std::string>> dedupe_by_title(
    std::vector<RawDocument> docs);

namespace html {
// First element matching `selector`, as plain text: tags replaced by a
// single space, entities decoded, outer whitespace trimmed. Empty string
// when nothing matches.
std::string select_text(std::string_view html, std::string_view selector);
}  // namespace html

}  // namespace speechrank
