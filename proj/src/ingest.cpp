#include "speechrank/ingest.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "speechrank/errors.hpp"

namespace speechrank {

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

}  // namespace

std::vector<DocumentRef> load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open manifest: " + path);

  std::vector<DocumentRef> refs;
  std::unordered_set<std::string> seen;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? std::string::npos
                                      : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos ||
        line.find('\t', t2 + 1) != std::string::npos) {
      throw ParseError("manifest row " + std::to_string(row) +
                       ": expected id<TAB>format<TAB>path");
    }
    DocumentRef ref;
    ref.id = line.substr(0, t1);
    std::string format = line.substr(t1 + 1, t2 - t1 - 1);
    ref.path = line.substr(t2 + 1);
    if (ref.id.empty() || ref.path.empty()) {
      throw ParseError("manifest row " + std::to_string(row) +
                       ": empty id or path");
    }
    if (format == "html") {
      ref.format = SourceFormat::html;
    } else if (format == "plaintext") {
      ref.format = SourceFormat::plaintext;
    } else {
      throw ParseError("manifest row " + std::to_string(row) +
                       ": unknown format \"" + format + "\"");
    }
    if (!seen.insert(ref.id).second) {
      throw ParseError("manifest row " + std::to_string(row) +
                       ": duplicate id \"" + ref.id + "\"");
    }
    refs.push_back(std::move(ref));
  }
  return refs;
}

// ---------------------------------------------------------------------------
// Minimal HTML scanning, enough for the archived-page layout.

namespace html {

namespace {

struct Selector {
  std::string tag;  // empty = any
  std::string cls;
  std::string id;
};

Selector parse_selector(std::string_view s) {
  Selector sel;
  auto dot = s.find('.');
  auto hash = s.find('#');
  auto cut = std::min(dot, hash);
  sel.tag = std::string(s.substr(0, cut));
  if (dot != std::string_view::npos) sel.cls = std::string(s.substr(dot + 1));
  if (hash != std::string_view::npos) sel.id = std::string(s.substr(hash + 1));
  return sel;
}

// Attribute value inside an open tag, or empty.
std::string attr_value(std::string_view tag_body, std::string_view name) {
  std::size_t pos = 0;
  while (pos < tag_body.size()) {
    auto hit = tag_body.find(name, pos);
    if (hit == std::string_view::npos) return {};
    // must be a standalone attribute name followed by '='
    bool starts_ok = hit == 0 || std::isspace(static_cast<unsigned char>(
                                     tag_body[hit - 1]));
    std::size_t after = hit + name.size();
    while (after < tag_body.size() &&
           std::isspace(static_cast<unsigned char>(tag_body[after])))
      ++after;
    if (!starts_ok || after >= tag_body.size() || tag_body[after] != '=') {
      pos = hit + 1;
      continue;
    }
    ++after;
    while (after < tag_body.size() &&
           std::isspace(static_cast<unsigned char>(tag_body[after])))
      ++after;
    if (after >= tag_body.size()) return {};
    char q = tag_body[after];
    if (q == '"' || q == '\'') {
      auto end = tag_body.find(q, after + 1);
      if (end == std::string_view::npos) return {};
      return std::string(tag_body.substr(after + 1, end - after - 1));
    }
    auto end = after;
    while (end < tag_body.size() &&
           !std::isspace(static_cast<unsigned char>(tag_body[end])) &&
           tag_body[end] != '>')
      ++end;
    return std::string(tag_body.substr(after, end - after));
  }
  return {};
}

bool class_list_contains(std::string_view classes, std::string_view want) {
  std::size_t pos = 0;
  while (pos <= classes.size()) {
    auto end = classes.find(' ', pos);
    if (end == std::string_view::npos) end = classes.size();
    if (iequals(classes.substr(pos, end - pos), want)) return true;
    if (end == classes.size()) break;
    pos = end + 1;
  }
  return false;
}

void append_codepoint(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Tags become single spaces, entities are decoded, script/style/comment
// content is dropped.
std::string to_text(std::string_view markup) {
  std::string out;
  out.reserve(markup.size());
  std::size_t i = 0;
  while (i < markup.size()) {
    char c = markup[i];
    if (c == '<') {
      if (markup.substr(i, 4) == "<!--") {
        auto end = markup.find("-->", i + 4);
        i = end == std::string_view::npos ? markup.size() : end + 3;
        out += ' ';
        continue;
      }
      auto close = markup.find('>', i);
      if (close == std::string_view::npos) break;
      std::string_view tag = markup.substr(i + 1, close - i - 1);
      std::size_t name_end = 0;
      while (name_end < tag.size() &&
             (std::isalnum(static_cast<unsigned char>(tag[name_end]))))
        ++name_end;
      std::string_view name = tag.substr(0, name_end);
      if (iequals(name, "script") || iequals(name, "style")) {
        std::string closer = "</" + std::string(name);
        auto end = markup.find(closer, close);
        if (end == std::string_view::npos) {
          i = markup.size();
        } else {
          auto gt = markup.find('>', end);
          i = gt == std::string_view::npos ? markup.size() : gt + 1;
        }
        out += ' ';
        continue;
      }
      out += ' ';
      i = close + 1;
      continue;
    }
    if (c == '&') {
      auto semi = markup.find(';', i);
      if (semi != std::string_view::npos && semi - i <= 10) {
        std::string_view ent = markup.substr(i + 1, semi - i - 1);
        if (ent == "amp") {
          out += '&';
        } else if (ent == "lt") {
          out += '<';
        } else if (ent == "gt") {
          out += '>';
        } else if (ent == "quot") {
          out += '"';
        } else if (ent == "apos") {
          out += '\'';
        } else if (ent == "nbsp") {
          out += ' ';
        } else if (!ent.empty() && ent[0] == '#') {
          unsigned long cp = 0;
          try {
            cp = ent[1] == 'x' || ent[1] == 'X'
                     ? std::stoul(std::string(ent.substr(2)), nullptr, 16)
                     : std::stoul(std::string(ent.substr(1)));
          } catch (...) {
            cp = 0;
          }
          if (cp != 0 && cp <= 0x10FFFF) append_codepoint(out, cp);
        } else {
          out.append(markup.substr(i, semi - i + 1));
        }
        i = semi + 1;
        continue;
      }
    }
    out += c;
    ++i;
  }
  return std::string(trim_view(out));
}

}  // namespace

std::string select_text(std::string_view markup, std::string_view selector) {
  Selector sel = parse_selector(selector);
  std::size_t i = 0;
  while (i < markup.size()) {
    auto open = markup.find('<', i);
    if (open == std::string_view::npos) break;
    auto close = markup.find('>', open);
    if (close == std::string_view::npos) break;
    std::string_view tag_text = markup.substr(open + 1, close - open - 1);
    if (tag_text.empty() || tag_text[0] == '/' || tag_text[0] == '!') {
      i = close + 1;
      continue;
    }
    std::size_t name_end = 0;
    while (name_end < tag_text.size() &&
           std::isalnum(static_cast<unsigned char>(tag_text[name_end])))
      ++name_end;
    std::string_view name = tag_text.substr(0, name_end);
    std::string_view attrs = tag_text.substr(name_end);

    bool match = sel.tag.empty() || iequals(name, sel.tag);
    if (match && !sel.cls.empty())
      match = class_list_contains(attr_value(attrs, "class"), sel.cls);
    if (match && !sel.id.empty())
      match = iequals(attr_value(attrs, "id"), sel.id);
    bool self_closing = !tag_text.empty() && tag_text.back() == '/';

    if (match && !self_closing) {
      // inner span up to the matching close tag, same-name nesting respected
      std::size_t depth = 1;
      std::size_t pos = close + 1;
      while (pos < markup.size() && depth > 0) {
        auto next = markup.find('<', pos);
        if (next == std::string_view::npos) {
          pos = markup.size();
          break;
        }
        auto next_close = markup.find('>', next);
        if (next_close == std::string_view::npos) {
          pos = markup.size();
          break;
        }
        std::string_view t = markup.substr(next + 1, next_close - next - 1);
        if (!t.empty() && t[0] == '/') {
          if (iequals(trim_view(t.substr(1)), name)) --depth;
        } else {
          std::size_t e = 0;
          while (e < t.size() &&
                 std::isalnum(static_cast<unsigned char>(t[e])))
            ++e;
          if (iequals(t.substr(0, e), name) && (t.empty() || t.back() != '/'))
            ++depth;
        }
        if (depth == 0) return to_text(markup.substr(close + 1, next - close - 1));
        pos = next_close + 1;
      }
      return to_text(markup.substr(close + 1));  // unclosed: rest of document
    }
    i = close + 1;
  }
  return {};
}

}  // namespace html

RawDocument extract_document(const DocumentRef& ref, std::string_view content,
                             const HtmlSelectors& selectors) {
  RawDocument doc;
  doc.source_id = ref.id;

  if (ref.format == SourceFormat::plaintext) {
    // 4-line header: speaker / title / date / blank, then the body.
    std::string text(content);
    std::istringstream in(text);
    std::string speaker, title, date_line, blank;
    if (!std::getline(in, speaker) || !std::getline(in, title) ||
        !std::getline(in, date_line) || !std::getline(in, blank) ||
        !trim_view(blank).empty()) {
      throw ParseError("document \"" + ref.id +
                       "\": bad plaintext header (want speaker/title/date/blank)");
    }
    doc.speaker = std::string(trim_view(speaker));
    doc.title = std::string(trim_view(title));
    doc.date = parse_date(date_line);
    std::string body((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    doc.body = std::string(trim_view(body));
  } else {
    doc.body = html::select_text(content, selectors.transcript);
    doc.resume = html::select_text(content, selectors.resume);
    doc.title = html::select_text(content, "h1");
    doc.speaker = html::select_text(content, ".speaker");
    doc.date = parse_date(html::select_text(content, ".date"));
    if (doc.body.empty() && !doc.resume.empty()) {
      // transcript published in the resume section
      doc.body = doc.resume;
      doc.resume_fallback = true;
    }
  }

  if (doc.title.empty()) {
    throw ParseError("document \"" + ref.id + "\": empty title");
  }
  if (doc.body.empty() && doc.resume.empty()) {
    throw DomainError("extraction failed for \"" + ref.id +
                      "\": transcript and resume both empty");
  }
  return doc;
}

std::pair<std::vector<RawDocument>, std::vector<std::string>> dedupe_by_title(
    std::vector<RawDocument> docs) {
  std::vector<RawDocument> kept;
  std::vector<std::string> dropped;
  kept.reserve(docs.size());
  std::unordered_set<std::string> seen;
  for (auto& doc : docs) {
    std::string key = doc.title + '\x1f' + doc.date.to_iso();
    if (seen.insert(std::move(key)).second) {
      kept.push_back(std::move(doc));
    } else {
      dropped.push_back(doc.title);
    }
  }
  return {std::move(kept), std::move(dropped)};
}

}  // namespace speechrank
