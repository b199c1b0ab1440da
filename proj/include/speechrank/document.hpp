#pragma once

#include <string>

#include "speechrank/date.hpp"

namespace speechrank {

enum class SourceFormat { html, plaintext };

// One row of the archive manifest: where a stored speech page lives.
struct DocumentRef {
  std::string id;
  std::string path;
  SourceFormat format = SourceFormat::plaintext;
};

// Fields pulled out of one archived speech page.
struct RawDocument {
  std::string speaker;
  std::string title;
  Date date;
  std::string body;    // transcript candidate
  std::string resume;  // summary section
  std::string source_id;
  bool resume_fallback = false;  // body was taken from the resume node
};

// Identity carried alongside tables and fits through the pipeline.
struct SpeechMeta {
  std::string id;
  std::string speaker;
  std::string title;
  Date date;
};

}  // namespace speechrank
