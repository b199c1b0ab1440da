#pragma once

#include <string>

#include "speechrank/cleanse.hpp"
#include "speechrank/fit.hpp"
#include "speechrank/grid_search.hpp"
#include "speechrank/ingest.hpp"
#include "speechrank/rank_table.hpp"
#include "speechrank/tokenize.hpp"

namespace speechrank {

// Everything tunable, loadable from a UTF-8 key=value file and overridable
// by CLI flags. Unknown keys are errors.
struct Config {
  CleanConfig clean;
  HtmlSelectors selectors;
  TokenizerOptions tokenizer;
  TieBreak tie_break = TieBreak::first_occurrence;
  double doubled_threshold = 0.2;
  GridSpec grid;  // relative-frequency lattice; alpha scaled by N for absolute
  FitTolerances tol;
};

Config load_config(const std::string& path);

// Applies one "key=value" assignment; throws ParseError for unknown keys or
// unparsable values. Exposed so CLI overrides share the parsing.
void apply_config_entry(Config& cfg, const std::string& key,
                        const std::string& value);

}  // namespace speechrank
