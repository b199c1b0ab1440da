#include "speechrank/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "speechrank/errors.hpp"

namespace speechrank {

namespace {

int to_int(const std::string& key, const std::string& value) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw ParseError("config: bad integer for " + key + ": \"" + value + "\"");
  return v;
}

double to_double(const std::string& key, const std::string& value) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw ParseError("config: bad number for " + key + ": \"" + value + "\"");
  return v;
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ParseError("config: bad boolean for " + key + ": \"" + value + "\"");
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void set_axis(AxisSpec& axis, const std::string& key,
              const std::string& value) {
  // "low:high:steps"
  std::vector<std::string> parts;
  {
    std::stringstream ss(value);
    std::string p;
    while (std::getline(ss, p, ':')) parts.push_back(p);
  }
  if (parts.size() != 3)
    throw ParseError("config: " + key + " wants low:high:steps");
  axis.low = to_double(key, parts[0]);
  axis.high = to_double(key, parts[1]);
  axis.steps = to_int(key, parts[2]);
}

}  // namespace

void apply_config_entry(Config& cfg, const std::string& key,
                        const std::string& value) {
  if (key == "bracket_max_chars") {
    cfg.clean.bracket_max_chars = to_int(key, value);
  } else if (key == "audience_max_chars") {
    cfg.clean.audience_max_chars = to_int(key, value);
  } else if (key == "min_transcript_chars") {
    cfg.clean.min_transcript_chars = to_int(key, value);
  } else if (key == "banned_title_words") {
    cfg.clean.banned_title_words = split_list(value);
  } else if (key == "transcript_selector") {
    cfg.selectors.transcript = value;
  } else if (key == "resume_selector") {
    cfg.selectors.resume = value;
  } else if (key == "split_hyphens") {
    cfg.tokenizer.split_hyphens = to_bool(key, value);
  } else if (key == "tie_break") {
    if (value == "first_occurrence") {
      cfg.tie_break = TieBreak::first_occurrence;
    } else if (value == "lexicographic") {
      cfg.tie_break = TieBreak::lexicographic;
    } else {
      throw ParseError("config: unknown tie_break \"" + value + "\"");
    }
  } else if (key == "doubled_threshold") {
    cfg.doubled_threshold = to_double(key, value);
  } else if (key == "grid_alpha") {
    set_axis(cfg.grid.alpha, key, value);
  } else if (key == "grid_beta") {
    set_axis(cfg.grid.beta, key, value);
  } else if (key == "grid_gamma") {
    set_axis(cfg.grid.gamma, key, value);
  } else if (key == "tol_loss") {
    cfg.tol.loss = to_double(key, value);
  } else if (key == "tol_step") {
    cfg.tol.step = to_double(key, value);
  } else if (key == "max_iterations") {
    cfg.tol.max_iterations = to_int(key, value);
  } else {
    throw ParseError("config: unknown key \"" + key + "\"");
  }

  if (cfg.clean.bracket_max_chars <= 0 || cfg.clean.audience_max_chars <= 0 ||
      cfg.clean.min_transcript_chars <= 0)
    throw ParseError("config: thresholds must be positive");
}

Config load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config: " + path);
  Config cfg;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config row " + std::to_string(row) +
                       ": expected key=value");
    apply_config_entry(cfg, line.substr(0, eq), line.substr(eq + 1));
  }
  return cfg;
}

}  // namespace speechrank
