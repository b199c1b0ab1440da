#pragma once

#include <string>
#include <vector>

#include "speechrank/config.hpp"
#include "speechrank/document.hpp"
#include "speechrank/export.hpp"
#include "speechrank/fit.hpp"

namespace speechrank {

// Workspace layout: raw/, clean/, tables/, fits/, plots/, report/.
// Every stage reads the previous stage's artifact and is independently
// re-runnable. All artifacts are deterministic: speeches are processed in
// (date, id) order and no timestamps are written, so identical inputs and
// config produce byte-identical workspaces regardless of --jobs.
struct Workspace {
  std::string root;

  std::string raw_dir() const;
  std::string clean_dir() const;
  std::string tables_dir() const;
  std::string fits_dir() const;
  std::string plots_dir() const;
  std::string report_dir() const;
};

struct StageCounts {
  int processed = 0;
  int excluded = 0;
};

// manifest -> raw/documents.jsonl (+ raw/exclusions.csv for extraction
// failures, raw/duplicates.csv for dropped titles).
StageCounts run_ingest(const Workspace& ws, const std::string& manifest_path,
                       const Config& cfg, int jobs = 1);

// raw/documents.jsonl -> clean/transcripts.jsonl + clean/exclusions.csv.
StageCounts run_clean(const Workspace& ws, const Config& cfg, int jobs = 1);

// clean/transcripts.jsonl -> tables/<id>.csv + tables/index.csv +
// tables/wide.csv.
StageCounts run_tokenize(const Workspace& ws, const Config& cfg,
                         int jobs = 1);

// tables/ -> fits/fits_<mode>.csv (tidy per-speech rows).
StageCounts run_fit(const Workspace& ws, const Config& cfg, FitMode mode,
                    int jobs = 1);

// fits/ + tables/ -> report/summary.csv + report/summary.txt.
void run_report(const Workspace& ws, const Config& cfg);

// tables/ + fits/ -> plots/<id>_<mode>.svg.
StageCounts run_plot(const Workspace& ws, const Config& cfg, FitMode mode,
                     PlotStyle style, int jobs = 1);

// The whole pipeline; fits and plots both modes.
void run_all(const Workspace& ws, const std::string& manifest_path,
             const Config& cfg, int jobs = 1,
             PlotStyle style = PlotStyle::linear);

}  // namespace speechrank
