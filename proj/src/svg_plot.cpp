#include <cmath>
#include <fstream>
#include <string>

#include "speechrank/errors.hpp"
#include "speechrank/export.hpp"
#include "speechrank/zml.hpp"

namespace speechrank {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 72.0;
constexpr double kRight = 700.0;
constexpr double kTop = 56.0;
constexpr double kBottom = 432.0;

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string round2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

void emit_plot(const RankTable& table, const FitResult& fit,
               const std::string& path, PlotStyle style) {
  const int r_max = static_cast<int>(table.n_distinct());
  if (r_max == 0) throw DomainError("emit_plot: empty table");
  if (fit.r_max != r_max)
    throw DomainError("emit_plot: fit was not produced from this table");

  // observed and fitted values in plot coordinates
  const bool loglog = style == PlotStyle::loglog;
  auto xval = [&](int r) {
    return loglog ? std::log10(static_cast<double>(r))
                  : static_cast<double>(r);
  };
  auto yval = [&](double f) { return loglog ? std::log10(f) : f; };

  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();
  for (int r = 1; r <= r_max; ++r) {
    const double obs = table.entries[r - 1].freq;
    const double mod = zml_eval(fit.params, r);
    for (double v : {obs, mod}) {
      if (loglog && v <= 0.0) continue;
      ymin = std::min(ymin, yval(v));
      ymax = std::max(ymax, yval(v));
    }
  }
  if (!(ymax > ymin)) ymax = ymin + 1.0;
  if (!loglog) ymin = 0.0;

  const double x0 = xval(1), x1 = xval(r_max);
  const double xspan = x1 > x0 ? x1 - x0 : 1.0;
  auto px = [&](double x) {
    return kLeft + (x - x0) / xspan * (kRight - kLeft);
  };
  auto py = [&](double y) {
    return kBottom - (y - ymin) / (ymax - ymin) * (kBottom - kTop);
  };

  const char* sym = fit.mode == FitMode::relative ? "α̃" : "α";
  std::string caption = std::string(sym) + "=" + round2(fit.params.alpha) +
                        "; β=" + round2(fit.params.beta) +
                        "; γ=" + round2(fit.params.gamma) +
                        "; N=" + std::to_string(static_cast<long long>(
                                     std::llround(fit.n_total))) +
                        "; R²=" + round2(fit.r_squared);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" "
         "height=\"480\" viewBox=\"0 0 720 480\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"720\" height=\"480\" "
         "fill=\"white\"/>\n";
  svg += "<text x=\"72\" y=\"28\" font-family=\"sans-serif\" "
         "font-size=\"15\">" +
         xml_escape(caption) + "</text>\n";

  // axes
  svg += "<line x1=\"" + format_double(kLeft) + "\" y1=\"" +
         format_double(kBottom) + "\" x2=\"" + format_double(kRight) +
         "\" y2=\"" + format_double(kBottom) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + format_double(kLeft) + "\" y1=\"" +
         format_double(kTop) + "\" x2=\"" + format_double(kLeft) +
         "\" y2=\"" + format_double(kBottom) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  const std::string xlabel = loglog ? "log10 rank" : "rank";
  const std::string ylabel = std::string(loglog ? "log10 " : "") +
                             (fit.mode == FitMode::relative
                                  ? "relative frequency"
                                  : "frequency");
  svg += "<text x=\"386\" y=\"470\" font-family=\"sans-serif\" "
         "font-size=\"13\" text-anchor=\"middle\">" +
         xlabel + "</text>\n";
  svg += "<text x=\"18\" y=\"244\" font-family=\"sans-serif\" "
         "font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
         "244)\">" +
         ylabel + "</text>\n";

  // fitted curve sampled at every integer rank
  svg += "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" "
         "points=\"";
  for (int r = 1; r <= r_max; ++r) {
    const double v = zml_eval(fit.params, r);
    if (loglog && v <= 0.0) continue;
    if (r > 1) svg += ' ';
    svg += format_double(px(xval(r))) + "," + format_double(py(yval(v)));
  }
  svg += "\"/>\n";

  // observed points
  for (int r = 1; r <= r_max; ++r) {
    const double v = table.entries[r - 1].freq;
    if (loglog && v <= 0.0) continue;
    svg += "<circle cx=\"" + format_double(px(xval(r))) + "\" cy=\"" +
           format_double(py(yval(v))) +
           "\" r=\"2\" fill=\"#2e6da4\" fill-opacity=\"0.8\"/>\n";
  }
  svg += "</svg>\n";

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write plot: " + path);
  out << svg;
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace speechrank
