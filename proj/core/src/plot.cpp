#include "ptwalk/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace ptwalk {

namespace {

constexpr double kWidth = 960.0, kHeight = 600.0;
constexpr double kLeft = 70.0, kRight = 790.0;   // plot area x range
constexpr double kTop = 40.0, kBottom = 545.0;   // plot area y range

const char* kPalette[] = {"#4878cf", "#d65f5f", "#e8a33d", "#6acc65",
                          "#956cb4", "#8c613c", "#dc7ec0", "#797979"};

std::string fmt(double x, const char* spec = "%.2f") {
  if (x == 0.0) x = 0.0;
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

// "0", "π/4", "-3π/4", "π" for multiples of 1/4 in pi units.
std::string pi_fraction_label(double v_pi) {
  const long n = std::lround(v_pi * 4.0);
  if (n == 0) return "0";
  const long g = std::gcd(std::labs(n), 4L);
  const long num = std::labs(n) / g;
  const long den = 4 / g;
  std::string s = n < 0 ? "-" : "";
  s += num == 1 ? "π" : std::to_string(num) + "π";
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

double nice_step(double target) {
  if (target <= 0.0) return 1.0;
  const double power = std::pow(10.0, std::floor(std::log10(target)));
  for (double mult : {1.0, 2.0, 5.0}) {
    if (mult * power >= target) return mult * power;
  }
  return 10.0 * power;
}

std::string svg_open() {
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth, "%.0f") +
       "\" height=\"" + fmt(kHeight, "%.0f") + "\" viewBox=\"0 0 " +
       fmt(kWidth, "%.0f") + " " + fmt(kHeight, "%.0f") + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return s;
}

std::string text(double x, double y, const std::string& content,
                 const char* anchor = "middle", int size = 13) {
  return "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) +
         "\" font-family=\"sans-serif\" font-size=\"" + std::to_string(size) +
         "\" text-anchor=\"" + anchor + "\">" + content + "</text>\n";
}

std::string line(double x1, double y1, double x2, double y2, const char* color,
                 double width = 1.0) {
  return "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
         "\" y2=\"" + fmt(y2) + "\" stroke=\"" + color + "\" stroke-width=\"" +
         fmt(width, "%.3g") + "\"/>\n";
}

std::string series_label(double beta_pi, std::optional<int> t) {
  std::string s = "β=" + fmt(beta_pi, "%.4g") + "π";
  if (t) s += ", t=" + std::to_string(*t);
  return s;
}

}  // namespace

std::string render_sweep_plot(const SweepResult& result, PlotQuantity quantity) {
  if (result.rows.empty()) throw NothingToPlot("empty result");

  // One series per (beta, t), points ordered by alpha (row order).
  std::map<std::pair<double, int>, std::vector<std::pair<double, double>>> series;
  std::set<double> alphas;
  for (const SweepRow& row : result.rows) {
    const std::optional<double>& y =
        quantity == PlotQuantity::diffusion ? row.diffusion : row.entropy_bits;
    if (!y) continue;
    alphas.insert(row.alpha_pi);
    series[{row.beta_pi, row.t.value_or(0)}].emplace_back(row.alpha_pi, *y);
  }
  if (alphas.size() < 2) {
    throw NothingToPlot("need at least two alpha values for a polyline (got " +
                        std::to_string(alphas.size()) + ")");
  }

  const double x_min = *alphas.begin(), x_max = *alphas.rbegin();
  double y_max = 0.0;
  for (const auto& [key, pts] : series) {
    for (const auto& [x, y] : pts) y_max = std::max(y_max, y);
  }
  if (y_max <= 0.0) y_max = 1.0;
  y_max *= 1.05;

  const auto sx = [&](double v) {
    return kLeft + (v - x_min) / (x_max - x_min) * (kRight - kLeft);
  };
  const auto sy = [&](double v) { return kBottom - v / y_max * (kBottom - kTop); };

  std::string svg = svg_open();
  svg += line(kLeft, kBottom, kRight, kBottom, "#333", 1.2);
  svg += line(kLeft, kTop, kLeft, kBottom, "#333", 1.2);

  // x ticks at multiples of pi/4
  const double tick0 = std::ceil(x_min / 0.25 - 1e-9) * 0.25;
  for (double v = tick0; v <= x_max + 1e-9; v += 0.25) {
    const double x = sx(v);
    svg += line(x, kBottom, x, kBottom + 6, "#333");
    svg += text(x, kBottom + 22, pi_fraction_label(v));
  }
  svg += text((kLeft + kRight) / 2, kHeight - 12, "α");

  const double step = nice_step(y_max / 4.0);
  for (double v = 0.0; v <= y_max + 1e-12; v += step) {
    const double y = sy(v);
    svg += line(kLeft - 6, y, kLeft, y, "#333");
    svg += line(kLeft, y, kRight, y, "#eee");
    svg += text(kLeft - 10, y + 4, fmt(v, "%.6g"), "end", 12);
  }
  svg += text(22, (kTop + kBottom) / 2,
              quantity == PlotQuantity::diffusion ? "D" : "S (bits)");

  int idx = 0;
  double legend_y = kTop + 8;
  for (const auto& [key, pts] : series) {
    const char* color = kPalette[idx % 8];
    std::string points;
    for (const auto& [x, y] : pts) {
      points += fmt(sx(x)) + "," + fmt(sy(y)) + " ";
    }
    svg += "<polyline class=\"series\" fill=\"none\" stroke=\"" +
           std::string(color) + "\" stroke-width=\"1.6\" points=\"" + points +
           "\"/>\n";
    svg += line(kRight + 14, legend_y, kRight + 42, legend_y, color, 2.0);
    svg += text(kRight + 48, legend_y + 4,
                series_label(key.first, key.second), "start", 12);
    legend_y += 20;
    ++idx;
  }

  svg += "</svg>\n";
  return svg;
}

std::string render_phase_diagram_plot(const PhaseDiagramResult& diagram) {
  const std::size_t na = diagram.alphas_pi.size();
  const std::size_t nb = diagram.betas_pi.size();
  if (na == 0 || nb == 0 || diagram.table.rows.empty()) {
    throw NothingToPlot("empty phase diagram");
  }

  const double cw = (kRight - kLeft) / static_cast<double>(na);
  const double ch = (kBottom - kTop) / static_cast<double>(nb);
  const auto fill_for = [](const SweepRow& row) -> const char* {
    if (!row.winding) return "#d62728";  // boundary / unresolved
    switch (*row.winding) {
      case 0: return "#e8eef7";
      case 1: return "#4878cf";
      case -1: return "#e8a33d";
      default: return "#59a89c";
    }
  };

  std::string svg = svg_open();
  std::set<std::string> kinds;
  for (std::size_t ib = 0; ib < nb; ++ib) {
    for (std::size_t ia = 0; ia < na; ++ia) {
      const SweepRow& row = diagram.table.rows[ib * na + ia];
      const double x = kLeft + static_cast<double>(ia) * cw;
      // beta grows upward
      const double y = kBottom - static_cast<double>(ib + 1) * ch;
      const bool boundary = !row.winding.has_value();
      kinds.insert(boundary ? "boundary"
                            : "W = " + std::to_string(*row.winding));
      svg += "<rect class=\"cell" + std::string(boundary ? " boundary" : "") +
             "\" x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" width=\"" +
             fmt(cw + 0.5) + "\" height=\"" + fmt(ch + 0.5) + "\" fill=\"" +
             fill_for(row) + "\"/>\n";
    }
  }

  // ticks at multiples of pi/4, placed at cell centers of the nearest value
  const auto tick_axis = [&](const std::vector<double>& vals, bool is_x) {
    if (vals.size() < 2) return std::string();
    const double d = vals[1] - vals[0];
    std::string out;
    const double lo = vals.front(), hi = vals.back();
    const double tick0 = std::ceil(lo / 0.25 - 1e-9) * 0.25;
    for (double v = tick0; v <= hi + 1e-9; v += 0.25) {
      const double frac = (v - lo) / d + 0.5;
      if (is_x) {
        const double x = kLeft + frac * cw;
        out += line(x, kBottom, x, kBottom + 6, "#333");
        out += text(x, kBottom + 22, pi_fraction_label(v));
      } else {
        const double y = kBottom - frac * ch;
        out += line(kLeft - 6, y, kLeft, y, "#333");
        out += text(kLeft - 10, y + 4, pi_fraction_label(v), "end", 12);
      }
    }
    return out;
  };
  svg += tick_axis(diagram.alphas_pi, true);
  svg += tick_axis(diagram.betas_pi, false);
  svg += text((kLeft + kRight) / 2, kHeight - 12, "α");
  svg += text(22, (kTop + kBottom) / 2, "β");

  double legend_y = kTop + 8;
  for (const std::string& kind : kinds) {
    const char* color = kind == "boundary"  ? "#d62728"
                        : kind == "W = 0"   ? "#e8eef7"
                        : kind == "W = 1"   ? "#4878cf"
                        : kind == "W = -1"  ? "#e8a33d"
                                            : "#59a89c";
    svg += "<rect x=\"" + fmt(kRight + 14) + "\" y=\"" + fmt(legend_y - 9) +
           "\" width=\"16\" height=\"12\" fill=\"" + color +
           "\" stroke=\"#777\"/>\n";
    svg += text(kRight + 38, legend_y + 2, kind, "start", 12);
    legend_y += 20;
  }

  svg += "</svg>\n";
  return svg;
}

namespace {

void write_file(const std::string& doc, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  file.write(doc.data(), static_cast<std::streamsize>(doc.size()));
  file.flush();
  if (!file) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace

void emit_plot(const SweepResult& result, PlotQuantity quantity,
               const std::filesystem::path& path) {
  write_file(render_sweep_plot(result, quantity), path);
}

void emit_plot(const PhaseDiagramResult& diagram,
               const std::filesystem::path& path) {
  write_file(render_phase_diagram_plot(diagram), path);
}

}  // namespace ptwalk
