#include "pbs/charts.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace pbs {

namespace {

constexpr double kWidth = 720, kHeight = 440;
constexpr double kLeft = 70, kRight = 170, kTop = 40, kBottom = 60;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string tick_label(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", std::round(x * 1000.0) / 1000.0);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

// Round step to 1, 2 or 5 times a power of ten; about `target` ticks.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) return m * mag;
  }
  return 10.0 * mag;
}

}  // namespace

std::string render_svg(const LineChart& chart) {
  double x0 = 0, x1 = 1, y0 = 1, y1 = 1.1;
  bool any = false;
  for (const auto& s : chart.series) {
    for (const auto& [x, y] : s.points) {
      if (!any) {
        x0 = x1 = x;
        y0 = y1 = y;
        any = true;
      }
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (x1 <= x0) x1 = x0 + 1;
  if (y1 - y0 < 1e-9) y1 = y0 + 0.1;
  const double ystep = nice_step(y1 - y0, 6);
  y0 = std::floor(y0 / ystep) * ystep;
  y1 = std::ceil(y1 / ystep) * ystep;
  const double xstep = nice_step(x1 - x0, 10);

  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return kTop + ph - (y - y0) / (y1 - y0) * ph; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << escape(chart.title) << "</text>\n";

  out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  for (double y = y0; y <= y1 + ystep * 1e-6; y += ystep) {
    out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(py(y)) << "\" x2=\""
        << num(kLeft + pw) << "\" y2=\"" << num(py(y)) << "\" stroke=\"#e5e5e5\"/>\n";
    out << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(py(y) + 4)
        << "\" text-anchor=\"end\">" << tick_label(y) << "</text>\n";
  }
  for (double x = std::ceil(x0 / xstep) * xstep; x <= x1 + xstep * 1e-6; x += xstep) {
    out << "<text x=\"" << num(px(x)) << "\" y=\"" << num(kTop + ph + 16)
        << "\" text-anchor=\"middle\">" << tick_label(x) << "</text>\n";
  }
  out << "</g>\n";
  out << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(pw)
      << "\" height=\"" << num(ph) << "\" fill=\"none\" stroke=\"#333\"/>\n";
  out << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 18)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << escape(chart.x_label) << "</text>\n";
  out << "<text transform=\"translate(18 " << num(kTop + ph / 2)
      << ") rotate(-90)\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << escape(chart.y_label) << "</text>\n";

  for (std::size_t k = 0; k < chart.series.size(); ++k) {
    const auto& s = chart.series[k];
    const char* color = kPalette[k % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\" points=\"";
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      out << (i ? " " : "") << num(px(s.points[i].first)) << "," << num(py(s.points[i].second));
    }
    out << "\"/>\n";
    const double ly = kTop + 14 + 18 * static_cast<double>(k);
    out << "<line x1=\"" << num(kLeft + pw + 12) << "\" y1=\"" << num(ly) << "\" x2=\""
        << num(kLeft + pw + 36) << "\" y2=\"" << num(ly) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << num(kLeft + pw + 42) << "\" y=\"" << num(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(s.label) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::vector<NamedChart> figure_charts(const ExperimentReport& report) {
  std::vector<NamedChart> charts;

  auto curve = [&](DistributionKind kind, Algorithm alg, bool worst) -> std::optional<Series> {
    const auto* sweep = report.find(kind);
    if (sweep == nullptr) return std::nullopt;
    Series s;
    s.label = std::string(algorithm_name(alg));
    for (const auto& point : sweep->points) {
      const auto* st = point.find(alg);
      if (st == nullptr) return std::nullopt;
      s.points.emplace_back(to_double(point.d), worst ? st->worst_ratio : st->mean_ratio);
    }
    return s;
  };

  auto add = [&](std::string file, std::string title, std::string y_label,
                 std::vector<std::optional<Series>> series) {
    LineChart chart{std::move(title), "setup cost d", std::move(y_label), {}};
    for (auto& s : series) {
      if (!s) return;
      chart.series.push_back(std::move(*s));
    }
    charts.push_back(NamedChart{std::move(file), std::move(chart)});
  };

  const std::string mean = "mean cost / lower bound";
  using D = DistributionKind;
  using A = Algorithm;
  add("fig1_posa_uniform.svg", "POSA, uniform durations", mean, {curve(D::Uniform, A::Posa, false)});
  add("fig2_i_os01pt_uniform.svg", "I_OS01PT, uniform durations", mean,
      {curve(D::Uniform, A::IOs01pt, false)});
  add("fig3_i_hsa_uniform.svg", "I_HSA, uniform durations", mean,
      {curve(D::Uniform, A::IHsa, false)});
  add("fig4_i_hsa_worst_uniform.svg", "I_HSA worst case, uniform durations",
      "worst cost / lower bound", {curve(D::Uniform, A::IHsa, true)});
  add("fig5_i_hsa_normal.svg", "I_HSA, normal durations", mean,
      {curve(D::Normal, A::IHsa, false)});
  add("fig6_i_hsa_exponential.svg", "I_HSA, exponential durations", mean,
      {curve(D::Exponential, A::IHsa, false)});
  add("fig7_i_hsa_vs_sga_uniform.svg", "I_HSA vs SGA, uniform durations", mean,
      {curve(D::Uniform, A::IHsa, false), curve(D::Uniform, A::Sga, false)});
  add("crossover_uniform.svg", "POSA vs I_OS01PT, uniform durations", mean,
      {curve(D::Uniform, A::Posa, false), curve(D::Uniform, A::IOs01pt, false)});
  return charts;
}

}  // namespace pbs
