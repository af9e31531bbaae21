#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pbs/experiment.hpp"

namespace pbs {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct LineChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

/// Standalone SVG document; output is a pure function of the chart.
std::string render_svg(const LineChart& chart);

struct NamedChart {
  std::string file_name;
  LineChart chart;
};

/// The figure set a sweep can populate: mean cost/L per algorithm and
/// distribution, worst I_HSA ratio, and I_HSA against SGA. Charts whose data
/// is missing from the report are skipped.
std::vector<NamedChart> figure_charts(const ExperimentReport& report);

}  // namespace pbs
