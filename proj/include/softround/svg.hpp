#pragma once

#include <string>
#include <vector>

namespace softround {

/// One polyline of a line plot.
struct PlotSeries {
  std::string label;
  std::string stroke;       // CSS color
  std::string dash;         // stroke-dasharray; empty = solid
  std::vector<double> xs;
  std::vector<double> ys;
};

struct LinePlot {
  std::string title;
  std::string x_label = "x";
  std::string y_label = "value";
  int width = 960;
  int height = 600;
  std::vector<PlotSeries> series;
};

/// Renders an SVG 1.1 document with axes, ticks, a legend and one polyline
/// per series. Pure function of the input; byte-identical output for
/// identical plots.
std::string render_line_plot(const LinePlot& plot);

}  // namespace softround
