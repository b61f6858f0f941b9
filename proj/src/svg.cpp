#include "softround/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace softround {

namespace {

std::string px(double v) {
  std::array<char, 40> buf;
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 2);
  return std::string(buf.data(), res.ptr);
}

// Tick labels: enough digits to be exact for any sane tick step, few enough
// to hide the rounding noise of step multiples like 3 * 0.2.
std::string tick_label(double v) {
  std::array<char, 40> buf;
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 10);
  return std::string(buf.data(), res.ptr);
}

std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::vector<double> nice_ticks(double lo, double hi, int target) {
  const double raw = (hi - lo) / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  const double base = norm < 1.5 ? 1.0 : norm < 3.5 ? 2.0 : norm < 7.5 ? 5.0 : 10.0;
  const double step = base * mag;
  std::vector<double> ticks;
  double t = std::ceil(lo / step) * step;
  while (t <= hi + step * 1e-9) {
    ticks.push_back(std::fabs(t) < step * 1e-9 ? 0.0 : t);
    t += step;
  }
  return ticks;
}

struct Mapper {
  double lo, hi;
  double pixel_lo, pixel_hi;
  double operator()(double v) const {
    return pixel_lo + (v - lo) / (hi - lo) * (pixel_hi - pixel_lo);
  }
};

}  // namespace

std::string render_line_plot(const LinePlot& plot) {
  if (plot.series.empty()) {
    throw std::invalid_argument("plot requires at least one series");
  }
  double x_lo = 0.0, x_hi = 0.0, y_lo = 0.0, y_hi = 0.0;
  bool first = true;
  for (const PlotSeries& s : plot.series) {
    if (s.xs.empty() || s.xs.size() != s.ys.size()) {
      throw std::invalid_argument("plot series '" + s.label +
                                  "' needs matching non-empty x/y data");
    }
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) {
        throw std::invalid_argument("plot series '" + s.label +
                                    "' contains non-finite data");
      }
      if (first) {
        x_lo = x_hi = s.xs[i];
        y_lo = y_hi = s.ys[i];
        first = false;
      } else {
        x_lo = std::min(x_lo, s.xs[i]);
        x_hi = std::max(x_hi, s.xs[i]);
        y_lo = std::min(y_lo, s.ys[i]);
        y_hi = std::max(y_hi, s.ys[i]);
      }
    }
  }
  if (x_hi == x_lo) { x_lo -= 0.5; x_hi += 0.5; }
  if (y_hi == y_lo) { y_lo -= 0.5; y_hi += 0.5; }
  const double y_pad = 0.05 * (y_hi - y_lo);
  y_lo -= y_pad;
  y_hi += y_pad;

  const double left = 70.0, right = 20.0, top = 48.0, bottom = 54.0;
  const Mapper mx{x_lo, x_hi, left, plot.width - right};
  const Mapper my{y_lo, y_hi, plot.height - bottom, top};  // y grows upward

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(plot.width) + "\" height=\"" + std::to_string(plot.height) +
         "\" viewBox=\"0 0 " + std::to_string(plot.width) + " " +
         std::to_string(plot.height) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(plot.width) +
         "\" height=\"" + std::to_string(plot.height) + "\" fill=\"white\"/>\n";
  svg += "<text x=\"" + px(plot.width / 2.0) +
         "\" y=\"26\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"17\">" + escape_xml(plot.title) + "</text>\n";

  // Gridlines and tick labels.
  for (const double t : nice_ticks(x_lo, x_hi, 8)) {
    const std::string gx = px(mx(t));
    svg += "<line x1=\"" + gx + "\" y1=\"" + px(my.pixel_hi) + "\" x2=\"" + gx +
           "\" y2=\"" + px(my.pixel_lo) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + gx + "\" y=\"" + px(my.pixel_lo + 18.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
           tick_label(t) + "</text>\n";
  }
  for (const double t : nice_ticks(y_lo, y_hi, 6)) {
    const std::string gy = px(my(t));
    svg += "<line x1=\"" + px(left) + "\" y1=\"" + gy + "\" x2=\"" +
           px(static_cast<double>(plot.width) - right) + "\" y2=\"" + gy +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + px(left - 8.0) + "\" y=\"" + px(my(t) + 4.0) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
           tick_label(t) + "</text>\n";
  }

  // Axis frame and labels.
  svg += "<rect x=\"" + px(left) + "\" y=\"" + px(top) + "\" width=\"" +
         px(plot.width - left - right) + "\" height=\"" +
         px(plot.height - top - bottom) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "<text x=\"" + px((left + plot.width - right) / 2.0) + "\" y=\"" +
         px(plot.height - 14.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
         escape_xml(plot.x_label) + "</text>\n";
  svg += "<text x=\"20\" y=\"" + px((top + plot.height - bottom) / 2.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
         "transform=\"rotate(-90 20 " + px((top + plot.height - bottom) / 2.0) +
         ")\">" + escape_xml(plot.y_label) + "</text>\n";

  for (const PlotSeries& s : plot.series) {
    svg += "<polyline fill=\"none\" stroke=\"" + escape_xml(s.stroke) +
           "\" stroke-width=\"2\"";
    if (!s.dash.empty()) {
      svg += " stroke-dasharray=\"" + escape_xml(s.dash) + "\"";
    }
    svg += " points=\"";
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      if (i != 0) svg += " ";
      svg += px(mx(s.xs[i])) + "," + px(my(s.ys[i]));
    }
    svg += "\"/>\n";
  }

  // Legend, top-left inside the frame.
  const double lx = left + 14.0;
  double ly = top + 18.0;
  for (const PlotSeries& s : plot.series) {
    svg += "<line x1=\"" + px(lx) + "\" y1=\"" + px(ly - 4.0) + "\" x2=\"" +
           px(lx + 30.0) + "\" y2=\"" + px(ly - 4.0) + "\" stroke=\"" +
           escape_xml(s.stroke) + "\" stroke-width=\"2\"";
    if (!s.dash.empty()) {
      svg += " stroke-dasharray=\"" + escape_xml(s.dash) + "\"";
    }
    svg += "/>\n";
    svg += "<text x=\"" + px(lx + 38.0) + "\" y=\"" + px(ly) +
           "\" font-family=\"sans-serif\" font-size=\"13\">" + escape_xml(s.label) +
           "</text>\n";
    ly += 18.0;
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace softround
