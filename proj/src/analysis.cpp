#include "softround/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace softround {

namespace {

double distance_to_half_integer(double x) {
  return std::fabs(x - (std::floor(x) + 0.5));
}

void require_smooth_method(MethodKind method, const char* where) {
  if (method == MethodKind::Classical) {
    throw std::invalid_argument(std::string(where) +
                                " requires a smooth method, not classical");
  }
}

SweepRow reduce_errors(double parameter, std::span<const double> xs,
                       std::span<const double> errs) {
  SweepRow row;
  row.parameter = parameter;
  row.max_abs_err = 0.0;
  row.argmax_x = xs[0];
  double sum = 0.0;
  for (std::size_t i = 0; i < errs.size(); ++i) {
    sum += errs[i];
    if (errs[i] > row.max_abs_err) {
      row.max_abs_err = errs[i];
      row.argmax_x = xs[i];
    }
  }
  row.mean_abs_err = sum / static_cast<double>(errs.size());
  return row;
}

}  // namespace

void SampleGrid::validate() const {
  if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop)) {
    throw std::invalid_argument("grid requires finite start < stop");
  }
  if (count < 2) {
    throw std::invalid_argument("grid requires at least 2 points");
  }
  if (!std::isfinite(exclusion_radius) || exclusion_radius < 0.0) {
    throw std::invalid_argument("grid exclusion radius must be >= 0");
  }
}

std::vector<double> SampleGrid::points() const {
  validate();
  const double step = (stop - start) / static_cast<double>(count - 1);
  std::vector<double> xs;
  xs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double x = (i + 1 == count) ? stop : start + static_cast<double>(i) * step;
    if (exclusion_radius > 0.0 && distance_to_half_integer(x) < exclusion_radius) {
      continue;
    }
    xs.push_back(x);
  }
  if (xs.empty()) {
    throw std::invalid_argument("grid is empty after half-integer exclusion");
  }
  return xs;
}

SweepReport sweep_k(MethodKind method, const SampleGrid& grid,
                    std::span<const double> ks, const WindowSpec& spec,
                    const DenominatorFloor& floor) {
  require_smooth_method(method, "sweep_k");
  if (ks.empty()) {
    throw std::invalid_argument("sweep_k requires a non-empty k list");
  }
  if (!std::is_sorted(ks.begin(), ks.end())) {
    throw std::invalid_argument("sweep_k requires ascending k values");
  }
  const std::vector<double> xs = grid.points();
  std::vector<double> reference(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    reference[i] = classical_round(xs[i]);
  }

  SweepReport report;
  report.reference = to_string(MethodKind::Classical);
  std::vector<double> errs(xs.size());
  for (const double k : ks) {
    const SharpnessK sharpness{k};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      errs[i] = std::fabs(evaluate(method, xs[i], sharpness, spec, floor) -
                          reference[i]);
    }
    report.rows.push_back(reduce_errors(k, xs, errs));
  }
  return report;
}

SweepReport sweep_window(MethodKind method, const SampleGrid& grid,
                         SharpnessK k, std::span<const int> radii,
                         const DenominatorFloor& floor) {
  require_smooth_method(method, "sweep_window");
  if (radii.size() < 2) {
    throw std::invalid_argument("sweep_window requires at least two radii");
  }
  if (!std::is_sorted(radii.begin(), radii.end())) {
    throw std::invalid_argument("sweep_window requires ascending radii");
  }
  const std::vector<double> xs = grid.points();
  const WindowSpec widest = WindowSpec::symmetric(radii.back());
  std::vector<double> reference(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    reference[i] = evaluate(method, xs[i], k, widest, floor);
  }

  SweepReport report;
  report.reference = "wide-window";
  std::vector<double> errs(xs.size());
  for (const int radius : radii) {
    const WindowSpec spec = WindowSpec::symmetric(radius);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      errs[i] = std::fabs(evaluate(method, xs[i], k, spec, floor) - reference[i]);
    }
    report.rows.push_back(reduce_errors(radius, xs, errs));
  }
  return report;
}

std::vector<ComparisonRow> compare_methods(const SampleGrid& grid, SharpnessK k,
                                           const WindowSpec& spec,
                                           const DenominatorFloor& floor) {
  const std::vector<double> xs = grid.points();
  std::vector<ComparisonRow> table;
  table.reserve(xs.size());
  for (const double x : xs) {
    ComparisonRow row;
    row.x = x;
    row.classical = classical_round(x);
    row.sigma_diff = round_sigma(x, k, spec);
    row.norm_deriv = round_norm(x, k, spec, floor);
    table.push_back(row);
  }
  return table;
}

EvalResult evaluate_batch(const EvalRequest& request) {
  const SharpnessK k{request.k};
  EvalResult result;
  result.values.reserve(request.inputs.size());
  if (request.with_gradient) {
    result.derivatives.reserve(request.inputs.size());
    for (const double x : request.inputs) {
      const GradResult g =
          grad_evaluate(request.method, x, k, request.window, request.floor);
      result.values.push_back(g.value);
      result.derivatives.push_back(g.derivative);
    }
  } else {
    for (const double x : request.inputs) {
      result.values.push_back(
          evaluate(request.method, x, k, request.window, request.floor));
    }
  }
  return result;
}

std::size_t count_monotone_violations(MethodKind method, const SampleGrid& grid,
                                      SharpnessK k, const WindowSpec& spec,
                                      const DenominatorFloor& floor) {
  require_smooth_method(method, "count_monotone_violations");
  const std::vector<double> xs = grid.points();
  std::size_t violations = 0;
  double previous = evaluate(method, xs[0], k, spec, floor);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double current = evaluate(method, xs[i], k, spec, floor);
    if (current < previous) {
      ++violations;
    }
    previous = current;
  }
  return violations;
}

}  // namespace softround
