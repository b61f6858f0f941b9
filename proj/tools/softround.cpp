// softround: evaluate, sweep and plot the smooth rounding kernels.

#include <cmath>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "softround/analysis.hpp"
#include "softround/csv.hpp"
#include "softround/gradients.hpp"
#include "softround/kernels.hpp"
#include "softround/svg.hpp"

namespace {

using namespace softround;

struct GridArg {
  double start = -1.0;
  double stop = 1.0;
  std::size_t count = 1000;
};

GridArg parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    throw CLI::ValidationError("--grid", "expected start:stop:count, got '" + text + "'");
  }
  GridArg grid;
  double count_raw = 0.0;
  if (!parse_real(text.substr(0, first), grid.start) ||
      !parse_real(text.substr(first + 1, second - first - 1), grid.stop) ||
      !parse_real(text.substr(second + 1), count_raw)) {
    throw CLI::ValidationError("--grid", "expected start:stop:count, got '" + text + "'");
  }
  if (!(count_raw >= 2.0) || count_raw != std::floor(count_raw) || count_raw > 1e8) {
    throw CLI::ValidationError("--grid", "count must be an integer >= 2");
  }
  grid.count = static_cast<std::size_t>(count_raw);
  return grid;
}

// Writes to the path, or to stdout when the path is empty.
void emit(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << payload;
  if (!out) {
    throw std::runtime_error("failed while writing '" + path + "'");
  }
}

struct CommonOpts {
  double k = 10.0;
  int radius = 2;
  bool appendix_window = false;
  double epsilon = 1e-8;

  WindowSpec window() const {
    return appendix_window ? WindowSpec::appendix_four() : WindowSpec::symmetric(radius);
  }
  // The four-neighbor reference variant pairs its window with an additive
  // denominator guard; the symmetric windows use the clamping guard.
  DenominatorFloor floor() const {
    return appendix_window ? DenominatorFloor::additive(epsilon)
                           : DenominatorFloor::clamped(epsilon);
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--k", opts.k, "sharpness parameter")->capture_default_str();
  cmd->add_option("--radius", opts.radius, "symmetric window radius (2W+1 neighbors)")
      ->capture_default_str();
  cmd->add_flag("--appendix-window", opts.appendix_window,
                "use the asymmetric four-neighbor window {floor(x)-1..floor(x)+2} "
                "with an additive denominator guard");
  cmd->add_option("--epsilon", opts.epsilon, "denominator guard for norm-deriv")
      ->capture_default_str();
}

int run_eval(const CommonOpts& common, const std::string& method_name,
             const std::vector<double>& x_values, const std::string& grid_text,
             const std::string& input_path, const std::string& output_path,
             bool with_grad) {
  const MethodKind method = parse_method(method_name);

  int sources = 0;
  sources += !x_values.empty();
  sources += !grid_text.empty();
  sources += !input_path.empty();
  if (sources != 1) {
    throw std::runtime_error("need exactly one input source: --x, --grid or --input");
  }
  if (with_grad && method == MethodKind::Classical) {
    throw std::runtime_error("--grad is not available for the classical method");
  }

  std::vector<double> inputs;
  if (!x_values.empty()) {
    inputs = x_values;
    for (const double x : inputs) {
      if (!std::isfinite(x)) {
        throw std::runtime_error("non-finite input value '" + format_double_short(x) + "'");
      }
    }
  } else if (!grid_text.empty()) {
    const GridArg g = parse_grid(grid_text);
    inputs = SampleGrid{g.start, g.stop, g.count, 0.0}.points();
  } else {
    std::ifstream file(input_path);
    if (!file) {
      throw std::runtime_error("cannot open input file '" + input_path + "'");
    }
    inputs = read_input_values(file);
  }

  EvalRequest request;
  request.method = method;
  request.k = common.k;
  request.window = common.window();
  request.floor = common.floor();
  request.with_gradient = with_grad;
  request.inputs = std::move(inputs);
  const EvalResult result = evaluate_batch(request);

  std::string csv = with_grad ? "x,value,derivative\n" : "x,value\n";
  for (std::size_t i = 0; i < request.inputs.size(); ++i) {
    csv += format_double(request.inputs[i]);
    csv += ',';
    csv += format_double(result.values[i]);
    if (with_grad) {
      csv += ',';
      csv += format_double(result.derivatives[i]);
    }
    csv += '\n';
  }
  emit(output_path, csv);
  return 0;
}

int run_sweep(const CommonOpts& common, const std::string& kind,
              const std::string& method_name, const std::vector<double>& ks,
              const std::vector<int>& radii, const std::string& grid_text,
              std::optional<double> exclude, const std::string& output_path) {
  const MethodKind method = parse_method(method_name);
  const GridArg g = parse_grid(grid_text.empty() ? "-1:1:1000" : grid_text);

  SweepReport report;
  if (kind == "k") {
    if (ks.empty()) {
      throw std::runtime_error("sweep --kind k requires --ks");
    }
    const SampleGrid grid{g.start, g.stop, g.count, exclude.value_or(0.05)};
    report = sweep_k(method, grid, ks, common.window(), common.floor());
  } else if (kind == "window") {
    if (radii.empty()) {
      throw std::runtime_error("sweep --kind window requires --radii");
    }
    const SampleGrid grid{g.start, g.stop, g.count, exclude.value_or(0.0)};
    report = sweep_window(method, grid, SharpnessK{common.k}, radii, common.floor());
  } else {
    throw std::runtime_error("unknown sweep kind '" + kind + "' (expected k or window)");
  }

  std::string csv = "param,max_abs_err,mean_abs_err,argmax_x\n";
  for (const SweepRow& row : report.rows) {
    csv += format_double(row.parameter) + ',' + format_double(row.max_abs_err) +
           ',' + format_double(row.mean_abs_err) + ',' + format_double(row.argmax_x) +
           '\n';
  }
  emit(output_path, csv);
  return 0;
}

int run_plot(const CommonOpts& common, const std::string& grid_text,
             const std::string& output_path) {
  const GridArg g = parse_grid(grid_text.empty() ? "-1:1:1000" : grid_text);
  const SampleGrid grid{g.start, g.stop, g.count, 0.0};
  const std::vector<ComparisonRow> table =
      compare_methods(grid, SharpnessK{common.k}, common.window(), common.floor());

  LinePlot plot;
  plot.title = "Comparison of rounding functions (k=" + format_double_short(common.k) + ")";
  plot.x_label = "x";
  plot.y_label = "value";
  plot.series.resize(3);
  plot.series[0].label = to_string(MethodKind::Classical);
  plot.series[0].stroke = "#1f77b4";
  plot.series[1].label = to_string(MethodKind::SigmoidDifference);
  plot.series[1].stroke = "#ff7f0e";
  plot.series[1].dash = "8 4";
  plot.series[2].label = to_string(MethodKind::NormalizedDerivative);
  plot.series[2].stroke = "#2ca02c";
  plot.series[2].dash = "8 4 2 4";
  for (const ComparisonRow& row : table) {
    plot.series[0].xs.push_back(row.x);
    plot.series[0].ys.push_back(row.classical);
    plot.series[1].xs.push_back(row.x);
    plot.series[1].ys.push_back(row.sigma_diff);
    plot.series[2].xs.push_back(row.x);
    plot.series[2].ys.push_back(row.norm_deriv);
  }
  emit(output_path, render_line_plot(plot));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smooth, differentiable approximations to integer rounding"};
  app.require_subcommand(1);

  CommonOpts eval_opts, sweep_opts, plot_opts;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a method over inputs, CSV out");
  std::string eval_method, eval_grid, eval_input, eval_output;
  std::vector<double> eval_x;
  bool eval_grad = false;
  eval_cmd->add_option("--method", eval_method, "classical | sigma-diff | norm-deriv")
      ->required();
  eval_cmd->add_option("--x", eval_x, "explicit input value(s)")->delimiter(',');
  eval_cmd->add_option("--grid", eval_grid, "inputs as start:stop:count (inclusive)");
  eval_cmd->add_option("--input", eval_input, "file with one input per line ('#' comments)");
  eval_cmd->add_option("--output", eval_output, "output CSV path (default: stdout)");
  eval_cmd->add_flag("--grad", eval_grad, "append an analytic-derivative column");
  add_common(eval_cmd, eval_opts);

  auto* sweep_cmd = app.add_subcommand("sweep", "error sweeps over k or window radius, CSV out");
  std::string sweep_kind, sweep_method, sweep_grid, sweep_output;
  std::vector<double> sweep_ks;
  std::vector<int> sweep_radii;
  std::optional<double> sweep_exclude;
  sweep_cmd->add_option("--kind", sweep_kind, "k | window")->required();
  sweep_cmd->add_option("--method", sweep_method, "sigma-diff | norm-deriv")->required();
  sweep_cmd->add_option("--ks", sweep_ks, "sharpness values, ascending")->delimiter(',');
  sweep_cmd->add_option("--radii", sweep_radii, "window radii, ascending; last is the reference")
      ->delimiter(',');
  sweep_cmd->add_option("--grid", sweep_grid, "start:stop:count (default -1:1:1000)");
  sweep_cmd->add_option("--exclude", sweep_exclude,
                        "drop points within this distance of a half-integer "
                        "(default 0.05 for k sweeps, 0 for window sweeps)");
  sweep_cmd->add_option("--output", sweep_output, "output CSV path (default: stdout)");
  add_common(sweep_cmd, sweep_opts);

  auto* plot_cmd = app.add_subcommand("plot", "SVG comparison plot of all three methods");
  std::string plot_grid, plot_output = "rounding.svg";
  plot_cmd->add_option("--grid", plot_grid, "start:stop:count (default -1:1:1000)");
  plot_cmd->add_option("--output", plot_output, "output SVG path")->capture_default_str();
  add_common(plot_cmd, plot_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval_cmd->parsed()) {
      return run_eval(eval_opts, eval_method, eval_x, eval_grid, eval_input,
                      eval_output, eval_grad);
    }
    if (sweep_cmd->parsed()) {
      return run_sweep(sweep_opts, sweep_kind, sweep_method, sweep_ks, sweep_radii,
                       sweep_grid, sweep_exclude, sweep_output);
    }
    if (plot_cmd->parsed()) {
      return run_plot(plot_opts, plot_grid, plot_output);
    }
  } catch (const std::exception& err) {
    std::cerr << "softround: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
