#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "softround/gradients.hpp"
#include "softround/kernels.hpp"

namespace softround {

/// Linearly spaced sample points over [start, stop], endpoints included,
/// optionally dropping every point within `exclusion_radius` of a
/// half-integer (the transition centers, where pointwise convergence is
/// arbitrarily slow).
struct SampleGrid {
  double start = -1.0;
  double stop = 1.0;
  std::size_t count = 1000;
  double exclusion_radius = 0.0;

  /// Throws std::invalid_argument unless start < stop, count >= 2,
  /// exclusion_radius >= 0 and all fields are finite.
  void validate() const;

  /// The surviving sample points, ascending. Throws std::invalid_argument if
  /// the exclusion empties the grid.
  std::vector<double> points() const;
};

/// One parameter setting of a sweep: the worst and mean absolute deviation
/// from the reference over the grid, and where the worst occurred.
struct SweepRow {
  double parameter = 0.0;
  double max_abs_err = 0.0;
  double mean_abs_err = 0.0;
  double argmax_x = 0.0;
};

struct SweepReport {
  std::vector<SweepRow> rows;   // sorted by parameter (ascending input order)
  std::string reference;        // "classical" or "wide-window"
};

/// Error of a smooth method against classical rounding for each sharpness in
/// `ks` (must be non-empty and ascending). Rejects MethodKind::Classical.
SweepReport sweep_k(MethodKind method, const SampleGrid& grid,
                    std::span<const double> ks, const WindowSpec& spec = {},
                    const DenominatorFloor& floor = {});

/// Truncation error of a smooth method for each radius in `radii` (ascending,
/// at least two entries) against the widest radius as reference. The
/// reference row itself reports an error of exactly zero.
SweepReport sweep_window(MethodKind method, const SampleGrid& grid,
                         SharpnessK k, std::span<const int> radii,
                         const DenominatorFloor& floor = {});

/// One grid point evaluated under all three methods.
struct ComparisonRow {
  double x = 0.0;
  double classical = 0.0;
  double sigma_diff = 0.0;
  double norm_deriv = 0.0;
};

/// All three methods over the grid (exclusion applied as configured);
/// deterministic: identical inputs produce identical tables.
std::vector<ComparisonRow> compare_methods(const SampleGrid& grid, SharpnessK k,
                                           const WindowSpec& spec = {},
                                           const DenominatorFloor& floor = {});

/// A batch of inputs to evaluate under one configuration.
struct EvalRequest {
  MethodKind method = MethodKind::NormalizedDerivative;
  double k = 10.0;
  WindowSpec window;
  DenominatorFloor floor;
  bool with_gradient = false;
  std::vector<double> inputs;
};

/// Per-input outputs, in input order. `derivatives` is empty unless the
/// request asked for gradients.
struct EvalResult {
  std::vector<double> values;
  std::vector<double> derivatives;
};

EvalResult evaluate_batch(const EvalRequest& request);

/// Number of adjacent grid pairs on which the method decreases; empirical
/// data, not an invariant of the kernels.
std::size_t count_monotone_violations(MethodKind method, const SampleGrid& grid,
                                      SharpnessK k, const WindowSpec& spec = {},
                                      const DenominatorFloor& floor = {});

}  // namespace softround
