#pragma once

#include <span>
#include <string>
#include <vector>

#include "softround/sigmoid.hpp"

namespace softround {

/// Selects one of the three rounding functions.
enum class MethodKind { Classical, SigmoidDifference, NormalizedDerivative };

/// Serialized names: "classical", "sigma-diff", "norm-deriv".
std::string to_string(MethodKind method);

/// Parses a serialized method name; throws std::invalid_argument on anything else.
MethodKind parse_method(const std::string& name);

/// Finite neighbor set replacing the infinite sums of the smooth kernels.
///
/// Symmetric(W): the 2W+1 consecutive integers centered at floor(x).
/// AppendixFour: the fixed asymmetric set {floor(x)-1, ..., floor(x)+2}.
class WindowSpec {
 public:
  enum class Kind { Symmetric, AppendixFour };

  /// Symmetric window of the given radius; radius must be >= 0.
  /// (The smooth rounding functions additionally require radius >= 1.)
  static WindowSpec symmetric(int radius);
  static WindowSpec appendix_four() noexcept;

  /// Default: symmetric, radius 2 (five neighbors).
  WindowSpec() noexcept : kind_(Kind::Symmetric), radius_(2) {}

  Kind kind() const noexcept { return kind_; }
  bool is_symmetric() const noexcept { return kind_ == Kind::Symmetric; }
  /// Radius of a symmetric window; meaningless for AppendixFour.
  int radius() const noexcept { return radius_; }
  /// Number of integers the window yields (2W+1 or 4).
  int size() const noexcept;

 private:
  WindowSpec(Kind kind, int radius) noexcept : kind_(kind), radius_(radius) {}

  Kind kind_;
  int radius_;
};

/// Lower guard for the normalization denominator of round_norm.
///
/// The denominator is accumulated in weights normalized by the peak density,
/// so it is >= 1 for any auto-generated window; `Clamp` (the default,
/// max(denominator, epsilon)) therefore never distorts a sane evaluation and
/// exists purely to keep the division well-defined. `Additive` reproduces the
/// reference behavior of adding epsilon to the raw (unnormalized) denominator,
/// which biases values toward zero once the densities underflow at very large
/// sharpness; it is kept for parity with the four-neighbor reference variant.
struct DenominatorFloor {
  enum class Mode { Clamp, Additive };

  double epsilon = 1e-8;
  Mode mode = Mode::Clamp;

  static DenominatorFloor clamped(double epsilon = 1e-8);
  static DenominatorFloor additive(double epsilon = 1e-8);
};

/// Nearest integer as a real, ties rounded to the even neighbor
/// (round(2.5) = 2, round(-1.5) = -2). Independent of the FP rounding mode.
double classical_round(double x);

/// The integers of `spec` at x, ascending, as exact integer-valued doubles.
std::vector<double> neighbor_window(double x, const WindowSpec& spec);

/// Smooth rounding via differences of shifted sigmoids over the window:
///   sum_n n * [sigmoid(k(x-(n-0.5))) - sigmoid(k(x-(n+0.5)))].
double round_sigma(double x, SharpnessK k, const WindowSpec& spec = {});

/// round_sigma over an explicit neighbor set (ascending integer values).
double round_sigma_over(double x, SharpnessK k, std::span<const double> neighbors);

/// Smooth rounding as the density-weighted average of the window integers:
///   sum_n n*rho_n(x) / sum_n rho_n(x),
/// with the denominator guarded by `floor`. The ratio is evaluated in weights
/// normalized by the peak density, so it stays a convex combination of the
/// window integers for arbitrarily large k.
double round_norm(double x, SharpnessK k, const WindowSpec& spec = {},
                  const DenominatorFloor& floor = {});

/// round_norm over an explicit neighbor set (ascending integer values).
double round_norm_over(double x, SharpnessK k, std::span<const double> neighbors,
                       const DenominatorFloor& floor = {});

/// Total sigmoid-difference weight of the window at x. Telescopes to
///   sigmoid(k(x-(a-0.5))) - sigmoid(k(x-(b+0.5)))
/// for window [a, b]; accepts any symmetric radius >= 0.
double window_mass_sigma(double x, SharpnessK k, const WindowSpec& spec = {});

/// Dispatches to classical_round / round_sigma / round_norm.
double evaluate(MethodKind method, double x, SharpnessK k,
                const WindowSpec& spec = {}, const DenominatorFloor& floor = {});

}  // namespace softround
