#include "softround/kernels.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "kernel_eval.hpp"

namespace softround {

std::string to_string(MethodKind method) {
  switch (method) {
    case MethodKind::Classical: return "classical";
    case MethodKind::SigmoidDifference: return "sigma-diff";
    case MethodKind::NormalizedDerivative: return "norm-deriv";
  }
  throw std::invalid_argument("unknown MethodKind");
}

MethodKind parse_method(const std::string& name) {
  if (name == "classical") return MethodKind::Classical;
  if (name == "sigma-diff") return MethodKind::SigmoidDifference;
  if (name == "norm-deriv") return MethodKind::NormalizedDerivative;
  throw std::invalid_argument("unknown method '" + name +
                              "' (expected classical, sigma-diff or norm-deriv)");
}

WindowSpec WindowSpec::symmetric(int radius) {
  if (radius < 0) {
    throw std::invalid_argument("window radius must be >= 0");
  }
  return WindowSpec(Kind::Symmetric, radius);
}

WindowSpec WindowSpec::appendix_four() noexcept {
  return WindowSpec(Kind::AppendixFour, 0);
}

int WindowSpec::size() const noexcept {
  return is_symmetric() ? 2 * radius_ + 1 : 4;
}

DenominatorFloor DenominatorFloor::clamped(double epsilon) {
  if (!std::isfinite(epsilon) || epsilon <= 0.0) {
    throw std::invalid_argument("denominator floor epsilon must be positive");
  }
  return DenominatorFloor{epsilon, Mode::Clamp};
}

DenominatorFloor DenominatorFloor::additive(double epsilon) {
  DenominatorFloor f = clamped(epsilon);
  f.mode = Mode::Additive;
  return f;
}

double classical_round(double x) {
  detail::require_finite(x, "classical_round argument");
  const double base = std::floor(x);
  const double frac = x - base;
  if (frac < 0.5) return base;
  if (frac > 0.5) return base + 1.0;
  // Exact tie: pick the even neighbor, independent of the FP rounding mode.
  return std::fmod(base, 2.0) == 0.0 ? base : base + 1.0;
}

std::vector<double> neighbor_window(double x, const WindowSpec& spec) {
  detail::require_finite(x, "neighbor_window argument");
  const double base = std::floor(x);
  std::vector<double> neighbors;
  if (spec.is_symmetric()) {
    neighbors.reserve(static_cast<std::size_t>(spec.size()));
    for (int j = -spec.radius(); j <= spec.radius(); ++j) {
      neighbors.push_back(base + j);
    }
  } else {
    neighbors = {base - 1.0, base, base + 1.0, base + 2.0};
  }
  return neighbors;
}

namespace detail {

void require_smooth_window(const WindowSpec& spec) {
  if (spec.is_symmetric() && spec.radius() < 1) {
    throw std::invalid_argument(
        "smooth rounding requires a window radius >= 1");
  }
}

SigmaEval eval_sigma(double x, double k, std::span<const double> neighbors) {
  double value = 0.0;
  double slope = 0.0;
  for (const double n : neighbors) {
    const double lo = k * (x - (n - 0.5));
    const double hi = k * (x - (n + 0.5));
    value += n * (sigmoid(lo) - sigmoid(hi));
    slope += n * (sigmoid_prime(lo) - sigmoid_prime(hi));
  }
  return {value, k * slope};
}

NormEval eval_norm(double x, double k, std::span<const double> neighbors,
                   const DenominatorFloor& floor) {
  double dist_min = std::numeric_limits<double>::infinity();
  for (const double n : neighbors) {
    dist_min = std::min(dist_min, std::fabs(x - n));
  }
  const double tail_min = std::exp(-k * dist_min);

  // Weights relative to the peak density: w = rho_n / rho_peak, and the
  // matching derivative terms v = rho'_n / rho_peak. The peak weight is
  // exactly 1, so the denominator never underflows however large k is.
  double num = 0.0;      // sum n * w
  double den = 0.0;      // sum w        (>= 1)
  double num_d = 0.0;    // sum n * v
  double den_d = 0.0;    // sum v
  double v_peak = 0.0;   // v at the peak neighbor
  bool peak_seen = false;
  for (const double n : neighbors) {
    const double dist = std::fabs(x - n);
    const double tail = std::exp(-k * dist);
    const double ratio = (1.0 + tail_min) / (1.0 + tail);
    const double w = std::exp(-k * (dist - dist_min)) * ratio * ratio;
    const double v = k * (1.0 - 2.0 * sigmoid(k * (x - n))) * w;
    if (!peak_seen && dist == dist_min) {
      v_peak = v;
      peak_seen = true;
    }
    num += n * w;
    den += w;
    num_d += n * v;
    den_d += v;
  }

  if (floor.mode == DenominatorFloor::Mode::Additive) {
    // Reference semantics of the four-neighbor variant: epsilon is added to
    // the raw denominator. Undo the normalization scale to place it.
    const double peak = k * sigmoid_prime(k * dist_min);
    if (peak == 0.0) {
      // All densities underflowed; the raw ratio is 0/epsilon.
      return {0.0, 0.0, true};
    }
    const double guarded = den + floor.epsilon / peak;
    const double value = num / guarded;
    const double slope = (num_d * guarded - num * den_d) / (guarded * guarded);
    return {value, slope, false};
  }

  if (den < floor.epsilon) {
    // Reachable only with an epsilon above 1 (den >= 1 for any auto window).
    // The denominator is held at the constant floor and the result flagged.
    // Differentiating num alone must account for the x-dependence of the
    // peak weight the normalization divides by: (num/rho_peak)' scaled back
    // is num_d - num * v_peak.
    const double slope = (num_d - num * v_peak) / floor.epsilon;
    return {num / floor.epsilon, slope, true};
  }
  const double value = num / den;
  const double slope = (num_d * den - num * den_d) / (den * den);
  return {value, slope, false};
}

}  // namespace detail

double round_sigma(double x, SharpnessK k, const WindowSpec& spec) {
  detail::require_smooth_window(spec);
  const std::vector<double> neighbors = neighbor_window(x, spec);
  return detail::eval_sigma(x, k.value(), neighbors).value;
}

double round_sigma_over(double x, SharpnessK k, std::span<const double> neighbors) {
  detail::require_finite(x, "round_sigma argument");
  if (neighbors.empty()) {
    throw std::invalid_argument("round_sigma requires a non-empty neighbor set");
  }
  return detail::eval_sigma(x, k.value(), neighbors).value;
}

double round_norm(double x, SharpnessK k, const WindowSpec& spec,
                  const DenominatorFloor& floor) {
  detail::require_smooth_window(spec);
  const std::vector<double> neighbors = neighbor_window(x, spec);
  return detail::eval_norm(x, k.value(), neighbors, floor).value;
}

double round_norm_over(double x, SharpnessK k, std::span<const double> neighbors,
                       const DenominatorFloor& floor) {
  detail::require_finite(x, "round_norm argument");
  if (neighbors.empty()) {
    throw std::invalid_argument("round_norm requires a non-empty neighbor set");
  }
  return detail::eval_norm(x, k.value(), neighbors, floor).value;
}

double window_mass_sigma(double x, SharpnessK k, const WindowSpec& spec) {
  const std::vector<double> neighbors = neighbor_window(x, spec);
  double mass = 0.0;
  for (const double n : neighbors) {
    mass += sigmoid(k.value() * (x - (n - 0.5))) -
            sigmoid(k.value() * (x - (n + 0.5)));
  }
  return mass;
}

double evaluate(MethodKind method, double x, SharpnessK k,
                const WindowSpec& spec, const DenominatorFloor& floor) {
  switch (method) {
    case MethodKind::Classical: return classical_round(x);
    case MethodKind::SigmoidDifference: return round_sigma(x, k, spec);
    case MethodKind::NormalizedDerivative: return round_norm(x, k, spec, floor);
  }
  throw std::invalid_argument("unknown MethodKind");
}

}  // namespace softround
