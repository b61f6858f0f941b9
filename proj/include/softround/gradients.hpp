#pragma once

#include <functional>

#include "softround/kernels.hpp"

namespace softround {

/// Value and first derivative of a smooth rounding function at one point.
/// `denominator_clamped` reports that the normalization denominator of
/// round_norm was held at its floor; the derivative then treats the
/// denominator as that constant and callers may want to discount it.
struct GradResult {
  double value = 0.0;
  double derivative = 0.0;
  bool denominator_clamped = false;
};

/// Analytic derivative of round_sigma over its truncated window:
///   d/dx = k * sum_n n * [sigmoid_prime(k(x-(n-0.5))) - sigmoid_prime(k(x-(n+0.5)))].
/// The window is held fixed within the evaluation (it changes only when x
/// crosses an integer), so this is the exact derivative of the truncated sum
/// almost everywhere. The value field equals round_sigma(x, k, spec) bitwise.
GradResult grad_round_sigma(double x, SharpnessK k, const WindowSpec& spec = {});

/// Analytic derivative of round_norm by the quotient rule,
///   (sum n*rho'_n * sum rho_n - sum n*rho_n * sum rho'_n) / (sum rho_n)^2,
/// evaluated in peak-normalized weights. The value field equals
/// round_norm(x, k, spec, floor) bitwise.
GradResult grad_round_norm(double x, SharpnessK k, const WindowSpec& spec = {},
                           const DenominatorFloor& floor = {});

/// Dispatch by method; Classical is not differentiable and is rejected
/// with std::invalid_argument.
GradResult grad_evaluate(MethodKind method, double x, SharpnessK k,
                         const WindowSpec& spec = {},
                         const DenominatorFloor& floor = {});

/// Central difference (f(x+step) - f(x-step)) / (2*step); step must be > 0.
double finite_difference(const std::function<double(double)>& f, double x,
                         double step = 1e-5);

}  // namespace softround
