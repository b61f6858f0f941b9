#pragma once

// Shared evaluation cores for the smooth rounding kernels. Both the value
// functions and the gradient functions call these, so a GradResult's value
// field is bitwise identical to the corresponding kernel evaluation.

#include <span>

#include "softround/kernels.hpp"

namespace softround::detail {

struct SigmaEval {
  double value;
  double derivative;
};

/// Sigmoid-difference sum and its x-derivative over an explicit neighbor set.
SigmaEval eval_sigma(double x, double k, std::span<const double> neighbors);

struct NormEval {
  double value;
  double derivative;
  bool clamped;
};

/// Density-weighted average and its x-derivative over an explicit neighbor
/// set, evaluated in weights normalized by the peak density so the ratio
/// survives arbitrarily large k without underflow.
NormEval eval_norm(double x, double k, std::span<const double> neighbors,
                   const DenominatorFloor& floor);

/// Throws std::invalid_argument if `spec` is a symmetric window of radius 0
/// (a single integer is not a usable neighbor set for the smooth methods).
void require_smooth_window(const WindowSpec& spec);

}  // namespace softround::detail
