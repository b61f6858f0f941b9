#include "softround/gradients.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kernel_eval.hpp"

namespace softround {

GradResult grad_round_sigma(double x, SharpnessK k, const WindowSpec& spec) {
  detail::require_smooth_window(spec);
  const std::vector<double> neighbors = neighbor_window(x, spec);
  const detail::SigmaEval eval = detail::eval_sigma(x, k.value(), neighbors);
  return {eval.value, eval.derivative, false};
}

GradResult grad_round_norm(double x, SharpnessK k, const WindowSpec& spec,
                           const DenominatorFloor& floor) {
  detail::require_smooth_window(spec);
  const std::vector<double> neighbors = neighbor_window(x, spec);
  const detail::NormEval eval = detail::eval_norm(x, k.value(), neighbors, floor);
  return {eval.value, eval.derivative, eval.clamped};
}

GradResult grad_evaluate(MethodKind method, double x, SharpnessK k,
                         const WindowSpec& spec, const DenominatorFloor& floor) {
  switch (method) {
    case MethodKind::SigmoidDifference: return grad_round_sigma(x, k, spec);
    case MethodKind::NormalizedDerivative: return grad_round_norm(x, k, spec, floor);
    case MethodKind::Classical:
      throw std::invalid_argument("classical rounding has no derivative");
  }
  throw std::invalid_argument("unknown MethodKind");
}

double finite_difference(const std::function<double(double)>& f, double x,
                         double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("finite_difference step must be positive");
  }
  return (f(x + step) - f(x - step)) / (2.0 * step);
}

}  // namespace softround
