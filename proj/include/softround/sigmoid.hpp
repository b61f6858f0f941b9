#pragma once

namespace softround {

/// Positive sharpness parameter for the smooth rounding kernels.
/// Larger values give steeper, more step-like transitions.
class SharpnessK {
 public:
  /// Throws std::invalid_argument unless value is finite and > 0.
  explicit SharpnessK(double value);

  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// Logistic function 1/(1+exp(-z)), evaluated overflow-free for any finite z.
/// Saturates to exact 0.0 / 1.0 once the tail drops below double resolution.
/// Throws std::domain_error for non-finite input.
double sigmoid(double z);

/// Logistic derivative sigmoid(z)*(1-sigmoid(z)), computed in the even form
/// t/(1+t)^2 with t = exp(-|z|) so it is bitwise symmetric in z.
/// Range (0, 0.25], maximum 0.25 at z = 0.
double sigmoid_prime(double z);

/// Bell-shaped density of integer `center` at x:
///   rho(x) = k * sigmoid_prime(k*(x - center)).
/// Peaks at x = center with value exactly k/4.
double rho(double x, double center, SharpnessK k);

/// Derivative of rho with respect to x:
///   k^2 * (1 - 2*sigmoid(u)) * sigmoid(u) * (1 - sigmoid(u)),  u = k*(x - center).
/// Zero at x = center, odd about it.
double rho_prime(double x, double center, SharpnessK k);

namespace detail {
/// Throws std::domain_error naming `what` if v is NaN or infinite.
void require_finite(double v, const char* what);
}  // namespace detail

}  // namespace softround
