#include "softround/sigmoid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace softround {

namespace detail {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg << what << " must be finite, got " << v;
    throw std::domain_error(msg.str());
  }
}

}  // namespace detail

SharpnessK::SharpnessK(double value) : value_(value) {
  if (!std::isfinite(value) || value <= 0.0) {
    std::ostringstream msg;
    msg << "sharpness k must be a finite positive real, got " << value;
    throw std::invalid_argument(msg.str());
  }
}

double sigmoid(double z) {
  detail::require_finite(z, "sigmoid argument");
  // Two-branch form: exp is only taken of a non-positive argument, so the
  // evaluation cannot overflow no matter how large |z| gets.
  if (z >= 0.0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double sigmoid_prime(double z) {
  detail::require_finite(z, "sigmoid_prime argument");
  const double t = std::exp(-std::fabs(z));
  const double u = 1.0 + t;
  return t / (u * u);
}

double rho(double x, double center, SharpnessK k) {
  detail::require_finite(x, "rho argument");
  return k.value() * sigmoid_prime(k.value() * (x - center));
}

double rho_prime(double x, double center, SharpnessK k) {
  detail::require_finite(x, "rho_prime argument");
  const double u = k.value() * (x - center);
  return k.value() * k.value() * (1.0 - 2.0 * sigmoid(u)) * sigmoid_prime(u);
}

}  // namespace softround
