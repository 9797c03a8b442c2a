#include "viaccel/rng.hpp"

#include <cmath>
#include <numbers>

namespace viaccel {

double Rng::normal() {
  if (spare_) {
    const double s = *spare_;
    spare_.reset();
    return s;
  }
  // 1 - uniform() lies in (0, 1], so the log is finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  return r * std::cos(phi);
}

Vector Rng::uniform_vector(std::size_t n, double lo, double hi) {
  Vector v(n);
  for (double& x : v) x = uniform(lo, hi);
  return v;
}

Vector Rng::normal_vector(std::size_t n, double scale) {
  Vector v(n);
  for (double& x : v) x = scale * normal();
  return v;
}

}  // namespace viaccel
