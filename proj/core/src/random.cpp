#include "hrris/random.hpp"

#include <cmath>
#include <numbers>

namespace hrris {

double RandomStream::uniform_angle() {
  return 2.0 * std::numbers::pi * uniform();
}

Complex RandomStream::complex_gaussian() {
  const double u = uniform_positive();
  const double v = uniform();
  const double radius = std::sqrt(-std::log(u));
  const double angle = 2.0 * std::numbers::pi * v;
  return Complex(radius * std::cos(angle), radius * std::sin(angle));
}

}  // namespace hrris
