#include "hrris/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hrris {

bool SurfaceCoefficients::is_active(int n) const {
  return std::binary_search(active_set.begin(), active_set.end(), n);
}

double SurfaceCoefficients::phase(int n) const {
  double theta = std::arg(alphas[static_cast<std::size_t>(n)]);
  if (theta < 0.0) theta += 2.0 * std::numbers::pi;
  if (theta >= 2.0 * std::numbers::pi) theta = 0.0;
  return theta;
}

ComplexMatrix SurfaceCoefficients::full_diag() const {
  ComplexMatrix m(size(), size());
  for (int n = 0; n < size(); ++n) m(n, n) = alphas[static_cast<std::size_t>(n)];
  return m;
}

ComplexMatrix SurfaceCoefficients::passive_diag() const {
  ComplexMatrix m(size(), size());
  for (int n = 0; n < size(); ++n) {
    if (!is_active(n)) m(n, n) = alphas[static_cast<std::size_t>(n)];
  }
  return m;
}

ComplexMatrix SurfaceCoefficients::active_diag() const {
  ComplexMatrix m(size(), size());
  for (int n : active_set) m(n, n) = alphas[static_cast<std::size_t>(n)];
  return m;
}

void check_coefficients(const SurfaceCoefficients& coefs) {
  int previous = -1;
  for (int n : coefs.active_set) {
    if (n < 0 || n >= coefs.size()) {
      throw std::invalid_argument("active_set index " + std::to_string(n) +
                                  " out of range for " + std::to_string(coefs.size()) +
                                  " elements");
    }
    if (n <= previous) {
      throw std::invalid_argument("active_set must be sorted ascending without duplicates");
    }
    previous = n;
  }
  for (int n = 0; n < coefs.size(); ++n) {
    if (coefs.is_active(n)) continue;
    const double modulus = std::abs(coefs.alphas[static_cast<std::size_t>(n)]);
    if (std::abs(modulus - 1.0) > 1e-12) {
      throw std::invalid_argument("passive element " + std::to_string(n) +
                                  " has modulus " + std::to_string(modulus));
    }
  }
}

std::vector<double> element_power_costs(const ComplexMatrix& bs_to_surface,
                                        const SystemParams& params) {
  std::vector<double> costs(static_cast<std::size_t>(bs_to_surface.rows()));
  for (int n = 0; n < bs_to_surface.rows(); ++n) {
    double row_energy = 0.0;
    for (int j = 0; j < bs_to_surface.cols(); ++j) {
      row_energy += std::norm(bs_to_surface(n, j));
    }
    costs[static_cast<std::size_t>(n)] = params.sigma2_mw + params.p_bs_mw * row_energy;
  }
  return costs;
}

}  // namespace hrris
