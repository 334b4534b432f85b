#pragma once

#include <vector>

#include "hrris/complex_matrix.hpp"

namespace hrris {

/// Per-element relay/reflection coefficients of the surface. Elements listed
/// in active_set can scale amplitude (subject to the active power budget);
/// all other elements are passive reflectors with unit modulus.
struct SurfaceCoefficients {
  std::vector<Complex> alphas;
  std::vector<int> active_set;  // sorted ascending, 0-based, distinct

  int size() const { return static_cast<int>(alphas.size()); }
  bool is_active(int n) const;

  /// Phase of element n normalized into [0, 2*pi).
  double phase(int n) const;

  /// Diagonal matrix of all coefficients.
  ComplexMatrix full_diag() const;

  /// Diagonal of passive coefficients only; active entries zeroed.
  ComplexMatrix passive_diag() const;

  /// Diagonal of active coefficients only; passive entries zeroed.
  ComplexMatrix active_diag() const;
};

/// Validates active_set (sorted, distinct, in range) and that every passive
/// modulus is 1 within 1e-12. Throws std::invalid_argument on violation.
void check_coefficients(const SurfaceCoefficients& coefs);

/// Operating point of the link: BS transmit power, noise power (same at the
/// surface's active elements and the MS), active power budget, and the phase
/// resolution (0 bits = continuous phases). All powers in milliwatts.
struct SystemParams {
  double p_bs_mw = 1000.0;
  double sigma2_mw = 1e-8;
  double p_a_max_mw = 1.0;
  int phase_bits = 2;

  double rho() const { return p_bs_mw / sigma2_mw; }
};

/// Power cost of driving element n at unit amplitude: the noise floor plus
/// the BS power forwarded through that element's row of the BS-side channel.
/// Always >= sigma2_mw.
std::vector<double> element_power_costs(const ComplexMatrix& bs_to_surface,
                                        const SystemParams& params);

}  // namespace hrris
