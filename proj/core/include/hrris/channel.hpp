#pragma once

#include <cmath>

#include "hrris/complex_matrix.hpp"
#include "hrris/random.hpp"

namespace hrris {

/// Horizontal-plane node layout in meters. The base station sits at the
/// origin and the surface on the positive x-axis, so the BS-to-surface
/// distance is surface_x itself.
struct Geometry {
  double surface_x = 51.0;
  double ms_x = 40.0;
  double ms_y = 2.0;

  double bs_to_surface_distance() const { return surface_x; }
  double surface_to_ms_distance() const {
    return std::hypot(surface_x - ms_x, ms_y);
  }
};

/// Per-link propagation parameters. kappa is the Rician K-factor with
/// +infinity meaning pure line of sight and 0 pure Rayleigh; exponent is the
/// path-loss exponent; beta0_db the reference loss at 1 m.
struct FadingParams {
  double kappa = 0.0;
  double exponent = 2.0;
  double beta0_db = -30.0;
};

/// The two hops of the relay geometry: BS -> surface (N x Nt) and
/// surface -> MS (Nr x N).
struct ChannelPair {
  ComplexMatrix bs_to_surface;
  ComplexMatrix surface_to_ms;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

/// Linear power gain at distance d: 10^(beta0_db/10) * d^(-exponent).
/// Strictly decreasing in d; throws std::invalid_argument for d <= 0.
double path_loss_linear(double distance_m, double exponent, double beta0_db);

/// Half-wavelength uniform linear array response: entry k is
/// exp(j*pi*k*sin(angle)), k = 0..n_elems-1. All entries unit modulus.
ComplexMatrix steering_vector(int n_elems, double angle_rad);

/// Small-scale Rician fading block, E|entry|^2 = 1 for every kappa. The LoS
/// part is a steering-vector outer product with receive/transmit angles drawn
/// uniformly from [0, 2*pi) (one pair per call); the NLoS part is i.i.d.
/// CN(0,1). kappa = +infinity takes the LoS branch with NLoS weight exactly
/// zero (and draws no NLoS values); kappa = 0 is pure NLoS.
ComplexMatrix rician_matrix(int rows, int cols, double kappa, RandomStream& rng);

/// Draws both hops for one scenario realization: each hop is a Rician block
/// scaled by the square root of its distance path loss. Draw order is
/// bs_to_surface then surface_to_ms.
ChannelPair scenario_channels(const Geometry& geometry, int n_elements, int n_tx,
                              int n_rx, const FadingParams& fading_t,
                              const FadingParams& fading_r, RandomStream& rng);

}  // namespace hrris
