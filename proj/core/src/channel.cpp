#include "hrris/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hrris {

double path_loss_linear(double distance_m, double exponent, double beta0_db) {
  if (!(distance_m > 0.0)) {
    throw std::invalid_argument("path_loss_linear: distance must be positive, got " +
                                std::to_string(distance_m));
  }
  return db_to_linear(beta0_db) * std::pow(distance_m, -exponent);
}

ComplexMatrix steering_vector(int n_elems, double angle_rad) {
  if (n_elems < 1) {
    throw std::invalid_argument("steering_vector: need at least one element");
  }
  ComplexMatrix v(n_elems, 1);
  const double spatial_freq = std::numbers::pi * std::sin(angle_rad);
  for (int k = 0; k < n_elems; ++k) {
    v(k, 0) = std::polar(1.0, spatial_freq * static_cast<double>(k));
  }
  return v;
}

ComplexMatrix rician_matrix(int rows, int cols, double kappa, RandomStream& rng) {
  if (kappa < 0.0 || std::isnan(kappa)) {
    throw std::invalid_argument("rician_matrix: kappa must be >= 0 or +inf, got " +
                                std::to_string(kappa));
  }
  const double receive_angle = rng.uniform_angle();
  const double transmit_angle = rng.uniform_angle();
  const ComplexMatrix los =
      outer(steering_vector(rows, receive_angle), steering_vector(cols, transmit_angle));

  if (std::isinf(kappa)) {
    return los;
  }

  const double los_weight = std::sqrt(kappa / (1.0 + kappa));
  const double nlos_weight = std::sqrt(1.0 / (1.0 + kappa));
  ComplexMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      out(i, j) = los_weight * los(i, j) + nlos_weight * rng.complex_gaussian();
    }
  }
  return out;
}

ChannelPair scenario_channels(const Geometry& geometry, int n_elements, int n_tx,
                              int n_rx, const FadingParams& fading_t,
                              const FadingParams& fading_r, RandomStream& rng) {
  const double gain_t = path_loss_linear(geometry.bs_to_surface_distance(),
                                         fading_t.exponent, fading_t.beta0_db);
  const double gain_r = path_loss_linear(geometry.surface_to_ms_distance(),
                                         fading_r.exponent, fading_r.beta0_db);

  ComplexMatrix h_t = rician_matrix(n_elements, n_tx, fading_t.kappa, rng);
  h_t *= Complex(std::sqrt(gain_t), 0.0);
  ComplexMatrix h_r = rician_matrix(n_rx, n_elements, fading_r.kappa, rng);
  h_r *= Complex(std::sqrt(gain_r), 0.0);
  return ChannelPair{std::move(h_t), std::move(h_r)};
}

}  // namespace hrris
