#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hrris/coefficients.hpp"
#include "hrris/complex_matrix.hpp"
#include "hrris/random.hpp"

namespace hrris {

/// Snaps theta to the nearest of the 2^bits uniform phase levels on
/// [0, 2*pi), measuring distance with wraparound; exact midpoints round to
/// the lower level. bits = 0 returns theta unchanged (continuous mode).
double quantize_phase(double theta, int bits);

/// Covariance of the effective receive noise, normalized by the noise power:
/// identity plus the active elements' forwarded-noise outer products.
/// Equals the identity exactly when no element is active.
ComplexMatrix noise_covariance(const ComplexMatrix& surface_to_ms,
                               const SurfaceCoefficients& coefs);

/// The end-to-end channel through the surface: sum over elements of
/// alpha_n * (receive column n) * (transmit row n).
ComplexMatrix cascaded_channel(const ComplexMatrix& surface_to_ms,
                               const SurfaceCoefficients& coefs,
                               const ComplexMatrix& bs_to_surface);

/// Spectral efficiency in bits/s/Hz with the exact effective-noise
/// whitening. Non-negative for any feasible coefficient set.
double se_exact(const ComplexMatrix& bs_to_surface, const ComplexMatrix& surface_to_ms,
                const SurfaceCoefficients& coefs, const SystemParams& params);

/// Surrogate objective maximized by the alternating optimizer: drops the
/// noise-covariance log-determinant, so it upper-bounds se_exact and
/// coincides with it when no element is active.
double se_upper(const ComplexMatrix& bs_to_surface, const ComplexMatrix& surface_to_ms,
                const SurfaceCoefficients& coefs, const SystemParams& params);

/// Transmit power of the active elements, fast scalar form:
/// sum over the active set of |alpha_n|^2 * cost_n.
double active_power_mw(const SurfaceCoefficients& coefs, const std::vector<double>& costs);

/// Same quantity evaluated through the full matrix-trace expression; kept as
/// an independent route for cross-checking the scalar form.
double active_power_trace_mw(const SurfaceCoefficients& coefs,
                             const ComplexMatrix& bs_to_surface,
                             const SystemParams& params);

/// The objective restricted to one coefficient alpha:
///   log2 | constant + |alpha|^2 self_outer + alpha cross + conj(alpha) cross^H |.
/// constant is Hermitian (identity plus PSD); self_outer is Hermitian PSD of
/// rank at most one; cross has rank at most one.
struct ElementTerms {
  ComplexMatrix constant;
  ComplexMatrix self_outer;
  ComplexMatrix cross;
};

/// Terms for element n given the current state of all other coefficients.
/// Exclusion sums are formed by subtracting element n's rank-one contribution
/// from the full aggregates rather than re-summing.
ElementTerms element_terms(int n, const SurfaceCoefficients& coefs,
                           const ComplexMatrix& bs_to_surface,
                           const ComplexMatrix& surface_to_ms,
                           const SystemParams& params);

/// Sole non-zero eigenvalue of a rank <= 1 square matrix, which is its trace.
/// Rank is the caller's responsibility; debug builds spot-check that all
/// 2x2 minors vanish.
Complex rank_one_eigenvalue(const ComplexMatrix& m);

/// Everything the closed-form coefficient update needs for one element.
struct ElementContext {
  ElementTerms terms;
  ComplexMatrix gain_factor;     // I + |alpha|^2 constant^-1 self_outer
  ComplexMatrix effective_base;  // constant * gain_factor
  double gain_eigenvalue = 0.0;  // sole eigenvalue of constant^-1 self_outer
  Complex cross_eigenvalue{0.0, 0.0};  // sole eigenvalue of effective_base^-1 cross
  double other_active_power_mw = 0.0;  // budget held by the other active elements
  Complex previous{0.0, 0.0};          // current alpha_n
  bool active = false;
};

ElementContext element_context(int n, const SurfaceCoefficients& coefs,
                               const ComplexMatrix& bs_to_surface,
                               const ComplexMatrix& surface_to_ms,
                               const SystemParams& params,
                               const std::vector<double>& costs);

/// Closed-form per-element update: phase opposes the cross eigenvalue
/// (quantized per params.phase_bits); modulus is 1 for passive elements and
/// absorbs the entire remaining budget for active ones. A zero cross
/// eigenvalue leaves the previous coefficient untouched. Throws if the
/// remaining budget is negative beyond 1e-12 mW.
Complex update_coefficient(int n, const ElementContext& ctx, const SystemParams& params,
                           const std::vector<double>& costs);

/// Two routes to the single-element objective, returned together so tests
/// can assert their agreement, plus the rank-one determinant sub-identity
/// evaluated both directly and in closed form.
struct DecompositionValues {
  double direct = 0.0;           // log2 det of the assembled aggregate
  double decomposed = 0.0;       // three-term sum through the factored form
  double rank_one_direct = 0.0;  // log2 det(I + |alpha|^2 constant^-1 self_outer)
  double rank_one_closed = 0.0;  // log2(1 + |alpha|^2 gain_eigenvalue)
};

DecompositionValues objective_decomposition(const ElementTerms& terms, Complex alpha);

struct AoConfig {
  int max_sweeps = 100;
  double rel_tol = 1e-4;
  std::uint64_t seed = 1;
  std::vector<int> active_set;  // sorted ascending, 0-based
};

struct AoReport {
  SurfaceCoefficients coefficients;
  std::vector<double> objective_trace;  // surrogate objective after each sweep
  double se_exact_bits = 0.0;
  double se_upper_bits = 0.0;
  int sweeps_used = 0;
};

/// Called after every single coefficient update with the element index and
/// the full current coefficient state.
using UpdateObserver = std::function<void(int element, const SurfaceCoefficients&)>;

/// Random starting point: phases uniform on the quantized grid (or on
/// [0, 2*pi) in continuous mode) for every element; active moduli carry
/// normalized random power fractions so the budget is spent exactly.
/// Draw order: one phase per element ascending, then one weight per active
/// element ascending.
SurfaceCoefficients random_initial_coefficients(int n_elements,
                                                const std::vector<int>& active_set,
                                                const std::vector<double>& costs,
                                                const SystemParams& params,
                                                RandomStream& rng);

/// Cyclic per-element sweeps of the closed-form update, ascending element
/// order, until the surrogate objective's relative change drops below
/// rel_tol or max_sweeps is reached (the latter is not an error; the report
/// then carries sweeps_used == max_sweeps). In continuous-phase mode the
/// recorded trace is non-decreasing and the final state is returned; in
/// quantized mode the trace records the best value seen so far and the
/// best-scoring sweep state is returned.
AoReport alternating_optimize_from(const ComplexMatrix& bs_to_surface,
                                   const ComplexMatrix& surface_to_ms,
                                   const SystemParams& params, const AoConfig& config,
                                   SurfaceCoefficients initial,
                                   const UpdateObserver& observer = {});

/// Same, with the starting point drawn from a stream seeded by config.seed.
AoReport alternating_optimize(const ComplexMatrix& bs_to_surface,
                              const ComplexMatrix& surface_to_ms,
                              const SystemParams& params, const AoConfig& config,
                              const UpdateObserver& observer = {});

/// Stationarity scan: true iff no single-coefficient replacement improves the
/// surrogate objective by more than rel_tol (relative to max(1, |f|)).
/// Candidate phases are the quantized grid, or grid_size uniform phases in
/// continuous mode; active elements additionally scan grid_size moduli from 0
/// to the full remaining-budget amplitude.
bool coordinate_optimality_check(const ComplexMatrix& bs_to_surface,
                                 const ComplexMatrix& surface_to_ms,
                                 const SurfaceCoefficients& coefs,
                                 const SystemParams& params, int grid_size,
                                 double rel_tol);

}  // namespace hrris
