#ifndef XYD_XY_MODEL_HPP
#define XYD_XY_MODEL_HPP

#include <limits>

#include "core/quadrature.hpp"

namespace xyd {

// Parameter point of the 1d transverse-field XY chain. beta is the
// inverse temperature 1/kT; beta == infinity selects the ground state
// (the thermal tanh factor is identically 1).
struct ModelParams {
  double lambda = 1.0;  // inverse transverse-field strength, >= 0
  double gamma = 1.0;   // anisotropy, in [-1, 1]
  double beta = std::numeric_limits<double>::infinity();

  static constexpr double kGroundState =
      std::numeric_limits<double>::infinity();

  bool ground_state() const { return beta == kGroundState; }
  bool valid() const;

  // kt == 0 maps to the ground state.
  static ModelParams from_kt(double lambda, double gamma, double kt);
};

enum class Axis { X, Y, Z };

inline constexpr int kMaxToeplitzOrder = 16;

// Quasiparticle dispersion omega_phi, phi in [0, pi].
double dispersion(const ModelParams& params, double phi);

// Single-site transverse magnetization <sigma^z>; equals -G_0.
double transverse_magnetization(const ModelParams& params,
                                const QuadratureConfig& quad);

// Toeplitz coefficient G_r (any integer r).
double g_coefficient(const ModelParams& params, int r,
                     const QuadratureConfig& quad);

// Two-spin correlator <sigma^axis_i sigma^axis_{i+r}>, 1 <= r <= 16.
// x and y are r x r Toeplitz determinants of G coefficients, z is the
// closed form <sigma^z>^2 - G_r G_{-r}.
double spin_correlation(const ModelParams& params, Axis axis, int r,
                        const QuadratureConfig& quad);

}  // namespace xyd

#endif
