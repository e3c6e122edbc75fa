#include "core/xy_model.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <string>

#include "core/errors.hpp"

namespace xyd {

namespace {

constexpr double kPi = std::numbers::pi;

double thermal_factor(const ModelParams& params, double omega) {
  if (params.ground_state()) return 1.0;
  return std::tanh(0.5 * params.beta * omega);
}

void check_params(const ModelParams& params) {
  if (!params.valid())
    throw InvalidArgument("model parameters out of range (need lambda >= 0, "
                          "|gamma| <= 1, beta > 0)");
}

// Integrate the G_r kernel over [0, pi], splitting at the dispersion
// kink arccos(-1/lambda) when gamma = 0 and lambda > 1.
double integrate_kernel(const ModelParams& params,
                        const std::function<double(double)>& f,
                        const QuadratureConfig& quad) {
  if (params.gamma == 0.0 && params.lambda > 1.0) {
    const double kink = std::acos(-1.0 / params.lambda);
    return integrate(f, 0.0, kink, quad).value +
           integrate(f, kink, kPi, quad).value;
  }
  return integrate(f, 0.0, kPi, quad).value;
}

}  // namespace

bool ModelParams::valid() const {
  return lambda >= 0 && gamma >= -1 && gamma <= 1 && beta > 0;
}

ModelParams ModelParams::from_kt(double lambda, double gamma, double kt) {
  ModelParams p;
  p.lambda = lambda;
  p.gamma = gamma;
  p.beta = (kt == 0.0) ? kGroundState : 1.0 / kt;
  return p;
}

double dispersion(const ModelParams& params, double phi) {
  const double sx = params.gamma * params.lambda * std::sin(phi);
  const double cx = 1.0 + params.lambda * std::cos(phi);
  return std::hypot(sx, cx);
}

double g_coefficient(const ModelParams& params, int r,
                     const QuadratureConfig& quad) {
  check_params(params);
  const double cosine_part = integrate_kernel(
      params,
      [&](double phi) {
        const double omega = dispersion(params, phi);
        return thermal_factor(params, omega) * std::cos(r * phi) *
               (1.0 + params.lambda * std::cos(phi)) / omega;
      },
      quad);
  double sine_part = 0.0;
  if (params.gamma != 0.0 && r != 0) {
    sine_part = integrate_kernel(
        params,
        [&](double phi) {
          const double omega = dispersion(params, phi);
          return thermal_factor(params, omega) * std::sin(r * phi) *
                 std::sin(phi) / omega;
        },
        quad);
  }
  return (cosine_part - params.gamma * params.lambda * sine_part) / kPi;
}

double transverse_magnetization(const ModelParams& params,
                                const QuadratureConfig& quad) {
  return -g_coefficient(params, 0, quad);
}

double spin_correlation(const ModelParams& params, Axis axis, int r,
                        const QuadratureConfig& quad) {
  check_params(params);
  if (r < 1) throw InvalidArgument("spin separation r must be >= 1");
  if (r > kMaxToeplitzOrder)
    throw UnsupportedRange("spin separation r = " + std::to_string(r) +
                           " exceeds the Toeplitz determinant cap " +
                           std::to_string(kMaxToeplitzOrder));

  if (axis == Axis::Z) {
    const double mz = transverse_magnetization(params, quad);
    return mz * mz - g_coefficient(params, r, quad) *
                         g_coefficient(params, -r, quad);
  }

  // Entry (i, j) is G_{i-j-1} for x and G_{i-j+1} for y; cache the
  // 2r-1 distinct coefficients.
  const int shift = (axis == Axis::X) ? -1 : +1;
  std::vector<double> g(2 * r - 1);
  for (int k = 0; k < 2 * r - 1; ++k)
    g[k] = g_coefficient(params, (k - (r - 1)) + shift, quad);

  Eigen::MatrixXd m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = g[(i - j) + (r - 1)];
  return Eigen::PartialPivLU<Eigen::MatrixXd>(m).determinant();
}

}  // namespace xyd
