#ifndef XYD_QUADRATURE_HPP
#define XYD_QUADRATURE_HPP

#include <cstdint>
#include <functional>

namespace xyd {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 1 << 16;

  bool valid() const {
    return rel_tol > 0 && abs_tol > 0 && max_subdivisions >= 16;
  }
};

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  int subdivisions = 0;
};

// Adaptive Gauss-Kronrod (7,15) integration on [a, b]. Throws
// QuadratureFailure if the tolerance is not met within
// cfg.max_subdivisions interval splits.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureConfig& cfg);

}  // namespace xyd

#endif
