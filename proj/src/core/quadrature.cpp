#include "core/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "core/errors.hpp"

namespace xyd {

namespace {

// Gauss-Kronrod (7,15) on [-1, 1]; nodes are symmetric, only the
// nonnegative half is tabulated.
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a,
                     double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);

  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(mid - half * kKronrodNodes[i]);
    fv[14 - i] = f(mid + half * kKronrodNodes[i]);
  }
  fv[7] = f(mid);

  double kronrod = kKronrodWeights[7] * fv[7];
  for (int i = 0; i < 7; ++i)
    kronrod += kKronrodWeights[i] * (fv[i] + fv[14 - i]);

  // Gauss-7 nodes are the odd Kronrod nodes.
  double gauss = kGaussWeights[3] * fv[7];
  for (int i = 0; i < 3; ++i)
    gauss += kGaussWeights[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);

  Panel p;
  p.a = a;
  p.b = b;
  p.value = kronrod * half;
  const double diff = std::fabs((kronrod - gauss) * half);
  // Standard QUADPACK-style sharpened error estimate.
  p.error = diff;
  if (diff > 0) {
    double resasc = 0;
    for (int i = 0; i < 15; ++i) resasc += std::fabs(fv[i]);
    resasc *= std::fabs(half) / 15.0;
    if (resasc > 0) {
      const double scaled = std::pow(200.0 * diff / resasc, 1.5);
      if (scaled < 1.0) p.error = resasc * scaled;
    }
  }
  return p;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureConfig& cfg) {
  if (!cfg.valid()) throw InvalidArgument("invalid quadrature configuration");
  if (!(b > a)) {
    if (b == a) return {0.0, 0.0, 0};
    throw InvalidArgument("integration bounds reversed");
  }

  std::vector<Panel> panels;
  panels.push_back(evaluate_panel(f, a, b));

  int subdivisions = 0;
  for (;;) {
    double total = 0, err = 0;
    for (const Panel& p : panels) {
      total += p.value;
      err += p.error;
    }
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total));
    if (err <= tol)
      return {total, err, subdivisions};
    if (subdivisions >= cfg.max_subdivisions)
      throw QuadratureFailure("quadrature tolerance not reached within " +
                              std::to_string(cfg.max_subdivisions) +
                              " subdivisions");

    auto worst = std::max_element(
        panels.begin(), panels.end(),
        [](const Panel& x, const Panel& y) { return x.error < y.error; });
    const Panel split = *worst;
    const double mid = 0.5 * (split.a + split.b);
    if (mid <= split.a || mid >= split.b)
      throw QuadratureFailure("interval underflow during subdivision");
    *worst = evaluate_panel(f, split.a, mid);
    panels.push_back(evaluate_panel(f, mid, split.b));
    ++subdivisions;
  }
}

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::UnsupportedRange: return "UnsupportedRange";
    case ErrorCode::PositivityViolation: return "PositivityViolation";
    case ErrorCode::FormViolation: return "FormViolation";
    case ErrorCode::DegenerateState: return "DegenerateState";
    case ErrorCode::DomainEdge: return "DomainEdge";
    case ErrorCode::MultiRoot: return "MultiRoot";
    case ErrorCode::NoPeak: return "NoPeak";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace xyd
