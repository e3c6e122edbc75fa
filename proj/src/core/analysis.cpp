#include "core/analysis.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace xyd {

namespace {

constexpr double kCoeffEps = 1e-12;

// PF branch difference Q1 - Q2 at parametrized time p.
double branch_difference(const CCoeffs& c0, double p) {
  const XState s = x_representation(evolve_closed_form(c0, Channel::PF, {p}));
  const auto [q1, q2] = discord_branches(s);
  return q1 - q2;
}

SuddenChange ratio_formula(double numer, double denom) {
  SuddenChange sc;
  sc.method = SuddenChangeMethod::RatioFormula;
  if (denom > numer) {
    sc.p_sc = 1.0 - std::sqrt(numer / denom);
    sc.dynamics_type = DynamicsType::II;
  }
  return sc;
}

SuddenChange pf_branch_root(const CCoeffs& c0) {
  SuddenChange sc;
  sc.method = SuddenChangeMethod::BranchRoot;

  constexpr int kScanPoints = 64;
  constexpr double kEps = 1e-6;
  double prev_p = kEps;
  double prev_d = branch_difference(c0, prev_p);
  double lo = 0, hi = 0;
  int crossings = 0;
  for (int i = 1; i < kScanPoints; ++i) {
    const double p = kEps + (1.0 - 2 * kEps) * i / (kScanPoints - 1);
    const double d = branch_difference(c0, p);
    if (prev_d == 0.0 || (prev_d < 0) != (d < 0)) {
      if (++crossings == 1) {
        lo = prev_p;
        hi = p;
      }
    }
    prev_p = p;
    prev_d = d;
  }
  if (crossings == 0) return sc;
  if (crossings > 1)
    throw MultiRoot("Q1 - Q2 changes sign " + std::to_string(crossings) +
                    " times in (0, 1)");

  double flo = branch_difference(c0, lo);
  while (hi - lo > 1e-8) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = branch_difference(c0, mid);
    if ((flo < 0) == (fmid < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  sc.p_sc = 0.5 * (lo + hi);
  sc.dynamics_type = DynamicsType::II;
  return sc;
}

}  // namespace

std::vector<double> uniform_p_grid(int n) {
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = double(i) / (n - 1);
  return grid;
}

Trajectory trajectory(const ModelParams& params, int r, Channel ch,
                      const std::vector<double>& p_grid,
                      const QuadratureConfig& quad) {
  Trajectory traj;
  traj.params = params;
  traj.r = r;
  traj.channel = ch;
  traj.points.reserve(p_grid.size());

  const CCoeffs c0 = c_representation(reduced_density_matrix(params, r, quad));
  double prev = -1;
  for (double p : p_grid) {
    if (p < 0 || p > 1 || p <= prev)
      throw InvalidArgument("p grid must be strictly increasing within [0, 1]");
    prev = p;
    const XState s = x_representation(evolve_closed_form(c0, ch, {p}));
    const DiscordResult q = discord(s);
    // Entropy round-off can leave O(1e-16) negatives on exactly-zero
    // correlations; snap them.
    const auto snap = [](double v) { return std::fabs(v) < 1e-12 ? 0.0 : v; };
    const double info = snap(mutual_information(s));
    const double qd = snap(q.value);
    traj.points.push_back({p, info, snap(info - qd), qd, q.branch});
  }
  return traj;
}

SuddenChange sudden_change_point(const ModelParams& params, int r, Channel ch,
                                 const QuadratureConfig& quad) {
  const CCoeffs c0 = c_representation(reduced_density_matrix(params, r, quad));
  const double a1 = std::fabs(c0.c1), a2 = std::fabs(c0.c2);
  if (a1 < kCoeffEps && a2 < kCoeffEps)
    throw DegenerateState(
        "both initial correlation coefficients vanish; p_sc undefined");

  switch (ch) {
    case Channel::BPF: return ratio_formula(a2, a1);
    case Channel::BF: return ratio_formula(a1, a2);
    case Channel::PF: return pf_branch_root(c0);
  }
  throw InvalidArgument("unknown channel");
}

DynamicsType classify_dynamics(const ModelParams& params, int r, Channel ch,
                               const QuadratureConfig& quad) {
  return sudden_change_point(params, r, ch, quad).dynamics_type;
}

double psc_derivative(const ModelParams& params, int r, Channel ch,
                      SweepVariable wrt, double h,
                      const QuadratureConfig& quad) {
  if (h <= 0) throw InvalidArgument("derivative step must be positive");

  ModelParams lo = params, hi = params;
  if (wrt == SweepVariable::Lambda) {
    lo.lambda -= h;
    hi.lambda += h;
  } else {
    lo.gamma -= h;
    hi.gamma += h;
  }
  if (!lo.valid() || !hi.valid())
    throw DomainEdge("finite-difference neighbor leaves the parameter region");

  double psc[2];
  const ModelParams* side[2] = {&lo, &hi};
  for (int i = 0; i < 2; ++i) {
    SuddenChange sc;
    try {
      sc = sudden_change_point(*side[i], r, ch, quad);
    } catch (const DegenerateState&) {
      throw DomainEdge("p_sc degenerate at a finite-difference neighbor");
    }
    if (!sc.p_sc)
      throw DomainEdge("p_sc absent at a finite-difference neighbor");
    psc[i] = *sc.p_sc;
  }
  return (psc[1] - psc[0]) / (2 * h);
}

QcpEstimate qcp_estimate(Channel ch, double gamma, double beta, int r,
                         std::pair<double, double> lambda_range, int grid_n,
                         const QuadratureConfig& quad, double h) {
  if (!std::isfinite(beta) || beta <= 0)
    throw InvalidArgument("qcp_estimate requires a finite temperature");
  if (grid_n < 32) throw InvalidArgument("qcp_estimate needs grid_n >= 32");
  const auto [lo, hi] = lambda_range;
  if (!(hi > lo) || lo <= 0)
    throw InvalidArgument("invalid lambda range for qcp_estimate");

  const auto deriv = [&](double lambda) {
    ModelParams p;
    p.lambda = lambda;
    p.gamma = gamma;
    p.beta = beta;
    return psc_derivative(p, r, ch, SweepVariable::Lambda, h, quad);
  };

  std::vector<double> value(grid_n);
  int best = 0;
  for (int i = 0; i < grid_n; ++i) {
    const double lambda = lo + (hi - lo) * i / (grid_n - 1);
    value[i] = deriv(lambda);
    if (value[i] > value[best]) best = i;
  }
  if (best == 0 || best == grid_n - 1)
    throw NoPeak("dp_sc/dlambda is monotone over the scanned range");

  // Golden-section refinement of the bracketed maximum.
  const double step = (hi - lo) / (grid_n - 1);
  double a = lo + step * (best - 1);
  double b = lo + step * (best + 1);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = deriv(x1), f2 = deriv(x2);
  while (b - a > 1e-4) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = deriv(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = deriv(x1);
    }
  }
  const double lambda_star = 0.5 * (a + b);
  return {lambda_star, deriv(lambda_star)};
}

std::vector<std::pair<int, double>> discord_decay_profile(
    const ModelParams& params, Channel ch, ParamTime p, int r_max,
    const QuadratureConfig& quad) {
  if (r_max < 1 || r_max > 8)
    throw InvalidArgument("profile requires 1 <= r_max <= 8");
  std::vector<std::pair<int, double>> profile;
  profile.reserve(r_max);
  for (int r = 1; r <= r_max; ++r) {
    const CCoeffs c0 =
        c_representation(reduced_density_matrix(params, r, quad));
    const XState s = x_representation(evolve_closed_form(c0, ch, p));
    profile.emplace_back(r, discord(s).value);
  }
  return profile;
}

}  // namespace xyd
