#include "core/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>

#include "core/errors.hpp"

namespace xyd {

namespace {

constexpr double kPi = std::numbers::pi;

// x log2(x/y) with the 0 log 0 := 0 convention.
double slog(double x, double y) {
  if (x < 1e-300) return 0.0;
  return x * std::log2(x / y);
}

double entropy_term(double p) {
  if (p < 1e-300) return 0.0;
  return -p * std::log2(p);
}

// Eigenvalues are clamped to [0, 1] when within 1e-12 of the boundary;
// larger violations mean the state itself is invalid.
double clamp_probability(double p) {
  if (p < 0.0 && p > -1e-12) return 0.0;
  if (p > 1.0 && p < 1.0 + 1e-12) return 1.0;
  return p;
}

}  // namespace

std::array<std::array<double, 4>, 4> XState::matrix() const {
  return {{{a, 0, 0, f}, {0, b, z, 0}, {0, z, b, 0}, {f, 0, 0, d}}};
}

std::string XState::to_json() const {
  const auto m = matrix();
  std::string out = "[";
  for (int i = 0; i < 4; ++i) {
    out += (i == 0) ? "[" : ",[";
    for (int j = 0; j < 4; ++j) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", m[i][j]);
      if (j) out += ",";
      out += buf;
    }
    out += "]";
  }
  out += "]";
  return out;
}

CCoeffs c_representation(const XState& s) {
  return {2 * s.z + 2 * s.f, 2 * s.z - 2 * s.f, s.a + s.d - 2 * s.b,
          s.a - s.d};
}

XState x_representation(const CCoeffs& c) {
  XState s;
  s.a = (1 + c.c3 + 2 * c.c4) / 4;
  s.d = (1 + c.c3 - 2 * c.c4) / 4;
  s.b = (1 - c.c3) / 4;
  s.z = (c.c1 + c.c2) / 4;
  s.f = (c.c1 - c.c2) / 4;
  validate(s);
  return s;
}

void validate(const XState& s) {
  const double trace = s.a + 2 * s.b + s.d;
  if (std::fabs(trace - 1.0) > 1e-9)
    throw PositivityViolation("X state trace differs from 1 by " +
                              std::to_string(trace - 1.0));
  if (s.a < -1e-12 || s.b < -1e-12 || s.d < -1e-12)
    throw PositivityViolation("negative diagonal entry in X state");
  // Positivity of the two 2x2 blocks.
  if (std::fabs(s.z) > s.b + 1e-9)
    throw PositivityViolation("|z| exceeds b: inner block not positive");
  if (s.f * s.f > s.a * s.d + 1e-9)
    throw PositivityViolation("f^2 exceeds a*d: outer block not positive");
  for (double ev : eigenvalues(s))
    if (ev < -1e-9)
      throw PositivityViolation("negative eigenvalue " + std::to_string(ev));
}

XState reduced_density_matrix(const ModelParams& params, int r,
                              const QuadratureConfig& quad) {
  const double mz = transverse_magnetization(params, quad);
  const double zz = spin_correlation(params, Axis::Z, r, quad);
  const double xx = spin_correlation(params, Axis::X, r, quad);
  const double yy = spin_correlation(params, Axis::Y, r, quad);

  XState s;
  s.a = 0.25 + 0.5 * mz + 0.25 * zz;
  s.d = 0.25 - 0.5 * mz + 0.25 * zz;
  s.b = 0.25 * (1.0 - zz);
  s.z = 0.25 * (xx + yy);
  s.f = 0.25 * (xx - yy);
  validate(s);
  return s;
}

std::array<double, 4> eigenvalues(const XState& s) {
  const CCoeffs c = c_representation(s);
  const double root =
      std::sqrt(4 * c.c4 * c.c4 + (c.c1 - c.c2) * (c.c1 - c.c2));
  std::array<double, 4> ev = {
      0.25 * (1 + c.c3 + root), 0.25 * (1 + c.c3 - root),
      0.25 * (1 - c.c3 + c.c1 + c.c2), 0.25 * (1 - c.c3 - c.c1 - c.c2)};
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

Entropies entropies(const XState& s) {
  const double c4 = s.a - s.d;
  const double single =
      entropy_term(clamp_probability(0.5 * (1 + c4))) +
      entropy_term(clamp_probability(0.5 * (1 - c4)));
  double joint = 0;
  for (double ev : eigenvalues(s)) joint += entropy_term(clamp_probability(ev));
  return {single, joint};
}

double mutual_information(const XState& s) {
  const Entropies e = entropies(s);
  return 2 * e.single_site - e.joint;
}

std::pair<double, double> discord_branches(const XState& s) {
  const Entropies e = entropies(s);
  const double base = e.single_site - e.joint;

  const double q1 = base - slog(s.a, s.a + s.b) - slog(s.b, s.a + s.b) -
                    slog(s.d, s.d + s.b) - slog(s.b, s.d + s.b);

  const double gam = std::hypot(s.a - s.d,
                                2 * (std::fabs(s.z) + std::fabs(s.f)));
  const double q2 = base + entropy_term(clamp_probability(0.5 * (1 + gam))) +
                    entropy_term(clamp_probability(0.5 * (1 - gam)));
  return {q1, q2};
}

DiscordResult discord(const XState& s) {
  const auto [q1, q2] = discord_branches(s);
  if (std::fabs(q1 - q2) < 1e-12 || q2 <= q1) return {q2, DiscordBranch::Q2};
  return {q1, DiscordBranch::Q1};
}

double classical_correlations(const XState& s) {
  return mutual_information(s) - discord(s).value;
}

namespace {

using complex = std::complex<double>;

// Measured mutual information J for the projective measurement on B
// whose Bloch direction is (theta, phi).
double measured_information(const XState& s, double s_a, double theta,
                            double phi) {
  const auto rho = s.matrix();
  const complex e0[2] = {std::cos(theta / 2),
                         std::polar(std::sin(theta / 2), phi)};
  const complex e1[2] = {-std::conj(e0[1]), e0[0]};

  double cond = 0;
  for (const auto& e : {e0, e1}) {
    // Unnormalized conditional state of A after outcome e on B.
    complex m[2][2] = {};
    for (int ma = 0; ma < 2; ++ma)
      for (int na = 0; na < 2; ++na)
        for (int pb = 0; pb < 2; ++pb)
          for (int qb = 0; qb < 2; ++qb)
            m[ma][na] +=
                rho[2 * ma + pb][2 * na + qb] * std::conj(e[pb]) * e[qb];
    const double pk = std::real(m[0][0] + m[1][1]);
    if (pk < 1e-14) continue;
    const double half_tr = 0.5 * pk;
    const double det =
        std::real(m[0][0]) * std::real(m[1][1]) - std::norm(m[0][1]);
    const double disc = std::max(half_tr * half_tr - det, 0.0);
    const double mu0 = (half_tr + std::sqrt(disc)) / pk;
    const double mu1 = std::max(1.0 - mu0, 0.0);
    cond += pk * (entropy_term(std::min(mu0, 1.0)) + entropy_term(mu1));
  }
  return s_a - cond;
}

}  // namespace

double discord_oracle(const XState& s, int coarse_grid, int refine_iters) {
  if (coarse_grid < 32) coarse_grid = 32;
  const Entropies e = entropies(s);

  double best_j = -1e300, best_theta = 0, best_phi = 0;
  for (int i = 0; i <= coarse_grid; ++i) {
    const double theta = kPi * i / coarse_grid;
    for (int j = 0; j < coarse_grid; ++j) {
      const double phi = 2 * kPi * j / coarse_grid;
      const double val = measured_information(s, e.single_site, theta, phi);
      if (val > best_j) {
        best_j = val;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }

  // Derivative-free coordinate descent with shrinking step.
  double step = kPi / coarse_grid;
  for (int it = 0; it < refine_iters; ++it) {
    bool improved = false;
    const double cand_theta[2] = {best_theta - step, best_theta + step};
    for (double th : cand_theta) {
      const double val = measured_information(s, e.single_site, th, best_phi);
      if (val > best_j) {
        best_j = val;
        best_theta = th;
        improved = true;
      }
    }
    const double cand_phi[2] = {best_phi - step, best_phi + step};
    for (double ph : cand_phi) {
      const double val =
          measured_information(s, e.single_site, best_theta, ph);
      if (val > best_j) {
        best_j = val;
        best_phi = ph;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
    if (step < 1e-9) break;
  }

  return mutual_information(s) - best_j;
}

}  // namespace xyd
