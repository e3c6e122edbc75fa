#ifndef XYD_ANALYSIS_HPP
#define XYD_ANALYSIS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "core/channels.hpp"
#include "core/xstate.hpp"

namespace xyd {

struct TrajectoryPoint {
  double p;
  double mutual_info;
  double classical;
  double discord;
  DiscordBranch branch;
};

struct Trajectory {
  ModelParams params;
  int r = 1;
  Channel channel = Channel::BPF;
  std::vector<TrajectoryPoint> points;
};

enum class DynamicsType { II, III };
enum class SuddenChangeMethod { RatioFormula, BranchRoot };

struct SuddenChange {
  std::optional<double> p_sc;  // present iff dynamics type II
  SuddenChangeMethod method = SuddenChangeMethod::RatioFormula;
  DynamicsType dynamics_type = DynamicsType::III;
};

enum class SweepVariable { Lambda, Gamma };

// (I, C, Q) versus p under the closed-form channel evolution; the
// initial reduced density matrix is built once at p = 0.
Trajectory trajectory(const ModelParams& params, int r, Channel ch,
                      const std::vector<double>& p_grid,
                      const QuadratureConfig& quad);

std::vector<double> uniform_p_grid(int n = 501);

// Sudden-change time: the closed ratio formula 1 - sqrt(R_c) for BF/BPF,
// a bisection root of Q1(p) = Q2(p) for PF. Throws DegenerateState when
// both initial coefficients vanish (the gamma = 0 line), MultiRoot if
// the PF branch difference changes sign more than once.
SuddenChange sudden_change_point(const ModelParams& params, int r, Channel ch,
                                 const QuadratureConfig& quad);

DynamicsType classify_dynamics(const ModelParams& params, int r, Channel ch,
                               const QuadratureConfig& quad);

// Central finite difference of p_sc along lambda or gamma.
double psc_derivative(const ModelParams& params, int r, Channel ch,
                      SweepVariable wrt, double h,
                      const QuadratureConfig& quad);

struct QcpEstimate {
  double lambda_star;
  double peak_value;
};

// Finite-temperature QCP estimate: the location of the maximum of
// dp_sc/dlambda over lambda_range, grid scan plus golden-section
// refinement to 1e-4.
QcpEstimate qcp_estimate(Channel ch, double gamma, double beta, int r,
                         std::pair<double, double> lambda_range, int grid_n,
                         const QuadratureConfig& quad, double h = 1e-4);

// Discord at fixed p for separations r = 1..r_max.
std::vector<std::pair<int, double>> discord_decay_profile(
    const ModelParams& params, Channel ch, ParamTime p, int r_max,
    const QuadratureConfig& quad);

}  // namespace xyd

#endif
