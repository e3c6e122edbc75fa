#include <cmath>

#include "core/analysis.hpp"
#include "core/errors.hpp"
#include "doctest.h"

using namespace xyd;

namespace {

const QuadratureConfig kQuad;

ModelParams ground(double lambda, double gamma) {
  ModelParams p;
  p.lambda = lambda;
  p.gamma = gamma;
  return p;
}

}  // namespace

TEST_CASE("trajectory of a product initial state is flat zero") {
  const Trajectory traj =
      trajectory(ground(0.0, 0.7), 1, Channel::PF, uniform_p_grid(21), kQuad);
  for (const auto& pt : traj.points) {
    CHECK(std::fabs(pt.mutual_info) < 1e-10);
    CHECK(std::fabs(pt.classical) < 1e-10);
    CHECK(std::fabs(pt.discord) < 1e-10);
  }
}

TEST_CASE("trajectory decomposition I = C + Q") {
  for (Channel ch : {Channel::BF, Channel::BPF, Channel::PF}) {
    const Trajectory traj =
        trajectory(ground(0.7, 0.7), 1, ch, uniform_p_grid(101), kQuad);
    for (const auto& pt : traj.points) {
      CHECK(std::fabs(pt.mutual_info - pt.classical - pt.discord) < 1e-10);
      CHECK(pt.mutual_info >= -1e-12);
      CHECK(pt.classical >= -1e-12);
      CHECK(pt.discord >= -1e-12);
    }
  }
}

TEST_CASE("PF discord exceeds classical below the sudden change") {
  const Trajectory traj =
      trajectory(ground(0.7, 0.7), 1, Channel::PF, uniform_p_grid(201), kQuad);
  int q_above_c = 0;
  for (const auto& pt : traj.points)
    if (pt.p > 0 && pt.p < 0.173 && pt.discord > pt.classical) ++q_above_c;
  CHECK(q_above_c > 0);
}

TEST_CASE("negative-anisotropy BPF dynamics decay monotonically") {
  const Trajectory traj = trajectory(ground(0.7, -0.7), 1, Channel::BPF,
                                     uniform_p_grid(101), kQuad);
  for (size_t i = 1; i + 1 < traj.points.size(); ++i) {
    CHECK(traj.points[i].classical < traj.points[i - 1].classical);
    CHECK(traj.points[i].discord < traj.points[i - 1].discord);
  }
}

TEST_CASE("sudden change: BPF ratio formula") {
  const SuddenChange sc =
      sudden_change_point(ground(0.7, 0.7), 1, Channel::BPF, kQuad);
  REQUIRE(sc.p_sc.has_value());
  CHECK(sc.method == SuddenChangeMethod::RatioFormula);
  CHECK(sc.dynamics_type == DynamicsType::II);
  CHECK(*sc.p_sc == doctest::Approx(0.114).epsilon(0.01));
  // Frozen value from the independent scipy pipeline.
  CHECK(*sc.p_sc == doctest::Approx(0.113999467989600).epsilon(1e-7));
}

TEST_CASE("sudden change: PF branch root") {
  const SuddenChange sc =
      sudden_change_point(ground(0.7, 0.7), 1, Channel::PF, kQuad);
  REQUIRE(sc.p_sc.has_value());
  CHECK(sc.method == SuddenChangeMethod::BranchRoot);
  CHECK(*sc.p_sc == doctest::Approx(0.173362579402).epsilon(1e-6));
}

TEST_CASE("sudden change absent for BPF at negative gamma") {
  const SuddenChange sc =
      sudden_change_point(ground(0.7, -0.7), 1, Channel::BPF, kQuad);
  CHECK(!sc.p_sc.has_value());
  CHECK(sc.dynamics_type == DynamicsType::III);
}

TEST_CASE("degenerate coefficients rejected") {
  CHECK_THROWS_AS(sudden_change_point(ground(0.0, 0.5), 1, Channel::BPF, kQuad),
                  DegenerateState);
}

TEST_CASE("dynamics classification and BF/BPF interchange") {
  CHECK(classify_dynamics(ground(0.7, 0.7), 1, Channel::BPF, kQuad) ==
        DynamicsType::II);
  CHECK(classify_dynamics(ground(0.7, 0.7), 1, Channel::BF, kQuad) ==
        DynamicsType::III);
  const SuddenChange bf =
      sudden_change_point(ground(0.7, -0.7), 1, Channel::BF, kQuad);
  REQUIRE(bf.p_sc.has_value());
  CHECK(*bf.p_sc == doctest::Approx(0.114).epsilon(0.01));
}

TEST_CASE("ratio formula coincides with the coefficient-crossing root") {
  // Bisect |c1(p)| = |c2(p)| on the closed-form evolution directly.
  const CCoeffs c0 =
      c_representation(reduced_density_matrix(ground(0.7, 0.7), 1, kQuad));
  auto gap = [&](double p) {
    const CCoeffs c = evolve_closed_form(c0, Channel::BPF, {p});
    return std::fabs(c.c1) - std::fabs(c.c2);
  };
  double lo = 0.0, hi = 0.9;
  REQUIRE(gap(lo) > 0);
  REQUIRE(gap(hi) < 0);
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) > 0 ? lo : hi) = mid;
  }
  const SuddenChange sc =
      sudden_change_point(ground(0.7, 0.7), 1, Channel::BPF, kQuad);
  CHECK(std::fabs(*sc.p_sc - 0.5 * (lo + hi)) < 1e-10);
}

TEST_CASE("PF classical correlations constant past the sudden change") {
  const SuddenChange sc =
      sudden_change_point(ground(0.7, 0.7), 1, Channel::PF, kQuad);
  const Trajectory traj =
      trajectory(ground(0.7, 0.7), 1, Channel::PF, uniform_p_grid(101), kQuad);
  const double tail = traj.points.back().mutual_info;  // I at p = 1
  for (const auto& pt : traj.points) {
    if (pt.p > *sc.p_sc + 1e-3) {
      CHECK(std::fabs(pt.classical - tail) < 1e-10);
      CHECK(pt.branch == DiscordBranch::Q1);
    } else if (pt.p < *sc.p_sc - 1e-3 && pt.p > 0) {
      CHECK(pt.branch == DiscordBranch::Q2);
    }
  }
}

TEST_CASE("BF/BPF duality and PF gamma symmetry") {
  for (double gamma : {0.2, 0.5, 0.8}) {
    const SuddenChange bpf =
        sudden_change_point(ground(0.7, gamma), 1, Channel::BPF, kQuad);
    const SuddenChange bf =
        sudden_change_point(ground(0.7, -gamma), 1, Channel::BF, kQuad);
    REQUIRE(bpf.p_sc.has_value());
    REQUIRE(bf.p_sc.has_value());
    CHECK(std::fabs(*bpf.p_sc - *bf.p_sc) < 1e-10);

    const SuddenChange pf_pos =
        sudden_change_point(ground(0.7, gamma), 1, Channel::PF, kQuad);
    const SuddenChange pf_neg =
        sudden_change_point(ground(0.7, -gamma), 1, Channel::PF, kQuad);
    REQUIRE(pf_pos.p_sc.has_value());
    REQUIRE(pf_neg.p_sc.has_value());
    CHECK(std::fabs(*pf_pos.p_sc - *pf_neg.p_sc) < 1e-10);
  }
}

TEST_CASE("p_sc derivative step-size robustness") {
  const double d3 = psc_derivative(ground(0.7, 0.7), 1, Channel::BPF,
                                   SweepVariable::Lambda, 1e-3, kQuad);
  const double d4 = psc_derivative(ground(0.7, 0.7), 1, Channel::BPF,
                                   SweepVariable::Lambda, 1e-4, kQuad);
  CHECK(std::fabs(d3 - d4) < 1e-4);
}

TEST_CASE("p_sc derivative grows toward the Ising QCP") {
  double prev = 0;
  for (double lambda : {0.8, 0.9, 0.99}) {
    const double d = psc_derivative(ground(lambda, 0.7), 1, Channel::BPF,
                                    SweepVariable::Lambda, 1e-4, kQuad);
    CHECK(d > prev);
    prev = d;
  }
}

TEST_CASE("PF p_sc derivative antisymmetric in gamma") {
  const double plus = psc_derivative(ground(0.7, 0.5), 1, Channel::PF,
                                     SweepVariable::Gamma, 1e-4, kQuad);
  const double minus = psc_derivative(ground(0.7, -0.5), 1, Channel::PF,
                                      SweepVariable::Gamma, 1e-4, kQuad);
  CHECK(std::fabs(plus + minus) < 1e-6);
}

TEST_CASE("derivative domain edges raise") {
  // gamma + h leaves [-1, 1].
  CHECK_THROWS_AS(psc_derivative(ground(0.7, 1.0), 1, Channel::BPF,
                                 SweepVariable::Gamma, 1e-4, kQuad),
                  DomainEdge);
  // Neighbor crosses into type III (absent p_sc).
  CHECK_THROWS_AS(psc_derivative(ground(0.7, 0.0), 1, Channel::BPF,
                                 SweepVariable::Gamma, 0.05, kQuad),
                  DomainEdge);
}

TEST_CASE("finite-temperature QCP estimate") {
  const QcpEstimate est = qcp_estimate(Channel::BPF, 1.0, 1.0 / 0.1, 1,
                                       {0.7, 1.15}, 32, kQuad);
  CHECK(est.lambda_star < 1.0);
  CHECK(est.lambda_star > 0.7);
  CHECK(est.peak_value > 0.0);
  CHECK_THROWS_AS(qcp_estimate(Channel::BPF, 1.0,
                               ModelParams::kGroundState, 1, {0.7, 1.15}, 32,
                               kQuad),
                  InvalidArgument);
}

TEST_CASE("discord decay profile") {
  const auto profile = discord_decay_profile(ground(0.7, 0.7), Channel::BPF,
                                             {0.05}, 4, kQuad);
  REQUIRE(profile.size() == 4);
  for (size_t i = 1; i < profile.size(); ++i)
    CHECK(profile[i].second < profile[i - 1].second);

  const auto flat =
      discord_decay_profile(ground(0.0, 0.7), Channel::BPF, {0.05}, 3, kQuad);
  for (const auto& [r, q] : flat) CHECK(std::fabs(q) < 1e-10);

  CHECK_THROWS_AS(
      discord_decay_profile(ground(0.7, 0.7), Channel::BPF, {0.05}, 9, kQuad),
      InvalidArgument);
}
