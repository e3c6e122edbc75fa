#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "core/channels.hpp"
#include "core/errors.hpp"
#include "core/xstate.hpp"
#include "doctest.h"
#include "random_states.hpp"

using namespace xyd;
using xyd::testing::random_xstate;

namespace {

constexpr double kPi = std::numbers::pi;
const QuadratureConfig kQuad;

ModelParams ground(double lambda, double gamma) {
  ModelParams p;
  p.lambda = lambda;
  p.gamma = gamma;
  return p;
}

const XState kProduct{0, 0, 1, 0, 0};
const XState kBell{0.5, 0, 0.5, 0, 0.5};
const XState kMaxMixed{0.25, 0.25, 0.25, 0, 0};

// Dense eigensolver oracle on the assembled 4x4 matrix.
std::array<double, 4> dense_eigenvalues(const XState& s) {
  Eigen::Matrix4d m;
  const auto a = s.matrix();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = a[i][j];
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(m);
  std::array<double, 4> ev;
  for (int i = 0; i < 4; ++i) ev[i] = solver.eigenvalues()(3 - i);
  return ev;
}

}  // namespace

TEST_CASE("reduced density matrix reference states") {
  const XState polarized = reduced_density_matrix(ground(0.0, 0.7), 1, kQuad);
  CHECK(std::fabs(polarized.a) < 1e-10);
  CHECK(std::fabs(polarized.b) < 1e-10);
  CHECK(polarized.d == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::fabs(polarized.z) < 1e-10);
  CHECK(std::fabs(polarized.f) < 1e-10);

  // Ising point: z = (2/pi - 2/(3 pi))/4, f = (2/pi + 2/(3 pi))/4.
  const XState ising = reduced_density_matrix(ground(1.0, 1.0), 1, kQuad);
  CHECK(ising.z == doctest::Approx(1.0 / (3 * kPi)).epsilon(1e-9));
  CHECK(ising.f == doctest::Approx(2.0 / (3 * kPi)).epsilon(1e-9));

  const CCoeffs c =
      c_representation(reduced_density_matrix(ground(0.7, 0.7), 1, kQuad));
  CHECK(std::fabs(c.c1) > std::fabs(c.c2));
  // Frozen regression (independent scipy quadrature).
  CHECK(c.c1 == doctest::Approx(0.282813514764737).epsilon(1e-9));
  CHECK(c.c2 == doctest::Approx(-0.222007744450983).epsilon(1e-9));
  CHECK(c.c3 == doctest::Approx(0.910419339380408).epsilon(1e-9));
  CHECK(c.c4 == doctest::Approx(-0.920669619824198).epsilon(1e-9));
}

TEST_CASE("state invariants hold over a parameter grid") {
  for (double lambda : {0.3, 0.7, 1.0, 1.4}) {
    for (double gamma : {-0.7, 0.0, 0.5, 1.0}) {
      for (int r : {1, 2}) {
        const XState s =
            reduced_density_matrix(ground(lambda, gamma), r, kQuad);
        CHECK(s.a + 2 * s.b + s.d == doctest::Approx(1.0).epsilon(1e-10));
        for (double ev : eigenvalues(s)) CHECK(ev > -1e-10);
      }
    }
  }
}

TEST_CASE("c representation round trip") {
  const CCoeffs c = c_representation(kProduct);
  CHECK(c.c1 == 0);
  CHECK(c.c2 == 0);
  CHECK(c.c3 == 1);
  CHECK(c.c4 == -1);
  const XState back = x_representation(c);
  CHECK(back.d == 1);
  CHECK(back.a == 0);

  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const XState s = random_xstate(rng);
    const XState t = x_representation(c_representation(s));
    CHECK(std::fabs(t.a - s.a) < 1e-14);
    CHECK(std::fabs(t.b - s.b) < 1e-14);
    CHECK(std::fabs(t.d - s.d) < 1e-14);
    CHECK(std::fabs(t.z - s.z) < 1e-14);
    CHECK(std::fabs(t.f - s.f) < 1e-14);
  }
}

TEST_CASE("x_representation rejects unphysical coefficients") {
  CHECK_THROWS_AS(x_representation({2.0, 0.0, 0.0, 0.0}),
                  PositivityViolation);
}

TEST_CASE("closed-form eigenvalues") {
  const auto pure = eigenvalues(kProduct);
  CHECK(pure[0] == doctest::Approx(1.0));
  CHECK(std::fabs(pure[1]) < 1e-14);

  for (double ev : eigenvalues(kMaxMixed)) CHECK(ev == doctest::Approx(0.25));

  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const XState s = random_xstate(rng);
    const auto analytic = eigenvalues(s);
    const auto dense = dense_eigenvalues(s);
    for (int k = 0; k < 4; ++k)
      CHECK(std::fabs(analytic[k] - dense[k]) < 1e-10);
  }
  const auto chain = eigenvalues(reduced_density_matrix(ground(0.7, 0.7), 1, kQuad));
  const auto chain_dense =
      dense_eigenvalues(reduced_density_matrix(ground(0.7, 0.7), 1, kQuad));
  for (int k = 0; k < 4; ++k)
    CHECK(std::fabs(chain[k] - chain_dense[k]) < 1e-10);
}

TEST_CASE("entropies") {
  const Entropies pure = entropies(kProduct);
  CHECK(std::fabs(pure.single_site) < 1e-14);
  CHECK(std::fabs(pure.joint) < 1e-14);

  const Entropies mixed = entropies(kMaxMixed);
  CHECK(mixed.single_site == doctest::Approx(1.0));
  CHECK(mixed.joint == doctest::Approx(2.0));

  const Entropies bell = entropies(kBell);
  CHECK(bell.single_site == doctest::Approx(1.0));
  CHECK(std::fabs(bell.joint) < 1e-14);
}

TEST_CASE("mutual information") {
  CHECK(std::fabs(mutual_information(kProduct)) < 1e-14);
  CHECK(mutual_information(kBell) == doctest::Approx(2.0));
  // Frozen regression for the lambda = gamma = 0.7 chain state.
  CHECK(mutual_information(reduced_density_matrix(ground(0.7, 0.7), 1, kQuad)) ==
        doctest::Approx(0.185465863372713).epsilon(1e-8));
}

TEST_CASE("analytic discord branches") {
  CHECK(std::fabs(discord(kProduct).value) < 1e-12);
  const DiscordResult bell = discord(kBell);
  CHECK(bell.value == doctest::Approx(1.0));
  CHECK(bell.branch == DiscordBranch::Q2);
}

TEST_CASE("classical correlations") {
  CHECK(std::fabs(classical_correlations(kProduct)) < 1e-12);
  CHECK(classical_correlations(kBell) == doctest::Approx(1.0));
}

TEST_CASE("discord decomposition bounds") {
  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    const XState s = random_xstate(rng);
    const double info = mutual_information(s);
    const double q = discord(s).value;
    CHECK(q >= -1e-10);
    CHECK(q <= info + 1e-10);
    CHECK(info - q >= -1e-10);
  }
}

TEST_CASE("swapping c1 and c2 leaves all measures unchanged") {
  std::mt19937 rng(17);
  for (int i = 0; i < 100; ++i) {
    const XState s = random_xstate(rng);
    const CCoeffs c = c_representation(s);
    const XState swapped = x_representation({c.c2, c.c1, c.c3, c.c4});
    CHECK(std::fabs(mutual_information(s) - mutual_information(swapped)) <
          1e-12);
    CHECK(std::fabs(discord(s).value - discord(swapped).value) < 1e-12);
    const auto ev_s = eigenvalues(s);
    const auto ev_w = eigenvalues(swapped);
    for (int k = 0; k < 4; ++k) CHECK(std::fabs(ev_s[k] - ev_w[k]) < 1e-12);
  }
}

TEST_CASE("measurement oracle agrees with the analytic branches") {
  CHECK(std::fabs(discord_oracle(kProduct)) < 1e-8);
  CHECK(discord_oracle(kBell) == doctest::Approx(1.0).epsilon(1e-6));

  std::mt19937 rng(19);
  for (int i = 0; i < 60; ++i) {
    const XState s = random_xstate(rng);
    CHECK(std::fabs(discord_oracle(s) - discord(s).value) < 1e-6);
  }
}

TEST_CASE("oracle agreement at negative f") {
  std::mt19937 rng(23);
  for (int i = 0; i < 20; ++i) {
    XState s = random_xstate(rng);
    s.f = -std::fabs(s.f);
    CHECK(std::fabs(discord_oracle(s) - discord(s).value) < 1e-6);
  }
}

TEST_CASE("PF constant-classical closed form on the Q1 branch") {
  // Past the sudden change the PF-evolved state sits on the Q1 branch
  // and C equals the explicit a, b, d expression.
  const XState s0 = reduced_density_matrix(ground(0.7, 0.7), 1, kQuad);
  const CCoeffs c0 = c_representation(s0);
  for (double p : {0.3, 0.5, 0.8}) {
    const XState s =
        x_representation(evolve_closed_form(c0, Channel::PF, {p}));
    const DiscordResult q = discord(s);
    REQUIRE(q.branch == DiscordBranch::Q1);
    const auto slog = [](double x, double y) {
      return x < 1e-300 ? 0.0 : x * std::log2(x / y);
    };
    const double closed = entropies(s).single_site + slog(s.a, s.a + s.b) +
                          slog(s.b, s.a + s.b) + slog(s.d, s.d + s.b) +
                          slog(s.b, s.d + s.b);
    CHECK(std::fabs(classical_correlations(s) - closed) < 1e-10);
  }
}

TEST_CASE("json debug serialization") {
  CHECK(kProduct.to_json() ==
        "[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,1]]");
  const std::string bell = kBell.to_json();
  CHECK(bell.find("0.5") != std::string::npos);
  CHECK(bell.front() == '[');
  CHECK(bell.back() == ']');
}
