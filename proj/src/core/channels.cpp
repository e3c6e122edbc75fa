#include "core/channels.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "core/errors.hpp"

namespace xyd {

std::optional<Channel> channel_from_string(const std::string& name) {
  if (name == "bf") return Channel::BF;
  if (name == "bpf") return Channel::BPF;
  if (name == "pf") return Channel::PF;
  return std::nullopt;
}

const char* channel_name(Channel ch) {
  switch (ch) {
    case Channel::BF: return "bf";
    case Channel::BPF: return "bpf";
    case Channel::PF: return "pf";
  }
  return "?";
}

ParamTime p_of_t(double theta, double t) {
  if (theta <= 0) throw InvalidArgument("decay rate theta must be positive");
  if (t < 0) throw InvalidArgument("time t must be nonnegative");
  return {1.0 - std::exp(-theta * t)};
}

namespace {

using complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

Matrix2c flip_generator(Channel ch) {
  Matrix2c m;
  switch (ch) {
    case Channel::BF:
      m << 0, 1, 1, 0;
      break;
    case Channel::BPF:
      m << 0, complex(0, -1), complex(0, 1), 0;
      break;
    case Channel::PF:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

}  // namespace

XState evolve_kraus(const XState& s, Channel ch, ParamTime p) {
  if (!p.valid()) throw InvalidArgument("parametrized time outside [0, 1]");

  const Matrix2c kraus0 = std::sqrt(1.0 - p.p / 2.0) * Matrix2c::Identity();
  const Matrix2c kraus1 = std::sqrt(p.p / 2.0) * flip_generator(ch);
  const Matrix2c ops[2] = {kraus0, kraus1};

  Matrix4c rho = Matrix4c::Zero();
  const auto m = s.matrix();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rho(i, j) = m[i][j];

  Matrix4c out = Matrix4c::Zero();
  for (int mu = 0; mu < 2; ++mu)
    for (int nu = 0; nu < 2; ++nu) {
      Matrix4c e = Matrix4c::Zero();
      e.block<2, 2>(0, 0) = ops[mu](0, 0) * ops[nu];
      e.block<2, 2>(0, 2) = ops[mu](0, 1) * ops[nu];
      e.block<2, 2>(2, 0) = ops[mu](1, 0) * ops[nu];
      e.block<2, 2>(2, 2) = ops[mu](1, 1) * ops[nu];
      out += e * rho * e.adjoint();
    }

  // The evolved matrix must stay on the X pattern with real entries.
  double off = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const bool on_pattern = (i == j) || (i + j == 3);
      if (!on_pattern) off = std::max(off, std::abs(out(i, j)));
      off = std::max(off, std::fabs(out(i, j).imag()));
    }
  off = std::max(off, std::fabs(out(1, 1).real() - out(2, 2).real()));
  off = std::max(off, std::fabs(out(0, 3).real() - out(3, 0).real()));
  off = std::max(off, std::fabs(out(1, 2).real() - out(2, 1).real()));
  if (off > 1e-12)
    throw FormViolation("Kraus evolution left the X pattern by " +
                        std::to_string(off));

  XState r;
  r.a = out(0, 0).real();
  r.b = out(1, 1).real();
  r.d = out(3, 3).real();
  r.z = out(1, 2).real();
  r.f = out(0, 3).real();
  return r;
}

CCoeffs evolve_closed_form(const CCoeffs& c, Channel ch, ParamTime p) {
  if (!p.valid()) throw InvalidArgument("parametrized time outside [0, 1]");
  const double u = 1.0 - p.p;
  const double u2 = u * u;
  switch (ch) {
    case Channel::BPF: return {c.c1 * u2, c.c2, c.c3 * u2, c.c4 * u};
    case Channel::BF: return {c.c1, c.c2 * u2, c.c3 * u2, c.c4 * u};
    case Channel::PF: return {c.c1 * u2, c.c2 * u2, c.c3, c.c4};
  }
  throw InvalidArgument("unknown channel");
}

}  // namespace xyd
