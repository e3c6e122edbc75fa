#include "xydiscord.h"

#include <string>

#include "core/analysis.hpp"
#include "core/errors.hpp"

struct xyd_context {
  xyd::QuadratureConfig quad;
  std::string last_error;
};

namespace {

int code_of(const xyd::Error& e) { return static_cast<int>(e.code()); }

template <typename Fn>
int guarded(xyd_context* ctx, Fn&& fn) {
  if (!ctx) return XYD_EINVAL;
  try {
    fn();
    ctx->last_error.clear();
    return XYD_OK;
  } catch (const xyd::Error& e) {
    ctx->last_error = e.what();
    return code_of(e);
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return XYD_EINTERNAL;
  }
}

xyd::ModelParams to_params(const xyd_model& m) {
  if (m.kt < 0) throw xyd::InvalidArgument("kt must be nonnegative");
  const xyd::ModelParams p =
      xyd::ModelParams::from_kt(m.lambda, m.gamma, m.kt);
  if (!p.valid())
    throw xyd::InvalidArgument("model parameters out of range");
  return p;
}

xyd::Channel to_channel(int ch) {
  switch (ch) {
    case XYD_CHANNEL_BF: return xyd::Channel::BF;
    case XYD_CHANNEL_BPF: return xyd::Channel::BPF;
    case XYD_CHANNEL_PF: return xyd::Channel::PF;
  }
  throw xyd::InvalidArgument("unknown channel code");
}

xyd::XState to_state(const xyd_xstate* s) {
  if (!s) throw xyd::InvalidArgument("null state");
  xyd::XState x{s->a, s->b, s->d, s->z, s->f};
  xyd::validate(x);
  return x;
}

xyd_xstate from_state(const xyd::XState& x) {
  return {x.a, x.b, x.d, x.z, x.f};
}

int branch_code(xyd::DiscordBranch b) {
  return b == xyd::DiscordBranch::Q1 ? XYD_BRANCH_Q1 : XYD_BRANCH_Q2;
}

}  // namespace

extern "C" {

const char* xyd_error_name(int code) {
  return xyd::error_name(static_cast<xyd::ErrorCode>(code));
}

xyd_context* xyd_context_create(void) { return new xyd_context(); }

void xyd_context_destroy(xyd_context* ctx) { delete ctx; }

const char* xyd_last_error(const xyd_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

int xyd_set_quad_rel_tol(xyd_context* ctx, double rel_tol) {
  return guarded(ctx, [&] {
    if (!(rel_tol > 0))
      throw xyd::InvalidArgument("rel_tol must be positive");
    ctx->quad.rel_tol = rel_tol;
  });
}

int xyd_reduced_state(xyd_context* ctx, xyd_model model, int r,
                      xyd_xstate* out) {
  return guarded(ctx, [&] {
    if (!out) throw xyd::InvalidArgument("null output");
    *out = from_state(
        xyd::reduced_density_matrix(to_params(model), r, ctx->quad));
  });
}

int xyd_correlations(xyd_context* ctx, const xyd_xstate* state,
                     double* mutual_info, double* classical, double* discord,
                     int* branch) {
  return guarded(ctx, [&] {
    const xyd::XState s = to_state(state);
    const xyd::DiscordResult q = xyd::discord(s);
    const double info = xyd::mutual_information(s);
    if (mutual_info) *mutual_info = info;
    if (classical) *classical = info - q.value;
    if (discord) *discord = q.value;
    if (branch) *branch = branch_code(q.branch);
  });
}

int xyd_evolve(xyd_context* ctx, const xyd_xstate* state, int channel,
               double p, xyd_xstate* out) {
  return guarded(ctx, [&] {
    if (!out) throw xyd::InvalidArgument("null output");
    const xyd::CCoeffs c = xyd::c_representation(to_state(state));
    *out = from_state(xyd::x_representation(
        xyd::evolve_closed_form(c, to_channel(channel), {p})));
  });
}

int xyd_state_matrix(xyd_context* ctx, const xyd_xstate* state,
                     double out[16]) {
  return guarded(ctx, [&] {
    if (!out) throw xyd::InvalidArgument("null output");
    const auto m = to_state(state).matrix();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out[4 * i + j] = m[i][j];
  });
}

int xyd_trajectory(xyd_context* ctx, xyd_model model, int r, int channel,
                   const double* p_grid, size_t n, double* mutual_info,
                   double* classical, double* discord, int* branch) {
  return guarded(ctx, [&] {
    if (!p_grid || n == 0) throw xyd::InvalidArgument("empty p grid");
    const xyd::Trajectory traj =
        xyd::trajectory(to_params(model), r, to_channel(channel),
                        std::vector<double>(p_grid, p_grid + n), ctx->quad);
    for (size_t i = 0; i < n; ++i) {
      const auto& pt = traj.points[i];
      if (mutual_info) mutual_info[i] = pt.mutual_info;
      if (classical) classical[i] = pt.classical;
      if (discord) discord[i] = pt.discord;
      if (branch) branch[i] = branch_code(pt.branch);
    }
  });
}

int xyd_sudden_change(xyd_context* ctx, xyd_model model, int r, int channel,
                      double* p_sc, int* method, int* dynamics_type) {
  return guarded(ctx, [&] {
    const xyd::SuddenChange sc = xyd::sudden_change_point(
        to_params(model), r, to_channel(channel), ctx->quad);
    if (p_sc) *p_sc = sc.p_sc.value_or(-1.0);
    if (method)
      *method = sc.method == xyd::SuddenChangeMethod::RatioFormula
                    ? XYD_METHOD_RATIO_FORMULA
                    : XYD_METHOD_BRANCH_ROOT;
    if (dynamics_type)
      *dynamics_type = sc.dynamics_type == xyd::DynamicsType::II
                           ? XYD_DYNAMICS_II
                           : XYD_DYNAMICS_III;
  });
}

int xyd_psc_derivative(xyd_context* ctx, xyd_model model, int r, int channel,
                       int wrt, double h, double* out) {
  return guarded(ctx, [&] {
    if (!out) throw xyd::InvalidArgument("null output");
    if (wrt != XYD_VAR_LAMBDA && wrt != XYD_VAR_GAMMA)
      throw xyd::InvalidArgument("unknown sweep variable");
    *out = xyd::psc_derivative(
        to_params(model), r, to_channel(channel),
        wrt == XYD_VAR_LAMBDA ? xyd::SweepVariable::Lambda
                              : xyd::SweepVariable::Gamma,
        h, ctx->quad);
  });
}

int xyd_qcp_estimate(xyd_context* ctx, int channel, double gamma, double kt,
                     int r, double lambda_lo, double lambda_hi, int grid_n,
                     double h, double* lambda_star, double* peak_value) {
  return guarded(ctx, [&] {
    if (!(kt > 0))
      throw xyd::InvalidArgument("qcp estimate requires kt > 0");
    const xyd::QcpEstimate est =
        xyd::qcp_estimate(to_channel(channel), gamma, 1.0 / kt, r,
                          {lambda_lo, lambda_hi}, grid_n, ctx->quad, h);
    if (lambda_star) *lambda_star = est.lambda_star;
    if (peak_value) *peak_value = est.peak_value;
  });
}

int xyd_discord_profile(xyd_context* ctx, xyd_model model, int channel,
                        double p, int r_max, double* out) {
  return guarded(ctx, [&] {
    if (!out) throw xyd::InvalidArgument("null output");
    const auto profile = xyd::discord_decay_profile(
        to_params(model), to_channel(channel), {p}, r_max, ctx->quad);
    for (const auto& [r, q] : profile) out[r - 1] = q;
  });
}

}  // extern "C"
