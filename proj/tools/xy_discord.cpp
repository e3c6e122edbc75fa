// xy-discord: command-line front end for the xydiscord library.
//
// Subcommands mirror the library surface: state, trajectory, psc,
// sweep, qcp, profile. Output is CSV or JSON with fixed %.12g
// formatting, written atomically (temp file + rename) when --out is
// given.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xydiscord.h"

namespace {

struct ContextDeleter {
  void operator()(xyd_context* ctx) const { xyd_context_destroy(ctx); }
};
using ContextPtr = std::unique_ptr<xyd_context, ContextDeleter>;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* branch_name(int b) { return b == XYD_BRANCH_Q1 ? "Q1" : "Q2"; }

struct SweepRange {
  double lo = 0, hi = 1;
  int n = 33;
};

bool parse_range(const std::string& text, SweepRange& out) {
  const auto c1 = text.find(':');
  const auto c2 = text.rfind(':');
  if (c1 == std::string::npos || c2 == c1) return false;
  try {
    out.lo = std::stod(text.substr(0, c1));
    out.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    out.n = std::stoi(text.substr(c2 + 1));
  } catch (...) {
    return false;
  }
  return out.n >= 2 && out.hi > out.lo;
}

// Numeric failure: report the library error name and exit 1.
[[noreturn]] void fail(const xyd_context* ctx, int code) {
  std::cerr << "xy-discord: " << xyd_error_name(code) << ": "
            << xyd_last_error(ctx) << "\n";
  std::exit(code == XYD_EINVAL ? 2 : 1);
}

void check(const xyd_context* ctx, int code) {
  if (code != XYD_OK) fail(ctx, code);
}

void write_output(const std::string& data, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << data;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(out_path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) {
      std::cerr << "xy-discord: cannot open " << tmp << "\n";
      std::exit(2);
    }
    os << data;
  }
  fs::rename(tmp, target);
}

void emit_plot_script(const std::string& command, const std::string& out_path,
                      const std::string& data_path) {
  std::string script = "# gnuplot script for xy-discord " + command + "\n";
  script += "set datafile separator ','\n";
  script += "set key autotitle columnhead\n";
  if (command == "trajectory") {
    script += "set xlabel 'p'\nset ylabel 'correlations'\n";
    script += "plot '" + data_path + "' using 1:2 with lines title 'I', \\\n";
    script += "     '" + data_path + "' using 1:3 with lines title 'C', \\\n";
    script += "     '" + data_path + "' using 1:4 with lines title 'Q'\n";
  } else if (command == "sweep") {
    script += "set xlabel 'sweep variable'\nset ylabel 'p_sc'\n";
    script +=
        "plot '" + data_path + "' using 1:2 with lines title 'p_sc', \\\n";
    script += "     '" + data_path +
              "' using 1:3 with lines axes x1y2 title 'dp_sc/dx'\n";
  } else if (command == "profile") {
    script += "set xlabel 'r'\nset ylabel 'Q'\nset logscale y\n";
    script += "plot '" + data_path + "' using 1:2 with linespoints\n";
  }
  write_output(script, data_path + ".gp");
}

struct CommonOpts {
  xyd_model model{0.7, 0.7, 0.0};
  int r = 1;
  std::string channel = "bpf";
  std::string format = "csv";
  std::string out_path;
  bool emit_plot = false;
};

int channel_code(const std::string& name) {
  if (name == "bf") return XYD_CHANNEL_BF;
  if (name == "bpf") return XYD_CHANNEL_BPF;
  if (name == "pf") return XYD_CHANNEL_PF;
  std::cerr << "xy-discord: unknown channel '" << name << "'\n";
  std::exit(2);
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_channel = true) {
  cmd->set_config("--config", "", "key = value config file");
  cmd->add_option("--lambda", opts.model.lambda,
                  "inverse transverse-field strength (> 0)");
  cmd->add_option("--gamma", opts.model.gamma, "anisotropy in [-1, 1]");
  cmd->add_option("--kt", opts.model.kt,
                  "temperature kT (0 selects the ground state)");
  cmd->add_option("--r", opts.r, "spin separation");
  if (with_channel)
    cmd->add_option("--channel", opts.channel, "bf|bpf|pf")
        ->check(CLI::IsMember({"bf", "bpf", "pf"}));
  cmd->add_option("--format", opts.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts.out_path, "output path (default stdout)");
  cmd->add_flag("--emit-plot", opts.emit_plot,
                "write a gnuplot script next to the output file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markovian correlation dynamics of XY-chain two-qubit states"};
  app.set_config("--config", "", "key = value config file");
  app.require_subcommand(1);

  CommonOpts opts;
  double p_value = 0.05;
  int p_points = 501;
  std::string sweep_var = "lambda";
  std::string sweep_range_text;
  double h_step = 1e-4;

  CLI::App* cmd_state =
      app.add_subcommand("state", "two-site reduced density matrix");
  add_common(cmd_state, opts, false);

  CLI::App* cmd_traj =
      app.add_subcommand("trajectory", "I, C, Q versus parametrized time p");
  add_common(cmd_traj, opts);
  cmd_traj->add_option("--p-points", p_points, "number of p grid points");

  CLI::App* cmd_psc = app.add_subcommand("psc", "sudden-change time p_sc");
  add_common(cmd_psc, opts);

  CLI::App* cmd_sweep =
      app.add_subcommand("sweep", "p_sc and its derivative over a parameter");
  cmd_sweep->set_help_flag("--help", "print help");  // frees -h for --h
  add_common(cmd_sweep, opts);
  cmd_sweep->add_option("--sweep-var", sweep_var, "lambda|gamma")
      ->check(CLI::IsMember({"lambda", "gamma"}));
  cmd_sweep->add_option("--sweep-range", sweep_range_text, "lo:hi:n");
  cmd_sweep->add_option("--h", h_step, "finite-difference step");

  CLI::App* cmd_qcp =
      app.add_subcommand("qcp", "finite-temperature QCP estimate");
  cmd_qcp->set_help_flag("--help", "print help");
  add_common(cmd_qcp, opts);
  cmd_qcp->add_option("--sweep-range", sweep_range_text, "lambda lo:hi:n");
  cmd_qcp->add_option("--h", h_step, "finite-difference step");

  CLI::App* cmd_profile =
      app.add_subcommand("profile", "discord versus separation r");
  add_common(cmd_profile, opts);
  cmd_profile->add_option("--p", p_value, "parametrized time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  ContextPtr ctx(xyd_context_create());
  if (const char* tol = std::getenv("XY_DISCORD_QUAD_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(tol, &end);
    if (end == tol || xyd_set_quad_rel_tol(ctx.get(), v) != XYD_OK) {
      std::cerr << "xy-discord: bad XY_DISCORD_QUAD_TOL value\n";
      return 2;
    }
  }

  const bool json = opts.format == "json";
  std::string out;
  std::string command;

  if (cmd_state->parsed()) {
    command = "state";
    xyd_xstate s;
    check(ctx.get(), xyd_reduced_state(ctx.get(), opts.model, opts.r, &s));
    if (json) {
      // Debug serialization: the full 4x4 matrix, row-major.
      double m[16];
      check(ctx.get(), xyd_state_matrix(ctx.get(), &s, m));
      out = "[";
      for (int i = 0; i < 4; ++i) {
        out += (i == 0) ? "[" : ",[";
        for (int j = 0; j < 4; ++j) {
          if (j) out += ",";
          out += fmt17(m[4 * i + j]);
        }
        out += "]";
      }
      out += "]\n";
    } else {
      out = "a,b,d,z,f\n";
      out += fmt(s.a) + "," + fmt(s.b) + "," + fmt(s.d) + "," + fmt(s.z) +
             "," + fmt(s.f) + "\n";
    }
  } else if (cmd_traj->parsed()) {
    command = "trajectory";
    if (p_points < 2) {
      std::cerr << "xy-discord: --p-points must be >= 2\n";
      return 2;
    }
    std::vector<double> grid(p_points);
    for (int i = 0; i < p_points; ++i)
      grid[i] = double(i) / (p_points - 1);
    std::vector<double> vi(p_points), vc(p_points), vq(p_points);
    std::vector<int> vb(p_points);
    check(ctx.get(),
          xyd_trajectory(ctx.get(), opts.model, opts.r,
                         channel_code(opts.channel), grid.data(), grid.size(),
                         vi.data(), vc.data(), vq.data(), vb.data()));
    if (json) {
      out = "[";
      for (int i = 0; i < p_points; ++i) {
        out += (i ? ",\n " : "\n ");
        out += "{\"p\":" + fmt(grid[i]) + ",\"I\":" + fmt(vi[i]) +
               ",\"C\":" + fmt(vc[i]) + ",\"Q\":" + fmt(vq[i]) +
               ",\"branch\":\"" + branch_name(vb[i]) + "\"}";
      }
      out += "\n]\n";
    } else {
      out = "p,I,C,Q,branch\n";
      for (int i = 0; i < p_points; ++i)
        out += fmt(grid[i]) + "," + fmt(vi[i]) + "," + fmt(vc[i]) + "," +
               fmt(vq[i]) + "," + branch_name(vb[i]) + "\n";
    }
  } else if (cmd_psc->parsed()) {
    command = "psc";
    double p_sc;
    int method, dyn;
    check(ctx.get(), xyd_sudden_change(ctx.get(), opts.model, opts.r,
                                       channel_code(opts.channel), &p_sc,
                                       &method, &dyn));
    if (json) {
      out = "{\"p_sc\":";
      out += (dyn == XYD_DYNAMICS_II) ? fmt(p_sc) : "null";
      out += std::string(",\"type\":\"") +
             (dyn == XYD_DYNAMICS_II ? "II" : "III") + "\",\"method\":\"" +
             (method == XYD_METHOD_RATIO_FORMULA ? "ratio_formula"
                                                 : "branch_root") +
             "\"}\n";
    } else if (dyn == XYD_DYNAMICS_II) {
      out = "p_sc," + fmt(p_sc) + ",type,II\n";
    } else {
      out = "p_sc,absent,type,III\n";
    }
  } else if (cmd_sweep->parsed()) {
    command = "sweep";
    SweepRange range;
    if (sweep_range_text.empty() || !parse_range(sweep_range_text, range)) {
      std::cerr << "xy-discord: sweep requires --sweep-range lo:hi:n\n";
      return 2;
    }
    const int wrt =
        sweep_var == "lambda" ? XYD_VAR_LAMBDA : XYD_VAR_GAMMA;
    std::string body;
    for (int i = 0; i < range.n; ++i) {
      const double x = range.lo + (range.hi - range.lo) * i / (range.n - 1);
      xyd_model m = opts.model;
      (wrt == XYD_VAR_LAMBDA ? m.lambda : m.gamma) = x;
      double p_sc;
      int method, dyn;
      check(ctx.get(), xyd_sudden_change(ctx.get(), m, opts.r,
                                         channel_code(opts.channel), &p_sc,
                                         &method, &dyn));
      std::string psc_text = "absent", deriv_text = "nan";
      if (dyn == XYD_DYNAMICS_II) {
        psc_text = fmt(p_sc);
        double deriv;
        const int rc =
            xyd_psc_derivative(ctx.get(), m, opts.r,
                               channel_code(opts.channel), wrt, h_step,
                               &deriv);
        if (rc == XYD_OK)
          deriv_text = fmt(deriv);
        else if (rc != XYD_EDOMAIN)
          fail(ctx.get(), rc);
      }
      if (json) {
        body += (i ? ",\n " : "\n ");
        body += "{\"x\":" + fmt(x) + ",\"p_sc\":" +
                (psc_text == "absent" ? "null" : psc_text) + ",\"dpsc_dx\":" +
                (deriv_text == "nan" ? "null" : deriv_text) + "}";
      } else {
        body += fmt(x) + "," + psc_text + "," + deriv_text + "\n";
      }
    }
    out = json ? "[" + body + "\n]\n" : "x,p_sc,dpsc_dx\n" + body;
  } else if (cmd_qcp->parsed()) {
    command = "qcp";
    SweepRange range{0.8, 1.2, 48};
    if (!sweep_range_text.empty() && !parse_range(sweep_range_text, range)) {
      std::cerr << "xy-discord: bad --sweep-range\n";
      return 2;
    }
    double lambda_star, peak;
    check(ctx.get(),
          xyd_qcp_estimate(ctx.get(), channel_code(opts.channel),
                           opts.model.gamma, opts.model.kt, opts.r, range.lo,
                           range.hi, range.n, h_step, &lambda_star, &peak));
    if (json) {
      out = "{\"kT\":" + fmt(opts.model.kt) +
            ",\"r\":" + std::to_string(opts.r) + ",\"channel\":\"" +
            opts.channel + "\",\"lambda_star\":" + fmt(lambda_star) +
            ",\"peak\":" + fmt(peak) + "}\n";
    } else {
      out = "kT,r,channel,lambda_star,peak\n";
      out += fmt(opts.model.kt) + "," + std::to_string(opts.r) + "," +
             opts.channel + "," + fmt(lambda_star) + "," + fmt(peak) + "\n";
    }
  } else if (cmd_profile->parsed()) {
    command = "profile";
    std::vector<double> q(std::max(opts.r, 1));
    check(ctx.get(),
          xyd_discord_profile(ctx.get(), opts.model,
                              channel_code(opts.channel), p_value, opts.r,
                              q.data()));
    if (json) {
      out = "[";
      for (int r = 1; r <= opts.r; ++r) {
        out += (r > 1 ? ",\n " : "\n ");
        out += "{\"r\":" + std::to_string(r) + ",\"Q\":" + fmt(q[r - 1]) +
               "}";
      }
      out += "\n]\n";
    } else {
      out = "r,Q\n";
      for (int r = 1; r <= opts.r; ++r)
        out += std::to_string(r) + "," + fmt(q[r - 1]) + "\n";
    }
  }

  write_output(out, opts.out_path);
  if (opts.emit_plot) {
    if (opts.out_path.empty()) {
      std::cerr << "xy-discord: --emit-plot requires --out\n";
      return 2;
    }
    emit_plot_script(command, opts.out_path, opts.out_path);
  }
  return 0;
}
