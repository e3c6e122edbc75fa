#ifndef XYD_CHANNELS_HPP
#define XYD_CHANNELS_HPP

#include <optional>
#include <string>

#include "core/xstate.hpp"

namespace xyd {

// Markovian single-qubit flip channels, acting independently and
// identically on both qubits. The Kraus generator is sigma_x (BF),
// sigma_y (BPF) or sigma_z (PF).
enum class Channel { BF, BPF, PF };

std::optional<Channel> channel_from_string(const std::string& name);
const char* channel_name(Channel ch);

// Parametrized time p = 1 - exp(-theta t), in [0, 1].
struct ParamTime {
  double p = 0;

  bool valid() const { return p >= 0 && p <= 1; }
};

ParamTime p_of_t(double theta, double t);

// Full Kraus-operator conjugation: assembles the 4x4 matrix, applies the
// four two-qubit Kraus terms E_mu (x) E_nu and reads back the X form.
// Throws FormViolation if off-pattern entries exceed 1e-12.
XState evolve_kraus(const XState& s, Channel ch, ParamTime p);

// Closed-form evolution of the correlation coefficients:
//   BPF: (c1 (1-p)^2, c2,          c3 (1-p)^2, c4 (1-p))
//   BF:  (c1,         c2 (1-p)^2,  c3 (1-p)^2, c4 (1-p))
//   PF:  (c1 (1-p)^2, c2 (1-p)^2,  c3,         c4)
CCoeffs evolve_closed_form(const CCoeffs& c, Channel ch, ParamTime p);

}  // namespace xyd

#endif
