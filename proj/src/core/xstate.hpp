#ifndef XYD_XSTATE_HPP
#define XYD_XSTATE_HPP

#include <array>
#include <string>

#include "core/xy_model.hpp"

namespace xyd {

// Two-qubit X-form density matrix in the basis {|11>, |10>, |01>, |00>}:
//
//   [ a 0 0 f ]
//   [ 0 b z 0 ]
//   [ 0 z b 0 ]
//   [ f 0 0 d ]
//
// with real z, f and equal middle diagonal entries.
struct XState {
  double a = 0;
  double b = 0;
  double d = 1;
  double z = 0;
  double f = 0;

  // Full 4x4 matrix, row-major.
  std::array<std::array<double, 4>, 4> matrix() const;

  // Debug serialization: the 4x4 matrix as a JSON array-of-arrays.
  std::string to_json() const;
};

// Correlation-coefficient recoding of an X state: c1 = 2z+2f, c2 = 2z-2f,
// c3 = a+d-2b, c4 = a-d. For XY-chain reduced states c1, c2, c3 are the
// x, y, z two-spin correlators and c4 the transverse magnetization.
struct CCoeffs {
  double c1 = 0;
  double c2 = 0;
  double c3 = 1;
  double c4 = -1;
};

enum class DiscordBranch { Q1, Q2 };

struct DiscordResult {
  double value = 0;
  DiscordBranch branch = DiscordBranch::Q2;
};

CCoeffs c_representation(const XState& s);

// Inverse of c_representation; throws PositivityViolation if the
// resulting matrix is not a valid density matrix.
XState x_representation(const CCoeffs& c);

// Validates trace normalization and positivity (eigenvalues >= -1e-9).
void validate(const XState& s);

// Two-site reduced density matrix of the XY chain at separation r,
// assembled from <sigma^z> and the three two-spin correlators.
XState reduced_density_matrix(const ModelParams& params, int r,
                              const QuadratureConfig& quad);

// Closed-form eigenvalues of the X matrix, sorted descending.
std::array<double, 4> eigenvalues(const XState& s);

struct Entropies {
  double single_site;  // S(rho_A) = S(rho_B)
  double joint;        // S(rho_AB)
};

Entropies entropies(const XState& s);

// I = 2 S_A - S_AB.
double mutual_information(const XState& s);

// Both analytic measurement branches (Q1, Q2).
std::pair<double, double> discord_branches(const XState& s);

// Analytic quantum discord: min of the Q1 and Q2 measurement branches.
DiscordResult discord(const XState& s);

// C = I - Q.
double classical_correlations(const XState& s);

// Brute-force discord: maximizes the measured mutual information J over
// rank-1 projective measurements on qubit B (Bloch angles theta, phi),
// coarse grid then coordinate-descent refinement. Independent of the
// analytic branch formulas.
double discord_oracle(const XState& s, int coarse_grid = 48,
                      int refine_iters = 64);

}  // namespace xyd

#endif
