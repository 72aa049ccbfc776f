#pragma once

#include <optional>

#include "rieszeq/equilibrium.hpp"
#include "rieszeq/params.hpp"

namespace rieszeq {

enum class BallRegime {
  attractive_shrunk,          // gamma <= gamma_minus: support is a smaller ball
  attractive_full,            // gamma_minus < gamma <= 0: whole ball, hard edge
  repulsive_full,             // 0 < gamma <= gamma_plus: whole ball, hard edge
  repulsive_shell_conjectured // gamma > gamma_plus, d >= 2: no certified measure
};

struct BallRegimeResult {
  BallRegime regime;
  double gamma_minus = 0.0;
  double gamma_plus = 0.0;
  std::optional<double> R_gamma;
  std::optional<EquilibriumResult> equilibrium;
  // signed density slope at the origin; negative for gamma > gamma_plus
  // (the support then excludes the center, proven for d = 1 only)
  double eta_origin = 0.0;
  std::optional<MeasureDensity> signed_measure;  // conjectured regime only
};

// Edge coefficient of the signed ball measure at radius R:
// H(R) = -gamma Lambda_R + (1 + gamma m_R) c_R. Positive iff the signed
// measure keeps a hard edge; its root is the shrunk support radius.
double H_of_R(const RieszParams& p, const ExternalField& Q, double R);

// Shrunk support radius for gamma < -1: root of H, cross-validated against
// the hypergeometric characterization (the two agree to ~1e-10).
double solve_R_gamma(const RieszParams& p, const ExternalField& Q);

// R_gamma from the hypergeometric equation alone (the scalar root in z with
// R = y sqrt(z)), and from the H-root alone; solve_R_gamma checks both.
double solve_R_gamma_hyp(const RieszParams& p, const ExternalField& Q);
double solve_R_gamma_H(const RieszParams& p, const ExternalField& Q);

// Critical charges from the closed forms:
// gamma_minus = c_1 / (Lambda_1 - m_1 c_1)  (root of H(1) = 0),
// gamma_plus  = c_1 / (Bal'(delta_y, ball)(0) - m_1 c_1)  (density flat at 0).
struct CriticalCharges {
  double gamma_minus, gamma_plus;
};
CriticalCharges critical_charges(const RieszParams& p, double height);

// Full regime dispatch. Produces a certified equilibrium for
// gamma <= gamma_plus; beyond gamma_plus with d >= 2 only the signed
// measure plus the conjecture flag (d = 1 callers use the two-interval
// iteration instead).
BallRegimeResult solve_ball(const RieszParams& p, const ExternalField& Q,
                            int n_nodes = 48);

// Signed ball measure eta_{Q,R} = -gamma Bal(delta_y, B_R) + (1+gamma m_R)
// omega_R as a measure on B_R.
MeasureDensity signed_ball_measure(const RieszParams& p,
                                   const ExternalField& Q, double R,
                                   int n_nodes = 48);

}  // namespace rieszeq
