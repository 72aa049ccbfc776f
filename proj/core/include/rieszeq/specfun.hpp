#pragma once

#include "rieszeq/params.hpp"

namespace rieszeq {

// Gamma function via the Lanczos approximation (g = 7, 9 coefficients),
// reflection for x < 1/2. Relative accuracy ~1e-13 on (0, 50].
// Throws std::domain_error at the poles x = 0, -1, -2, ...
double gamma_fn(double x);

// log Gamma(x) for x > 0 (safe for arguments where Gamma overflows).
double log_gamma(double x);

// B(x, y) = Gamma(x)Gamma(y)/Gamma(x+y), computed through log_gamma.
double beta_fn(double x, double y);

// Gauss hypergeometric 2F1(a, b; c; z) restricted to z <= 0.
// Power series for |z| < 1/2, Pfaff transform z -> z/(z-1) otherwise.
// Throws std::domain_error for z > 0 and std::runtime_error on
// non-convergence.
double gauss_2f1(double a, double b, double c, double z);

// Closed-form constants of the s-kernel on spheres and balls.
struct SphereConstants {
  double A_d;    // surface area of the unit d-sphere in R^{d+1}
  double W_Sd;   // s-energy of the unit d-sphere
  double c_R;    // density scale of the R-ball equilibrium measure
  double K1_sd;  // edge coefficient of a swept point charge
};

// Requires the Robin range max(0, d-2) < s < d (log kernel: d = 1).
// Values are memoized per (d, s, R); safe for concurrent callers.
SphereConstants sphere_constants(const RieszParams& p, double R);

// Robin constant of the ball of radius R: the constant value of the
// equilibrium potential on the ball. For the log kernel on the segment
// [-R, R] this is log(2/R).
double ball_robin_constant(const RieszParams& p, double R);

// Surface area of the unit (d-1)-sphere in R^d (the radial volume factor
// for d-ball measures is surface_factor(d) * r^{d-1}).
double surface_factor(int d);

}  // namespace rieszeq
