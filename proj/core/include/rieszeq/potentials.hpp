#pragma once

#include <vector>

#include "rieszeq/measure.hpp"
#include "rieszeq/params.hpp"

namespace rieszeq {

// Average of k(|rho e1 - r u|) over u uniform on the unit (d-1)-sphere:
// the radial kernel against which radial profiles are integrated.
// Closed forms: d = 1 direct, d = 2 log (-log max), d = 3 all s, d >= 3
// Coulomb (max^{2-d}); polar-angle quadrature otherwise.
double kernel_radial(const RieszParams& p, double rho, double r);

// U^mu(x) for a radial measure, singularity handled by splitting the
// radial integral at the evaluation point.
double potential(const MeasureDensity& mu, double x_radius);

// I(mu) + 2 int Q d(mu); diagonal singularity handled as in potential().
double weighted_energy(const MeasureDensity& mu, const ExternalField& Q);
double energy(const MeasureDensity& mu);

struct FrostmanReport {
  double F_Q = 0.0;                    // mean of U + Q over the support grid
  double sup_residual_on_support = 0.0;
  double min_margin_off_support = 0.0; // min of U + Q - F_Q off support
  bool off_support_checked = false;
  bool pass(double tol_on, double tol_off) const {
    return sup_residual_on_support < tol_on &&
           (!off_support_checked || min_margin_off_support > -tol_off);
  }
};

// Equilibrium-property check of a positive measure on its conductor:
// U + Q constant on the support grid, U + Q >= F_Q on the off-support grid.
FrostmanReport frostman_check(const MeasureDensity& mu, const ExternalField& Q,
                              const std::vector<double>& support_grid,
                              const std::vector<double>& off_grid = {});

// Evenly spaced interior grid over the support pieces of a measure.
std::vector<double> support_grid(const MeasureDensity& mu, int per_piece,
                                 double edge_margin = 1e-3);

}  // namespace rieszeq
