#pragma once

#include <functional>

#include "rieszeq/measure.hpp"
#include "rieszeq/params.hpp"

namespace rieszeq {

enum class BalayageMethod { closed_form, superposition, integral_equation };

struct BalayageResult {
  MeasureDensity measure;
  double mass_retained = 1.0;  // swept mass / source mass
  BalayageMethod method = BalayageMethod::closed_form;
  double edge_coefficient = 0.0;  // limit of dist^{alpha/2} * density at the
                                  // outer edge, when meaningful
};

// Point charge at height y above the center, swept onto the ball of radius
// R (d >= 1, Robin range). Density has the closed smooth part plus a hard
// edge part whose profile is computed through a semi-infinite integral.
BalayageResult bal_point_to_ball(const RieszParams& p, double y_height,
                                 double R, int n_nodes = 48);

// Density of the same balayage at a single radius.
double bal_point_to_ball_density(const RieszParams& p, double y_height,
                                 double R, double x_radius);

// Mass of the same balayage (memoized with the sphere constants).
double bal_point_to_ball_mass(const RieszParams& p, double y_height, double R);

// Point mass at t swept onto [a, b] on the line (d = 1), t outside [a, b].
// Riesz: density (|x-b||x-a|)^{-alpha/2} gamma_s (|t-b||t-a|)^{alpha/2}/|x-t|
// with gamma_s = sin(alpha pi/2)/pi; log kernel variant included.
BalayageResult bal_point_to_interval(const RieszParams& p, double t, double a,
                                     double b, int n_nodes = 48);
double bal_point_to_interval_density(const RieszParams& p, double t, double a,
                                     double b, double x);

// Numerical balayage onto the symmetric two-interval set K_r: solves
// U^{swept} = U^{source} on K_r by collocation with the singular-weight
// ansatz. The log kernel matches potentials up to an additive constant and
// keeps the source mass (sweeping out of an unbounded complement shifts the
// potential by a constant); Riesz matches exactly and loses mass.
struct TwoIntervalOptions {
  int degree = 40;         // collocation degree per interval
  int min_degree = 12;     // automatic reduction floor
  double cond_cap = 1e12;
  double quad_tol = 1e-11;
  double inner_exponent = -1.0;  // override; < 0 means alpha/2 (hard)
};

BalayageResult bal_to_two_intervals(const MeasureDensity& source, double r,
                                    const TwoIntervalOptions& opts = {});

// Lower-level entry: target potential given as a callable on (r, 1).
// source_mass is the mass constraint for the log kernel (ignored for
// Riesz). Returns the swept measure on K_r and the additive constant.
struct TwoIntervalSolve {
  MeasureDensity measure;
  double constant = 0.0;   // U^{swept} - U^{source} on K_r (log only)
  double cond = 0.0;       // estimated condition number of the final solve
  int degree_used = 0;
};
TwoIntervalSolve solve_on_two_intervals(
    const RieszParams& p, double r,
    const std::function<double(double)>& target_potential, double source_mass,
    const TwoIntervalOptions& opts = {});

// Superposition: sweep a measure supported off the target by integrating
// point-mass balayages against it (d = 1 targets).
BalayageResult bal_superpose(const MeasureDensity& source,
                             const Support& target, int n_nodes = 48);

// Unweighted equilibrium of K_r (collocation with constant target):
// measure of mass 1, Robin constant, capacity.
struct TwoIntervalEquilibrium {
  MeasureDensity measure;
  double robin_constant = 0.0;
  double capacity = 0.0;
};
TwoIntervalEquilibrium equilibrium_two_intervals(
    const RieszParams& p, double r, const TwoIntervalOptions& opts = {});

}  // namespace rieszeq
