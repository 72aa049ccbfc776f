#pragma once

#include <functional>
#include <vector>

namespace rieszeq {

// n-point Gauss-Jacobi rule on [-1, 1] for the weight (1-x)^a (1+x)^b,
// a, b > -1, computed by Golub-Welsch on the symmetrized recurrence.
struct JacobiRule {
  std::vector<double> x, w;
};
JacobiRule gauss_jacobi(int n, double a, double b);

// Same rule mapped to [lo, hi] for the weight (hi-x)^a (x-lo)^b.
JacobiRule gauss_jacobi_on(int n, double a, double b, double lo, double hi);

// Integral of f over (a, b); integrable endpoint singularities allowed
// (tanh-sinh / double-exponential).
double integrate_singular(const std::function<double(double)>& f, double a,
                          double b, double tol = 1e-12);

// Integral of f over (0, inf) via the substitution v = u/(1-u); the
// integrand may decay only algebraically.
double integrate_halfline(const std::function<double(double)>& f,
                          double tol = 1e-12);

// Barycentric interpolation: weights for a node set, then evaluation.
std::vector<double> bary_weights(const std::vector<double>& x);
double bary_eval(const std::vector<double>& x, const std::vector<double>& v,
                 const std::vector<double>& w, double t);

// Brent root refinement on a bracket [a, b] with f(a) f(b) <= 0.
double brent_root(const std::function<double(double)>& f, double a, double b,
                  double tol = 1e-14, int max_iter = 200);

}  // namespace rieszeq
