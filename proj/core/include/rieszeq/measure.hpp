#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "rieszeq/params.hpp"
#include "rieszeq/support.hpp"

namespace rieszeq {

// One additive piece of a radial density profile on [a, b], restricted to
// the active range [lo, hi]. Endpoint behaviour is explicit: the density
// carries a factor (x-a)^{-beta_a} (b-x)^{-beta_b}; the remaining smooth
// factor is either a closed form or a barycentric interpolant through
// Gauss-Jacobi samples. Naive sampling of hard edges diverges, so the
// exponents are never implicit.
struct Component {
  double a = 0.0, b = 1.0;    // natural interval
  double lo = 0.0, hi = 1.0;  // active range, a subset of [a, b]
  double beta_a = 0.0, beta_b = 0.0;
  double coeff = 1.0;

  // closed-form density (coeff excluded); when absent the sampled fields
  // below represent the density on the Gauss-Jacobi grid of [a, b].
  std::function<double(double)> closed;
  std::vector<double> nodes;   // interior Gauss-Jacobi nodes
  std::vector<double> values;  // density at the nodes (coeff excluded)
  std::vector<double> rule;    // weights: sum rule_i * f(node_i) ~ int f * dens
  std::vector<double> smooth;  // values / edge weight, bary-interpolated
  std::vector<double> barw;    // barycentric weights for `nodes`

  bool is_sampled() const { return !closed; }
  double edge_weight(double x) const;  // (x-a)^{-beta_a} (b-x)^{-beta_b}
  double density(double x) const;      // coeff included; 0 outside [lo, hi]

  // Sampled component for a density profile given directly...
  static Component sample(double a, double b, double beta_a, double beta_b,
                          const std::function<double(double)>& profile, int n);
  // ...or given by its smooth factor (profile = smooth * edge_weight).
  static Component sample_smooth(double a, double b, double beta_a,
                                 double beta_b,
                                 const std::function<double(double)>& smooth,
                                 int n);
  static Component closed_form(double a, double b, double beta_a,
                               double beta_b,
                               std::function<double(double)> density,
                               double coeff = 1.0);
  Component restricted(double new_lo, double new_hi) const;
  Component mirrored() const;  // reflected about x = 0
};

// Signed radial measure: density profile w.r.t. Lebesgue measure, stored as
// additive components. For params.d >= 2 the profile lives on radii and the
// volume element surface_factor(d) r^{d-1} is applied at quadrature time;
// d = 1 measures live directly on the segment. Immutable after construction.
struct MeasureDensity {
  RieszParams params;
  Support support;
  std::vector<Component> comps;
  double cached_mass = 0.0;

  double density(double x) const;
  double mass() const { return cached_mass; }
  // integral of f d(mu), volume element included.
  double integrate(const std::function<double(double)>& f) const;
  // nodes of all sampled components inside their active ranges.
  std::vector<double> grid() const;
  bool empty() const;

  void recompute_mass();
};

// Build a sampled measure: one component per support piece, exponents per
// piece endpoint (density ~ dist^{-beta}), profile sampled at Gauss-Jacobi
// nodes matching the exponents.
MeasureDensity make_density(const RieszParams& p, const Support& sup,
                            const std::vector<std::array<double, 2>>& exponents,
                            const std::function<double(double)>& profile,
                            int n_nodes);

// Convenience: exponents chosen from the support's edge kinds
// (hard -> alpha/2, soft -> 0).
MeasureDensity make_density(const RieszParams& p, const Support& sup,
                            const std::function<double(double)>& profile,
                            int n_nodes);

struct SignedDecomposition {
  MeasureDensity positive_part;
  MeasureDensity negative_part;
  std::vector<double> crossings;   // sign-change radii, increasing
  double crossing_radius = -1.0;   // the crossing, when unique
};

// Locate sign changes of the density on each support piece (node scan plus
// bracketed root refinement on the interpolant) and rebuild both parts on
// their own sub-supports with refreshed quadrature. Throws if a piece has
// more than max_crossings sign changes.
SignedDecomposition decompose(const MeasureDensity& signed_measure,
                              int max_crossings = 4);

// CSV round trip: `# key = value` metadata lines, then `radius,density`
// rows at 17 significant digits.
void write_csv(std::ostream& os, const MeasureDensity& m,
               const std::vector<std::pair<std::string, std::string>>& meta = {},
               int samples_per_piece = 257);
MeasureDensity read_csv(std::istream& is);

}  // namespace rieszeq
