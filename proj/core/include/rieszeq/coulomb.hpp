#pragma once

#include <optional>

#include "rieszeq/measure.hpp"

namespace rieszeq {

// s = d-2 for d >= 3, log kernel for d = 2: the equilibrium measure on the
// unit ball has a closed form in all three charge regimes.
enum class CoulombRegime { i, ii, iii };

struct CoulombResult {
  CoulombRegime regime;
  double gamma = 0.0, h = 1.0;
  int d = 2;
  double gamma_tilde = 0.0;          // -(1+h^2)^{d/2}
  std::optional<double> R0;          // h / sqrt(|gamma|^{2/d} - 1), regime i
  std::optional<MeasureDensity> volume_part;  // tau, regimes i and ii
  double surface_mass = 0.0;         // coefficient of the uniform sphere part
};

CoulombResult solve_coulomb(int d, double gamma, double h, int n_nodes = 48);

struct CoulombReport {
  double F = 0.0;                // U + Q value on the support
  double sup_residual = 0.0;     // constancy residual on the support
  double min_margin = 0.0;       // min of U + Q - F off the support
  double mass_error = 0.0;       // |volume mass + surface mass - 1|
  bool pass(double tol_on, double tol_off) const {
    return sup_residual < tol_on && min_margin > -tol_off;
  }
};

// Regimes i/ii: U^mu + Q constant on the support (sphere-average closed
// forms); regime iii: equality on |x| = 1 and Q decreasing inside.
CoulombReport verify_coulomb(const CoulombResult& result, int grid = 64);

}  // namespace rieszeq
