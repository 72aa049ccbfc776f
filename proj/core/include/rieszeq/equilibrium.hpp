#pragma once

#include <string>

#include "rieszeq/measure.hpp"
#include "rieszeq/potentials.hpp"

namespace rieszeq {

// A solved weighted equilibrium problem: the measure, the equilibrium
// constant, and the verification report that certified it.
struct EquilibriumResult {
  MeasureDensity measure;
  double F_Q = 0.0;
  std::string regime;
  FrostmanReport report;
};

}  // namespace rieszeq
