#pragma once

namespace rieszeq {

// Pair interaction: k(t) = t^{-s} for riesz (s > 0), k(t) = -log t for log.
enum class Kernel { riesz, log };

// Dimension and kernel exponent of an equilibrium problem on the d-ball.
// alpha = d - s throughout; the log kernel counts as s = 0.
struct RieszParams {
  int d = 1;
  double s = 0.5;
  Kernel kernel = Kernel::riesz;

  double s_eff() const { return kernel == Kernel::log ? 0.0 : s; }
  double alpha() const { return d - s_eff(); }

  // max(0, d-2) < s < d: equilibrium densities blow up like dist^{-alpha/2}
  // at the conductor boundary. The log kernel qualifies only for d = 1.
  bool robin() const {
    double se = s_eff();
    if (kernel == Kernel::log) return d == 1;
    return se > (d > 2 ? double(d - 2) : 0.0) && se < d;
  }
  // s = d-2 with d >= 3, or the log kernel in the plane (d = 2).
  bool coulomb() const {
    if (kernel == Kernel::log) return d == 2;
    return d >= 3 && s == double(d - 2);
  }

  static RieszParams riesz_ball(int d, double s) { return {d, s, Kernel::riesz}; }
  static RieszParams log_kernel(int d) { return {d, 0.0, Kernel::log}; }
};

// k(t) for the selected kernel.
double kernel_value(const RieszParams& p, double t);

// Point charge of strength gamma at height h above the center of the
// conductor: Q(x) = gamma * k(sqrt(|x|^2 + h^2)), radial in |x|.
struct ExternalField {
  RieszParams params;
  double gamma = 0.0;
  double height = 1.0;

  double operator()(double radius) const;
};

}  // namespace rieszeq
