#pragma once

#include <vector>

namespace rieszeq {

// hard: conductor boundary (density blows up like dist^{-alpha/2});
// soft: free boundary (density stays bounded, typically vanishes).
enum class EdgeKind { hard, soft };

// One interval [a, b] of a support with the edge character at each end.
// For d >= 2 this is a radial interval (a >= 0); for d = 1 a real interval.
struct SupportPiece {
  double a = 0.0, b = 1.0;
  EdgeKind left = EdgeKind::hard, right = EdgeKind::hard;
};

enum class SupportKind { ball, shell, interval, two_intervals };

struct Support {
  SupportKind kind = SupportKind::interval;
  std::vector<SupportPiece> pieces;

  static Support ball(double R, EdgeKind outer = EdgeKind::hard);
  static Support shell(double r, double R, EdgeKind inner = EdgeKind::soft,
                       EdgeKind outer = EdgeKind::hard);
  static Support interval(double a, double b, EdgeKind left = EdgeKind::hard,
                          EdgeKind right = EdgeKind::hard);
  // Symmetric pair [-R, -r] u [r, R].
  static Support two_symmetric(double r, double R = 1.0,
                               EdgeKind inner = EdgeKind::soft,
                               EdgeKind outer = EdgeKind::hard);

  double inner_radius() const;  // smallest |x| in the support
  double outer_radius() const;  // largest |x| in the support
  bool contains(double x, double tol = 0.0) const;
  bool symmetric() const;  // pieces mirror each other about 0
};

}  // namespace rieszeq
