#pragma once

#include <vector>

namespace kanform {

/// Quadrature on the standard simplex Delta_q in barycentric coordinates
/// (t_0..t_q).  Weights sum to the volume 1/q! of {t_1..t_q >= 0, sum <= 1}.
struct SimplexRule {
  int q = 0;
  std::vector<std::vector<double>> nodes;
  std::vector<double> weights;
};

/// Default rules: Gauss-Legendre (8 points) on Delta_1, a 15-point degree-7
/// rule on Delta_2, a collapsed Gauss-Legendre product on Delta_3.  Each is
/// exact for polynomials of degree <= 7 in t.
const SimplexRule& simplex_rule(int q);

SimplexRule segment_rule(int points);
SimplexRule triangle_rule_deg7();
SimplexRule tetrahedron_rule(int points_per_axis);
/// The degree-7 triangle rule applied on the 4^levels congruent
/// subtriangles; for integrands that are only smooth.
SimplexRule composite_triangle_rule(int levels);

}  // namespace kanform
