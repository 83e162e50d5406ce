#include "kanform/quadrature.hpp"

#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <stdexcept>

namespace kanform {

namespace {

// Nodes and weights of Gauss-Legendre on [0,1].
template <unsigned N>
void gauss01(std::vector<double>& x, std::vector<double>& w) {
  using G = boost::math::quadrature::gauss<double, N>;
  const auto& a = G::abscissa();
  const auto& wt = G::weights();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) {
      x.push_back(0.5);
      w.push_back(0.5 * wt[i]);
      continue;
    }
    x.push_back(0.5 - 0.5 * a[i]);
    w.push_back(0.5 * wt[i]);
    x.push_back(0.5 + 0.5 * a[i]);
    w.push_back(0.5 * wt[i]);
  }
}

void gauss01(int n, std::vector<double>& x, std::vector<double>& w) {
  switch (n) {
    case 2: return gauss01<2>(x, w);
    case 3: return gauss01<3>(x, w);
    case 4: return gauss01<4>(x, w);
    case 5: return gauss01<5>(x, w);
    case 6: return gauss01<6>(x, w);
    case 7: return gauss01<7>(x, w);
    case 8: return gauss01<8>(x, w);
    case 10: return gauss01<10>(x, w);
    case 12: return gauss01<12>(x, w);
    case 16: return gauss01<16>(x, w);
    case 20: return gauss01<20>(x, w);
    case 30: return gauss01<30>(x, w);
    default: throw std::invalid_argument("unsupported Gauss-Legendre order");
  }
}

}  // namespace

SimplexRule segment_rule(int points) {
  SimplexRule r;
  r.q = 1;
  std::vector<double> x, w;
  gauss01(points, x, w);
  for (std::size_t i = 0; i < x.size(); ++i) {
    r.nodes.push_back({1.0 - x[i], x[i]});
    r.weights.push_back(w[i]);
  }
  return r;
}

SimplexRule triangle_rule_deg7() {
  // Fully symmetric 15-point rule, exact to degree 7.  Orbits (a,a,1-2a)
  // and all permutations of (a,b,c).
  struct S21 {
    double a, w;
  };
  static const std::array<S21, 3> s21 = {{{0.41329910245889045, 0.018715022876449022},
                                          {0.23273574529164287, 0.052542997683371298},
                                          {0.064414848540152767, 0.026127521704251991}}};
  const double a = 0.31240615548912209, b = 0.64399462891725789,
               c = 0.043599215593619969, w111 = 0.034640562201297166;
  SimplexRule r;
  r.q = 2;
  for (const auto& o : s21) {
    double u = o.a, v = 1.0 - 2.0 * o.a;
    for (auto p : {std::array<double, 3>{u, u, v}, {u, v, u}, {v, u, u}}) {
      r.nodes.push_back({p[0], p[1], p[2]});
      r.weights.push_back(o.w);
    }
  }
  const double abc[3] = {a, b, c};
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& p : perms) {
    r.nodes.push_back({abc[p[0]], abc[p[1]], abc[p[2]]});
    r.weights.push_back(w111);
  }
  return r;
}

SimplexRule tetrahedron_rule(int n) {
  // Collapsed coordinates: t1 = u, t2 = (1-u) v, t3 = (1-u)(1-v) s with
  // Jacobian (1-u)^2 (1-v).
  std::vector<double> x, w;
  gauss01(n, x, w);
  SimplexRule r;
  r.q = 3;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      for (std::size_t k = 0; k < x.size(); ++k) {
        double u = x[i], v = x[j], s = x[k];
        double t1 = u, t2 = (1 - u) * v, t3 = (1 - u) * (1 - v) * s;
        r.nodes.push_back({1.0 - t1 - t2 - t3, t1, t2, t3});
        r.weights.push_back(w[i] * w[j] * w[k] * (1 - u) * (1 - u) * (1 - v));
      }
  return r;
}

SimplexRule composite_triangle_rule(int levels) {
  SimplexRule base = triangle_rule_deg7();
  // Subdivide in (t1,t2) coordinates into m^2 triangles, m = 2^levels.
  const int m = 1 << levels;
  const double h = 1.0 / m;
  SimplexRule r;
  r.q = 2;
  auto emit = [&](std::array<double, 2> p0, std::array<double, 2> p1, std::array<double, 2> p2) {
    for (std::size_t n = 0; n < base.nodes.size(); ++n) {
      const auto& bc = base.nodes[n];
      double x = bc[0] * p0[0] + bc[1] * p1[0] + bc[2] * p2[0];
      double y = bc[0] * p0[1] + bc[1] * p1[1] + bc[2] * p2[1];
      r.nodes.push_back({1.0 - x - y, x, y});
      r.weights.push_back(base.weights[n] * h * h);
    }
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; i + j < m; ++j) {
      double x = i * h, y = j * h;
      emit({x, y}, {x + h, y}, {x, y + h});
      if (i + j + 1 < m) emit({x + h, y}, {x + h, y + h}, {x, y + h});
    }
  return r;
}

const SimplexRule& simplex_rule(int q) {
  static const SimplexRule r0{0, {{1.0}}, {1.0}};
  static const SimplexRule r1 = segment_rule(8);
  static const SimplexRule r2 = triangle_rule_deg7();
  static const SimplexRule r3 = tetrahedron_rule(6);
  switch (q) {
    case 0: return r0;
    case 1: return r1;
    case 2: return r2;
    case 3: return r3;
    default: throw std::invalid_argument("no simplex rule beyond dimension 3");
  }
}

}  // namespace kanform
