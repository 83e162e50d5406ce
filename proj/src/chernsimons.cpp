#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kanform/moduli.hpp"

namespace kanform {

namespace {

ParamForm zero_param(int i, int j) {
  return {i, j, [](const std::vector<double>&, const Mat&, const std::vector<std::vector<double>>&) {
            return 0.0;
          }};
}

std::vector<double> random_vector(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0, 1);
  std::vector<double> v(static_cast<std::size_t>(dim));
  for (auto& x : v) x = n(rng);
  return v;
}

// h(y) = S(x) / x at y = x^2, where S is the odd step with
// S'(x) = c (1 - x^2)^4, S(0) = 0, S(1) = 1.
double step_ratio(double y) {
  static const double c = 1.0 / (1.0 - 4.0 / 3 + 6.0 / 5 - 4.0 / 7 + 1.0 / 9);
  return c * (1.0 - 4.0 * y / 3 + 6.0 * y * y / 5 - 4.0 * y * y * y / 7 + y * y * y * y / 9);
}

// su(2) element i (v . sigma).
Mat pauli(double a, double b, double c) {
  const cplx i(0, 1);
  Mat m(2, 2);
  m << i * c, i * a + b, i * a - b, -i * c;
  return m;
}

// Degree-one bump SU(2)-valued map on Delta_2 x [0, 1]: -exp(pi S(rho/R) v/rho)
// on a ball of radius R around (centroid, 1/2) and e outside.
Mat bump(double s, const std::vector<double>& t) {
  constexpr double R = 0.27;
  const double x = t[1] + 0.5 * t[2] - 0.5;
  const double y = std::sqrt(3.0) / 2 * t[2] - std::sqrt(3.0) / 6;
  const double z = (s - 0.5) * R / 0.45;
  const double rho2 = x * x + y * y + z * z;
  if (rho2 >= R * R) return Mat::Identity(2, 2);
  const double f = std::numbers::pi * step_ratio(rho2 / (R * R)) / R;
  const double th = f * std::sqrt(rho2);
  Mat n = pauli(x, y, z);
  // exp(f n) with n^2 = -rho2.
  Mat g = std::cos(th) * Mat::Identity(2, 2);
  if (rho2 > 0) g += std::sin(th) / std::sqrt(rho2) * n;
  return -g;
}

}  // namespace

CircleValue CircleValue::from_real(double r) {
  double v = r - std::floor(r);
  if (v >= 1.0) v = 0.0;
  return {v};
}

ParamForm chern_simons_form(const FreeSimplicialGroup& k, const Chain& cycle, const Plot& f,
                            const InvariantPolynomial& q, const std::map<int, SimplexRule>& rules) {
  OmegaQ omega = assemble_omega(q);
  ParamForms all = integrate_over_plot(pair(k, omega.components, cycle), f, {}, rules);
  auto it = all.find({0, 1});
  return it == all.end() ? zero_param(0, 1) : it->second;
}

double path_integral(const ParamForm& psi, const LoopSpec& path) {
  if (path.base.size() != path.direction.size())
    throw InputError("loop base and direction differ in dimension");
  auto at = [&](double s) {
    auto w = path.base;
    for (std::size_t d = 0; d < w.size(); ++d) w[d] += s * path.direction[d];
    return psi(w, Mat::Zero(1, 1), {path.direction});
  };
  double total = 0;
  if (path.closed) {
    for (int i = 0; i < path.points; ++i) total += at(static_cast<double>(i) / path.points);
    return total / path.points;
  }
  SimplexRule r = segment_rule(path.points);
  for (std::size_t i = 0; i < r.nodes.size(); ++i) total += r.weights[i] * at(r.nodes[i][1]);
  return total;
}

ChernSimonsReport chern_simons(const FreeSimplicialGroup& k, const Chain& cycle, const Plot& f,
                               const MatrixGroup& g, const InvariantPolynomial& q,
                               const LoopSpec& path, const ParamField& field, int samples,
                               std::mt19937_64& rng, const std::map<int, SimplexRule>& rules) {
  ParamForm psi = chern_simons_form(k, cycle, f, q, rules);
  ChernSimonsReport rep;
  rep.raw = path_integral(psi, path);
  rep.value = CircleValue::from_real(rep.raw);
  rep.distance_to_integer = std::abs(rep.raw - std::round(rep.raw));
  ParamForm dpsi = param_exterior_derivative(psi);
  ParamForm dg = param_delta_g(psi, field);
  const Mat zero = Mat::Zero(g.n(), g.n());
  for (int s = 0; s < samples; ++s) {
    auto w = f.domain.sample(rng);
    auto u0 = random_vector(f.domain.dim, rng), u1 = random_vector(f.domain.dim, rng);
    rep.closedness = std::max(rep.closedness, std::abs(dpsi(w, zero, {u0, u1})));
    for (const auto& x : g.basis())
      rep.equivariance = std::max(rep.equivariance, std::abs(dg(w, x, {})));
  }
  return rep;
}

Plot s3_sweep_plot(const MatrixGroup& g, int degree) {
  if (g.family() != Family::SU || g.n() != 2)
    throw InputError("the 3-sphere sweep is defined for SU(2) only");
  Plot f;
  f.domain.kind = "torus";
  f.domain.dim = 1 + g.dim();
  f.domain.bounds.push_back({0.0, 1.0});
  for (int d = 0; d < g.dim(); ++d) f.domain.bounds.push_back({-0.5, 0.5});
  f.equivariant = true;
  auto empty = [](const std::vector<double>&, const std::vector<double>&) { return Point{}; };
  f.maps[0] = empty;
  f.maps[1] = empty;
  f.maps[2] = [g, degree](const std::vector<double>& w, const std::vector<double>& t) {
    if (degree == 0) return Point{g.identity()};
    double s = std::abs(degree) * w[0];
    s -= std::floor(s);
    if (degree < 0) s = 1.0 - s;
    Eigen::VectorXd a(g.dim());
    for (int d = 0; d < g.dim(); ++d) a(d) = w[static_cast<std::size_t>(d + 1)];
    Mat k = g.exp(g.from_coords(a));
    return Point{k * bump(s, t) * k.adjoint()};
  };
  return f;
}

ParamField s3_sweep_field(const MatrixGroup& g) {
  return [g](const std::vector<double>& w, const Mat& x) {
    Eigen::VectorXd a(g.dim());
    for (int d = 0; d < g.dim(); ++d) a(d) = w[static_cast<std::size_t>(d + 1)];
    Mat am = g.from_coords(a);
    Mat k = g.exp(am);
    Eigen::VectorXd v = left_dexp(g, am).partialPivLu().solve(g.coords(k.adjoint() * x * k));
    std::vector<double> out(w.size(), 0.0);
    for (int d = 0; d < g.dim(); ++d) out[static_cast<std::size_t>(d + 1)] = v(d);
    return out;
  };
}

Plot constant_plot(const FreeSimplicialGroup& k, int max_degree, int matrix_size,
                   const ParamDomain& domain) {
  Plot f;
  f.domain = domain;
  f.equivariant = true;
  for (int q = 0; q <= max_degree; ++q) {
    const auto size = static_cast<std::size_t>(RepSpace(k, q).size());
    f.maps[q] = [size, matrix_size](const std::vector<double>&, const std::vector<double>&) {
      return Point(size, Mat::Identity(matrix_size, matrix_size));
    };
  }
  return f;
}

EquivariantForm alpha_form(const FreeSimplicialGroup& k, const Chain& cycle,
                           const InvariantPolynomial& q) {
  OmegaQ omega = assemble_omega(q);
  const EquivariantForm* c = omega.find(0, 2, 2);
  const int factors = RepSpace(k, 1).size();
  if (!c) return zero_form(factors, 0, 2);
  GradedForms out = pair(k, {{{0, 2, 2}, *c}}, cycle.component(2, 1));
  auto it = out.find({0, 2, 1});
  return it == out.end() ? zero_form(factors, 0, 2) : it->second;
}

AlphaReport alpha_check(const FreeSimplicialGroup& k, const Chain& cycle, const MatrixGroup& g,
                        const InvariantPolynomial& q, int samples, std::mt19937_64& rng) {
  OmegaQ omega = assemble_omega(q);
  const Chain top = cycle.component(1, 2);
  const int n1 = RepSpace(k, 1).size(), n2 = RepSpace(k, 2).size();
  auto get = [](const GradedForms& f, std::tuple<int, int, int> key, int factors, int i, int j) {
    auto it = f.find(key);
    return it == f.end() ? zero_form(factors, i, j) : it->second;
  };
  EquivariantForm dalpha = exterior_derivative(alpha_form(k, cycle, q));
  EquivariantForm target =
      get(pair(k, {{{0, 3, 1}, *omega.find(0, 3, 1)}}, boundary_simp(k, top)), {0, 3, 1}, n1, 0, 3);
  EquivariantForm w2 = get(pair(k, {{{0, 3, 1}, *omega.find(0, 3, 1)}}, top), {0, 3, 2}, n2, 0, 3);
  EquivariantForm m2 = get(pair(k, {{{2, 1, 1}, *omega.find(2, 1, 1)}}, top), {2, 1, 2}, n2, 2, 1);
  EquivariantForm dgw = delta_g(w2), dm = exterior_derivative(m2);

  AlphaReport rep;
  for (int s = 0; s < samples; ++s) {
    Point p1 = random_point(g, n1, rng);
    std::vector<Tangent> v1;
    for (int c = 0; c < 3; ++c) v1.push_back(random_tangent(g, n1, rng));
    double lhs = dalpha(p1, Mat::Zero(g.n(), g.n()), v1);
    double rhs = target(p1, Mat::Zero(g.n(), g.n()), v1);
    rep.residual = std::max(rep.residual, std::abs(lhs - rhs));
    rep.scale = std::max(rep.scale, std::abs(rhs));

    Point p2 = random_point(g, n2, rng);
    Mat x = g.random_algebra(rng);
    std::vector<Tangent> v2{random_tangent(g, n2, rng), random_tangent(g, n2, rng)};
    double a = dgw(p2, x, v2), b = dm(p2, x, v2);
    rep.literal = std::max(rep.literal, std::abs(a - b));
    rep.opposite = std::max(rep.opposite, std::abs(a + b));
  }
  return rep;
}

}  // namespace kanform
