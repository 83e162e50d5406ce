#include "kanform/moduli.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kanform {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

Eigen::VectorXd segment(const std::vector<double>& a, int l, int dim) {
  Eigen::VectorXd v(dim);
  for (int b = 0; b < dim; ++b) v(b) = a[static_cast<std::size_t>(l * dim + b)];
  return v;
}

// Constraint defect log(exp(-x) r(w)) in coordinates.
Eigen::VectorXd defect(const ExtendedModuli& m, const Point& w, const Mat& x) {
  const auto& g = m.group();
  return g.coords(g.log(g.exp(-x) * m.relator_value(w)));
}

std::vector<double> random_vector(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0, 1);
  std::vector<double> v(static_cast<std::size_t>(dim));
  for (auto& x : v) x = n(rng);
  return v;
}

}  // namespace

FreeSimplicialGroup one_relator_group(const std::vector<std::string>& gens, const Word& relator,
                                      int max_degree) {
  for (const auto& [name, e] : exponent_sums(relator))
    if (e != 0)
      throw InputError("relator " + relator.str() + " has exponent sum " + std::to_string(e) +
                       " in " + name);
  FreeSimplicialGroup k(max_degree);
  for (const auto& s : gens) k.add_generator(s, 0, {});
  k.add_generator("r", 1, {relator, Word{}});
  k.kind = "one_relator";
  return k;
}

ExtendedModuli::ExtendedModuli(int genus, MatrixGroup g)
    : g_(std::move(g)), relator_(surface_relator(genus)), k_(builtin_surface(genus)) {
  gens_ = k_.all_generators(0);
  relator_word_ = RepSpace(k_, 0).word_indices(relator_);
}

ExtendedModuli::ExtendedModuli(std::vector<std::string> gens, Word relator, MatrixGroup g)
    : g_(std::move(g)), relator_(std::move(relator)), k_(one_relator_group(gens, relator_)) {
  gens_ = k_.all_generators(0);
  relator_word_ = RepSpace(k_, 0).word_indices(relator_);
}

Mat ExtendedModuli::relator_value(const Point& w) const {
  if (static_cast<int>(w.size()) != rank())
    throw InputError("expected " + std::to_string(rank()) + " group elements, got " +
                     std::to_string(w.size()));
  return evaluate_word(relator_word_, w, g_.n());
}

double ExtendedModuli::residual(const ModuliPoint& p) const {
  return (g_.exp(p.x) - relator_value(p.w)).norm();
}

bool ExtendedModuli::regular(const Mat& x, double margin) const {
  Eigen::EigenSolver<Eigen::MatrixXd> es(ad_matrix(g_, x), false);
  for (const auto& ev : es.eigenvalues()) {
    double im = std::abs(ev.imag());
    double k = std::round(im / kTwoPi);
    if (k >= 1 && std::abs(im - kTwoPi * k) < margin) return false;
  }
  return true;
}

Mat ExtendedModuli::solve_x(const Point& w, const Mat& x0) const {
  Mat x = g_.project(x0);
  for (int it = 0; it < 60; ++it) {
    Eigen::VectorXd d = defect(*this, w, x);
    if (d.norm() < 1e-15) break;
    Eigen::VectorXd y = left_dexp(g_, x).partialPivLu().solve(d);
    if (!y.allFinite()) break;
    // Damped: log is only trusted near the identity.
    if (y.norm() > 0.5) y *= 0.5 / y.norm();
    x += g_.from_coords(y);
  }
  ModuliPoint p{w, x};
  if (!(residual(p) <= 1e-10))
    throw InputError("Newton iteration for exp(X) = r(w) did not converge");
  if (!regular(x)) throw InputError("X left the regular locus of exp");
  return x;
}

ModuliPoint ExtendedModuli::project(const ModuliPoint& seed) const {
  const int dim = g_.dim(), n = rank();
  ModuliPoint p{seed.w, g_.project(seed.x)};
  for (auto& m : p.w) m = g_.exp(g_.log(m));
  for (int it = 0; it < 60; ++it) {
    Eigen::VectorXd c = defect(*this, p.w, p.x);
    if (c.norm() < 1e-15) break;
    Eigen::MatrixXd a(dim, (n + 1) * dim);
    for (int l = 0; l < n; ++l)
      for (int b = 0; b < dim; ++b) {
        Tangent v(static_cast<std::size_t>(n), Mat::Zero(g_.n(), g_.n()));
        v[static_cast<std::size_t>(l)] = g_.basis()[static_cast<std::size_t>(b)];
        a.col(l * dim + b) = g_.coords(word_pushforward(relator_word_, p.w, v));
      }
    a.rightCols(dim) = -left_dexp(g_, p.x);
    Eigen::VectorXd step = -a.completeOrthogonalDecomposition().solve(c);
    for (int l = 0; l < n; ++l)
      p.w[static_cast<std::size_t>(l)] =
          p.w[static_cast<std::size_t>(l)] * g_.exp(g_.from_coords(step.segment(l * dim, dim)));
    p.x += g_.from_coords(step.tail(dim));
  }
  if (!(residual(p) <= 1e-10))
    throw InputError("seed could not be projected onto the moduli space");
  if (!regular(p.x)) throw InputError("projected X is outside the regular locus of exp");
  return p;
}

ModuliPoint ExtendedModuli::conjugate(const ModuliPoint& p, const Mat& k) const {
  ModuliPoint out{p.w, ad(k, p.x)};
  for (auto& m : out.w) m = k * m * k.adjoint();
  return out;
}

Mat ExtendedModuli::lift_tangent(const ModuliPoint& p, const Tangent& xi) const {
  Eigen::VectorXd rhs = g_.coords(word_pushforward(relator_word_, p.w, xi));
  return g_.from_coords(left_dexp(g_, p.x).partialPivLu().solve(rhs));
}

double ExtendedModuli::tangent_residual(const ModuliPoint& p, const Tangent& xi,
                                        const Mat& y) const {
  Eigen::VectorXd rhs = g_.coords(word_pushforward(relator_word_, p.w, xi));
  return (left_dexp(g_, p.x) * g_.coords(y) - rhs).norm();
}

ModuliChart::ModuliChart(ExtendedModuli m, ModuliPoint base, double radius)
    : m_(std::move(m)), base_(std::move(base)), radius_(radius) {}

ModuliPoint ModuliChart::point(const std::vector<double>& a) const {
  const auto& g = m_.group();
  if (static_cast<int>(a.size()) != m_.dimension())
    throw InputError("chart coordinate has the wrong dimension");
  auto w_at = [&](double s) {
    Point w = base_.w;
    for (int l = 0; l < m_.rank(); ++l)
      w[static_cast<std::size_t>(l)] =
          base_.w[static_cast<std::size_t>(l)] * g.exp(s * g.from_coords(segment(a, l, g.dim())));
    return w;
  };
  // Continue X along s -> s a, halving the step when Newton fails, so the
  // branch of X is the one connected to the base.
  Mat x = base_.x;
  double s = 0, h = 1;
  while (s < 1) {
    double next = std::min(1.0, s + h);
    try {
      x = m_.solve_x(w_at(next), x);
      s = next;
      h *= 2;
    } catch (const InputError&) {
      h /= 2;
      if (h < 1e-4) throw;
    }
  }
  return {w_at(1), x};
}

std::vector<double> ModuliChart::sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> u(-radius_, radius_);
  std::vector<double> a(static_cast<std::size_t>(m_.dimension()));
  for (auto& v : a) v = u(rng);
  return a;
}

std::vector<double> ModuliChart::fundamental_field(const std::vector<double>& a,
                                                   const Mat& x) const {
  const auto& g = m_.group();
  const int dim = g.dim();
  ModuliPoint p = point(a);
  Tangent z = conjugation_field(p.w, x);
  std::vector<double> out(a.size());
  for (int l = 0; l < m_.rank(); ++l) {
    Eigen::VectorXd al = segment(a, l, dim);
    Eigen::VectorXd v = left_dexp(g, g.from_coords(al))
                            .partialPivLu()
                            .solve(g.coords(z[static_cast<std::size_t>(l)]));
    for (int b = 0; b < dim; ++b) out[static_cast<std::size_t>(l * dim + b)] = v(b);
  }
  return out;
}

ModuliPoint random_moduli_point(const ExtendedModuli& m, std::mt19937_64& rng, double scale) {
  const auto& g = m.group();
  ModuliPoint seed{random_point(g, m.rank(), rng, scale), Mat()};
  seed.x = g.log(m.relator_value(seed.w)) + g.random_algebra(rng, 1e-3);
  return m.project(seed);
}

Plot moduli_plot(const ModuliChart& chart) {
  const auto& m = chart.moduli();
  const auto& k = m.complex();
  RepSpace h1(k, 1);
  // Slot of each H_1 generator: index into w, or -1 for r.
  std::vector<int> slot;
  for (const auto& name : h1.generators()) {
    GeneratorRef ref = GeneratorRef::parse(name);
    if (ref.base == "r") {
      slot.push_back(-1);
      continue;
    }
    int idx = RepSpace(k, 0).index(ref.base);
    slot.push_back(idx);
  }
  Plot f;
  f.domain.kind = "box";
  f.domain.dim = m.dimension();
  f.domain.bounds.assign(static_cast<std::size_t>(f.domain.dim), {-chart.radius(), chart.radius()});
  f.equivariant = true;
  f.maps[0] = [chart](const std::vector<double>& a, const std::vector<double>&) {
    return chart.point(a).w;
  };
  f.maps[1] = [chart, slot](const std::vector<double>& a, const std::vector<double>& t) {
    ModuliPoint p = chart.point(a);
    const auto& g = chart.moduli().group();
    Point out;
    for (int s : slot)
      out.push_back(s < 0 ? g.exp(t[1] * p.x) : p.w[static_cast<std::size_t>(s)]);
    return out;
  };
  return f;
}

SurfaceForms surface_two_form(const ModuliChart& chart, const InvariantPolynomial& q,
                              const Chain& cycle, bool drop_c20) {
  const auto& k = chart.moduli().complex();
  OmegaQ omega = assemble_omega(q);
  Plot f = moduli_plot(chart);
  SurfaceForms out;
  out.paired = pair(k, omega.components, cycle);
  ParamForms all = integrate_over_plot(out.paired, f);
  auto pick = [](const ParamForms& forms, int i, int j) {
    auto it = forms.find({i, j});
    if (it != forms.end()) return it->second;
    return ParamForm{i, j,
                     [](const std::vector<double>&, const Mat&,
                        const std::vector<std::vector<double>>&) { return 0.0; }};
  };
  out.omega = pick(all, 0, 2);
  if (drop_c20) {
    Chain rest = cycle - cycle.component(2, 0);
    out.mu = pick(integrate_over_plot(pair(k, omega.components, rest), f), 2, 0);
  } else {
    out.mu = pick(all, 2, 0);
  }
  return out;
}

Mat moment_value(const SurfaceForms& f, const MatrixGroup& g, const InvariantPolynomial& q,
                 const std::vector<double>& a) {
  const int dim = g.dim();
  Eigen::MatrixXd gram(dim, dim);
  Eigen::VectorXd v(dim);
  for (int b = 0; b < dim; ++b) {
    const Mat& eb = g.basis()[static_cast<std::size_t>(b)];
    v(b) = f.mu(a, eb, {});
    for (int c = 0; c < dim; ++c) gram(b, c) = q({eb, g.basis()[static_cast<std::size_t>(c)]});
  }
  return g.from_coords(gram.partialPivLu().solve(v));
}

std::vector<double> omega_singular_values(const ModuliChart& chart, const ParamForm& omega,
                                          const std::vector<double>& a) {
  const int n = chart.moduli().dimension();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  std::vector<std::vector<double>> e(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int b = 0; b < n; ++b) e[static_cast<std::size_t>(b)][static_cast<std::size_t>(b)] = 1;
  for (int b = 0; b < n; ++b)
    for (int c = b + 1; c < n; ++c) {
      w(b, c) = omega(a, Mat(), {e[static_cast<std::size_t>(b)], e[static_cast<std::size_t>(c)]});
      w(c, b) = -w(b, c);
    }
  Eigen::VectorXd s = Eigen::JacobiSVD<Eigen::MatrixXd>(w).singularValues();
  return {s.data(), s.data() + s.size()};
}

int numerical_rank(const std::vector<double>& singular, double rel_tol) {
  if (singular.empty() || singular.front() == 0) return 0;
  int r = 0;
  for (double v : singular)
    if (v > rel_tol * singular.front()) ++r;
  return r;
}

MomentumReport momentum_check(const ModuliChart& chart, const InvariantPolynomial& q,
                              const Chain& cycle, int samples, std::mt19937_64& rng) {
  const auto& m = chart.moduli();
  const auto& g = m.group();
  const int dim = g.dim(), n = m.dimension();
  SurfaceForms f = surface_two_form(chart, q, cycle);
  ParamField field = [&chart](const std::vector<double>& a, const Mat& x) {
    return chart.fundamental_field(a, x);
  };
  ParamForm domega = param_exterior_derivative(f.omega);
  ParamForm dmu = param_exterior_derivative(f.mu);
  ParamForm dgomega = param_delta_g(f.omega, field);

  // Conjugated chart: a' = Ad_k a blockwise, tangents likewise.
  Mat kc = g.random_element(rng);
  ModuliChart conj(m, m.conjugate(chart.base(), kc), chart.radius());
  SurfaceForms fc = surface_two_form(conj, q, cycle);
  auto rotate = [&](const std::vector<double>& a) {
    std::vector<double> out(a.size());
    for (int l = 0; l < m.rank(); ++l) {
      Eigen::VectorXd v = g.coords(ad(kc, g.from_coords(segment(a, l, dim))));
      for (int b = 0; b < dim; ++b) out[static_cast<std::size_t>(l * dim + b)] = v(b);
    }
    return out;
  };

  MomentumReport r;
  r.samples = samples;
  for (int s = 0; s < samples; ++s) {
    auto a = chart.sample(rng);
    Mat x = g.random_algebra(rng);
    std::vector<std::vector<double>> u;
    for (int c = 0; c < 3; ++c) u.push_back(random_vector(n, rng));
    r.closedness = std::max(r.closedness, std::abs(domega(a, x, u)));
    double lhs = dgomega(a, x, {u[0]});
    double rhs = dmu(a, x, {u[0]});
    r.literal = std::max(r.literal, std::abs(lhs - rhs));
    r.opposite = std::max(r.opposite, std::abs(lhs + rhs));
    r.scale = std::max(r.scale, std::abs(rhs));
    double w0 = f.omega(a, x, {u[0], u[1]});
    double w1 = fc.omega(rotate(a), x, {rotate(u[0]), rotate(u[1])});
    double m0 = f.mu(a, x, {});
    double m1 = fc.mu(rotate(a), ad(kc, x), {});
    r.equivariance = std::max({r.equivariance, std::abs(w0 - w1), std::abs(m0 - m1)});
  }
  return r;
}

KirillovReport kirillov_check(const MatrixGroup& g, const Mat& x0, const InvariantPolynomial& q,
                              int samples, std::mt19937_64& rng,
                              const InvariantPolynomial* reference) {
  if ((g.exp(x0) - g.identity()).norm() > 1e-9)
    throw InputError("Kirillov check needs exp(X0) = e");
  FreeSimplicialGroup k = builtin_surface(0);
  Chain cycle = surface_cycle(k).cycle;
  RepSpace h1(k, 1);
  const int r_slot = h1.index("r");
  const int size1 = h1.size();
  const int dim = g.dim();
  const InvariantPolynomial& ref = reference ? *reference : q;
  OmegaQ omega = assemble_omega(q);
  GradedForms paired = pair(k, omega.components, cycle);

  KirillovReport rep;
  rep.samples = samples;
  std::vector<double> ratios;
  int attempts = 0;
  while (static_cast<int>(ratios.size()) < samples && attempts++ < 20 * samples) {
    Mat k0 = g.random_element(rng);
    Plot f;
    f.domain.kind = "box";
    f.domain.dim = dim;
    f.domain.bounds.assign(static_cast<std::size_t>(dim), {-0.5, 0.5});
    f.equivariant = true;
    f.maps[0] = [](const std::vector<double>&, const std::vector<double>&) { return Point{}; };
    f.maps[1] = [&g, k0, x0, r_slot, size1](const std::vector<double>& a,
                                            const std::vector<double>& t) {
      Eigen::VectorXd c = Eigen::Map<const Eigen::VectorXd>(a.data(), static_cast<long>(a.size()));
      Mat kk = g.exp(g.from_coords(c)) * k0;
      Point out(static_cast<std::size_t>(size1), g.identity());
      out[static_cast<std::size_t>(r_slot)] = g.exp(t[1] * ad(kk, x0));
      return out;
    };
    ParamForms all = integrate_over_plot(paired, f, {}, {{1, segment_rule(20)}});
    auto it = all.find({0, 2});
    if (it == all.end()) throw std::logic_error("genus-0 pairing has no (0, 2) part");
    auto u = random_vector(dim, rng), v = random_vector(dim, rng);
    Mat uu = g.from_coords(Eigen::Map<Eigen::VectorXd>(u.data(), dim));
    Mat vv = g.from_coords(Eigen::Map<Eigen::VectorXd>(v.data(), dim));
    Mat y = ad(k0, x0);
    std::vector<double> zero(static_cast<std::size_t>(dim), 0.0);
    double form = it->second(zero, Mat::Zero(g.n(), g.n()), {u, v});
    double kks = ref({y, uu * vv - vv * uu});
    rep.max_form = std::max(rep.max_form, std::abs(form));
    if (std::abs(kks) < 1e-12 && std::abs(form) < 1e-12) continue;
    ratios.push_back(form / kks);
  }
  if (ratios.empty()) return rep;
  double mean = 0;
  for (double x : ratios) mean += x;
  mean /= static_cast<double>(ratios.size());
  double var = 0;
  for (double x : ratios) var += (x - mean) * (x - mean);
  double sd = std::sqrt(var / static_cast<double>(ratios.size()));
  rep.ratio = mean;
  rep.spread = mean == 0 ? (sd == 0 ? 0 : std::numeric_limits<double>::infinity())
                         : sd / std::abs(mean);
  return rep;
}

}  // namespace kanform
