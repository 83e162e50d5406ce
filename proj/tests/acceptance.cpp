// Acceptance gate: one PASS/FAIL line per criterion, with residuals and
// wall time against the budget.  Exit status is nonzero if any fails.

#include <Eigen/Eigenvalues>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include "kanform/moduli.hpp"
#include "kanform/shulman.hpp"
#include "support.hpp"

using namespace kanform;
using namespace kanform::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // NaN fails.
  void le(const std::string& what, double value, double tol) {
    const bool ok = value <= tol;
    pass = pass && ok;
    detail << what << " " << value << (ok ? " <= " : " > ") << tol << "; ";
  }
  void ge(const std::string& what, double value, double bound) {
    const bool ok = value >= bound;
    pass = pass && ok;
    detail << what << " " << value << (ok ? " >= " : " < ") << bound << "; ";
  }
  void holds(const std::string& what, bool ok) {
    pass = pass && ok;
    detail << what << (ok ? " ok" : " FAILED") << "; ";
  }
  void note(const std::string& text) { detail << text << "; "; }
};

std::string num(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

std::vector<Tangent> frame(const MatrixGroup& g, int factors, int count, std::mt19937_64& rng) {
  std::vector<Tangent> v;
  for (int a = 0; a < count; ++a) v.push_back(random_tangent(g, factors, rng));
  return v;
}

// Worst |f| at random points, algebra elements and frames.
double worst(const EquivariantForm& f, const MatrixGroup& g, int samples, std::mt19937_64& rng,
             bool zero_x = false) {
  double w = 0;
  for (int s = 0; s < samples; ++s) {
    Point p = random_point(g, f.factors, rng);
    Mat x = zero_x ? Mat::Zero(g.n(), g.n()) : g.random_algebra(rng);
    w = std::max(w, std::abs(f(p, x, frame(g, f.factors, f.j, rng))));
  }
  return w;
}

CellularChain top_cell(const std::string& name, int degree) {
  CellularChain z;
  add_cell(z, degree, name, 1);
  return z;
}

bool plus_minus(const CellularChain& got, const CellularChain& top) {
  CellularChain neg = top;
  for (auto& [d, cells] : neg)
    for (auto& [name, v] : cells) v = -v;
  return got == top || got == neg;
}

// ------------------------------------------------------------------ criteria

void chain_algebra(Outcome& o) {
  std::mt19937_64 rng(101);
  std::vector<FreeSimplicialGroup> groups;
  groups.push_back(builtin_surface(2));
  groups.push_back(builtin_threefold(synthetic_threefold()));
  long checked = 0, bad_nat = 0, bad_sharp = 0, bad_total = 0;
  int bidegrees = 0;
  for (const auto& k : groups)
    for (int b = 1; b <= 4; ++b)
      for (int q = 0; b + q <= 4; ++q) {
        ++bidegrees;
        for (int t = 0; t < 500; ++t) {
          Chain c = random_chain(k, b, q, rng);
          bad_nat += !boundary_bar(boundary_bar(c)).is_zero();
          bad_sharp += !boundary_simp(k, boundary_simp(k, c)).is_zero();
          bad_total += !total_boundary(k, total_boundary(k, c)).is_zero();
          ++checked;
        }
      }
  o.note(std::to_string(checked) + " chains over " + std::to_string(bidegrees) +
         " (group, bidegree) pairs, 500 each");
  o.holds("d_nat^2 = 0 (" + std::to_string(bad_nat) + " violations)", bad_nat == 0);
  o.holds("d_sharp^2 = 0 (" + std::to_string(bad_sharp) + " violations)", bad_sharp == 0);
  o.holds("d^2 = 0 (" + std::to_string(bad_total) + " violations)", bad_total == 0);
}

void retraction(Outcome& o) {
  std::mt19937_64 rng(102);
  long bad = 0, checked = 0;
  std::vector<FreeSimplicialGroup> groups;
  groups.push_back(builtin_surface(1));
  groups.push_back(builtin_surface(2));
  groups.push_back(builtin_threefold(synthetic_threefold()));
  for (const auto& k : groups) {
    CellComplex y = CellComplex::from_group(k);
    for (int b = 1; b <= 3; ++b)
      for (int q = 0; b + q <= 4 && q <= 2; ++q)
        for (int t = 0; t < 50; ++t) {
          Chain c = random_chain(k, b, q, rng);
          bad += retract_to_cellular(k, total_boundary(k, c), y) !=
                 cellular_boundary(y, retract_to_cellular(k, c, y));
          ++checked;
        }
  }
  o.holds("chain map on " + std::to_string(checked) + " random chains", bad == 0);
  for (int genus : {0, 1, 2}) {
    auto k = builtin_surface(genus);
    auto r = retract_to_cellular(k, surface_cycle(k).cycle, CellComplex::from_group(k));
    o.holds("genus " + std::to_string(genus) + " cycle -> +-[r]", plus_minus(r, top_cell("r", 2)));
  }
  auto s3 = builtin_threefold(ThreefoldData::minimal_s3());
  auto r = retract_to_cellular(s3, threefold_cycle(s3).cycle, CellComplex::from_group(s3));
  o.holds("minimal S^3 cycle -> +-[sigma]", plus_minus(r, top_cell("sigma", 3)));
}

void certificates(Outcome& o) {
  for (int genus : {0, 1, 2, 3}) {
    auto k = builtin_surface(genus);
    o.holds("genus " + std::to_string(genus) + " total boundary = 0",
            total_boundary(k, surface_cycle(k).cycle).is_zero());
  }
  auto s3 = builtin_threefold(ThreefoldData::minimal_s3());
  o.holds("minimal S^3 total boundary = 0", total_boundary(s3, threefold_cycle(s3).cycle).is_zero());
  auto syn = builtin_threefold(synthetic_threefold());
  o.holds("synthetic threefold total boundary = 0",
          total_boundary(syn, threefold_cycle(syn).cycle).is_zero());

  auto k = builtin_surface(1);
  Chain c20 = surface_cycle(k).cycle.component(2, 0);
  // Expand the bar boundary term by term: d[a|b] = [b] - [ab] + [a].
  Chain expanded;
  for (const auto& [t, n] : c20.terms()) {
    const Word& a = t.entries[0];
    const Word& b = t.entries[1];
    expanded.add(BarTuple{0, {b}}, n);
    expanded.add(BarTuple{0, {a * b}}, -n);
    expanded.add(BarTuple{0, {a}}, n);
  }
  Chain commutator(BarTuple{0, {Word::parse("x1*y1*x1^-1*y1^-1")}});
  o.holds("genus-1 d_nat c_{2,0} = [xyx^-1y^-1] by expansion", expanded == commutator);
  o.holds("and by boundary_bar", boundary_bar(c20) == commutator);
}

void shulman_ladder(Outcome& o) {
  std::mt19937_64 rng(104);
  MatrixGroup g(Family::SU, 2);
  auto q = basic_trace_form();
  EquivariantForm q31 = shulman_form(q, 1), q22 = shulman_form(q, 2);
  EquivariantForm dq31 = exterior_derivative(q31), dq22 = exterior_derivative(q22);
  EquivariantForm nat31 = delta_nat(q31), nat22 = delta_nat(q22);
  double closed = 0, plus = 0, minus = 0, top = 0, scale = 0;
  const Mat zero = Mat::Zero(2, 2);
  for (int s = 0; s < 50; ++s) {
    Point p1 = random_point(g, 1, rng);
    closed = std::max(closed, std::abs(dq31(p1, zero, frame(g, 1, 4, rng))));
    Point p2 = random_point(g, 2, rng);
    auto v = frame(g, 2, 3, rng);
    const double a = dq22(p2, zero, v), b = nat31(p2, zero, v);
    plus = std::max(plus, std::abs(a + b));
    minus = std::max(minus, std::abs(a - b));
    scale = std::max(scale, std::abs(a));
    Point p3 = random_point(g, 3, rng);
    top = std::max(top, std::abs(nat22(p3, zero, frame(g, 3, 2, rng))));
  }
  o.le("|dQ^{3,1}|", closed, 1e-5);
  const int sign = plus < minus ? 1 : -1;
  o.le(std::string("|dQ^{2,2} ") + (sign > 0 ? "+" : "-") + " delta_nat Q^{3,1}|",
       std::min(plus, minus), 1e-5);
  o.note("other sign " + num(std::max(plus, minus)) + ", |dQ^{2,2}| " +
         num(scale));
  o.le("|delta_nat Q^{2,2}|", top, 1e-5);
}

void equivariant_extension(Outcome& o) {
  std::mt19937_64 rng(105);
  auto run = [&](const MatrixGroup& g, const InvariantPolynomial& poly, const std::string& label,
                 int samples) {
    OmegaQ om = assemble_omega(poly);
    double pointwise = 0, vanish = 0;
    for (const auto& [key, f] : om.components) {
      auto [i, j, qd] = key;
      if (i == 0) {
        EquivariantForm diff = sum({f, scaled(shulman_form(poly, qd), -1)});
        pointwise = std::max(pointwise, worst(diff, g, samples, rng, true));
      } else {
        vanish = std::max(vanish, worst(f, g, samples, rng, true));
      }
    }
    o.le(label + " |Omega_Q(X=0) - Shulman|", std::max(pointwise, vanish), 1e-9);
    std::vector<EquivariantForm> all;
    for (const auto& [key, f] : om.components) all.push_back(f);
    double dg = 0;
    for (const auto& [key, f] : total_differential(all)) dg = std::max(dg, worst(f, g, samples, rng));
    o.le(label + " |d_G Omega_Q|", dg, 1e-5);
  };
  run(MatrixGroup(Family::SU, 2), basic_trace_form(), "SU(2) basic", 50);
  // Cubic extra at a few samples; its finite differences dominate the cost.
  run(MatrixGroup(Family::U, 3), chern_polynomial(3), "U(3) c_3", 3);
}

void pairing_identity(Outcome& o) {
  std::mt19937_64 rng(106);
  MatrixGroup g(Family::SU, 2);
  auto k = builtin_surface(1);
  auto om = assemble_omega(basic_trace_form());
  Chain c = surface_cycle(k).cycle;
  auto id = differential_identity_check(k, g, om.components, 4, c, 50, rng);
  o.le("|D<Omega,c> - <d_G Omega,c>| on the cycle", id.worst, 1e-5);
  double mag = 0;
  for (const auto& r : id.rows) mag = std::max(mag, r.magnitude);
  o.note("|D<Omega,c>| " + num(mag));

  Chain broken = c.component(2, 0);
  auto neg = differential_identity_check(k, g, om.components, 4, broken, 50, rng);
  double boundary = 0;
  for (const auto& r : neg.rows) boundary = std::max(boundary, r.boundary);
  o.le("non-cycle c_{2,0}: |D<Omega,c> - <Omega,dc>|", neg.worst, 1e-5);
  o.ge("and |<Omega,dc>|", boundary, 1e-3);
}

void moduli(Outcome& o) {
  std::mt19937_64 rng(107);
  MatrixGroup g(Family::SU, 2);
  auto q = basic_trace_form();
  ExtendedModuli m(1, g);
  ModuliChart chart(m, random_moduli_point(m, rng), 0.3);
  Chain c = surface_cycle(m.complex()).cycle;
  MomentumReport r = momentum_check(chart, q, c, 50, rng);
  o.le("|d omega_c|", r.closedness, 1e-5);
  o.le("|delta_G omega_c - d mu_sharp|", r.literal, 1e-5);
  o.note("realized sign " + std::string(r.realized_sign() < 0 ? "-" : "+") +
         ": |delta_G omega_c + d mu_sharp| " + num(r.opposite) + ", |d mu_sharp| " +
         num(r.scale));

  LiftOptions fox;
  fox.method = LiftMethod::fox;
  Chain c2 = surface_cycle(m.complex(), fox).cycle;
  o.holds("second lift of c_{2,0} differs", c2.component(2, 0) != c.component(2, 0));
  SurfaceForms f = surface_two_form(chart, q, c), f2 = surface_two_form(chart, q, c2);
  double lo = INFINITY, hi = -INFINITY;
  for (int s = 0; s < 50; ++s) {
    auto a = chart.sample(rng);
    // mu_sharp(X) for each basis X, stacked; the shift must not depend on a.
    for (const Mat& x : g.basis()) {
      const double shift = f2.mu(a, x, {}) - f.mu(a, x, {});
      lo = std::min(lo, shift);
      hi = std::max(hi, shift);
    }
  }
  o.le("mu shift spread between lifts", hi - lo, 1e-6);
}

void chern_simons_check(Outcome& o) {
  std::mt19937_64 rng(108);
  MatrixGroup g(Family::SU, 2);
  auto q = basic_trace_form();
  auto k = builtin_threefold(ThreefoldData::minimal_s3());
  Chain c = threefold_cycle(k).cycle;
  std::map<int, SimplexRule> rules{{2, composite_triangle_rule(4)}};
  LoopSpec loop{{0, 0.1, -0.2, 0.05}, {1, 0, 0, 0}, 64, true};
  auto r = chern_simons(k, c, s3_sweep_plot(g, 1), g, q, loop, s3_sweep_field(g), 5, rng, rules);
  o.le("|d psi|", r.closedness, 1e-5);
  o.le("|delta_G psi(X)|", r.equivariance, 1e-6);
  o.le("degree-1 period distance to integer", r.distance_to_integer, 1e-3);
  o.ge("|period|", std::abs(std::round(r.raw)), 1);
  o.note("raw period " + num(r.raw));
  auto z = chern_simons(k, c, s3_sweep_plot(g, 0), g, q, loop, s3_sweep_field(g), 1, rng, rules);
  o.le("degree-0 period", std::abs(z.raw), 1e-9);
}

void catalog(Outcome& o) {
  std::mt19937_64 rng(109);
  auto cat = un_generator_catalog(1, 2, 10, rng);
  std::map<std::string, int> expected{{"f_1", 0},    {"f_2", 2},    {"b_1^x1", 1}, {"b_1^y1", 1},
                                      {"b_2^x1", 3}, {"b_2^y1", 3}, {"a_1", 2},    {"a_2", 4}};
  bool degrees = cat.size() == expected.size();
  double closed = 0;
  for (const auto& e : cat) {
    auto it = expected.find(e.name);
    degrees = degrees && it != expected.end() && it->second == e.degree;
    closed = std::max(closed, e.closedness);
  }
  o.holds("degrees of f_r, b_r^j, a_r", degrees);
  o.le("worst closedness", closed, 1e-5);

  // f_1 on a U(2) chart whose X has a nonzero trace label.
  MatrixGroup g(Family::U, 2);
  ExtendedModuli m(1, g);
  ModuliPoint base = random_moduli_point(m, rng, 0.3);
  Eigen::ComplexEigenSolver<Mat> es(base.x);
  Mat dvals = es.eigenvalues().asDiagonal();
  dvals(0, 0) += cplx(0, 2 * std::numbers::pi);
  base.x = es.eigenvectors() * dvals * es.eigenvectors().inverse();
  ModuliChart chart(m, base, 0.2);
  Chain c = surface_cycle(m.complex()).cycle;
  auto forms = integrate_over_plot(
      pair(m.complex(), assemble_omega(chern_polynomial(1)).components, c), moduli_plot(chart));
  auto df = param_exterior_derivative(forms.at({0, 0}));
  double grad = 0;
  const int n = m.dimension();
  for (int s = 0; s < 10; ++s) {
    auto a = chart.sample(rng);
    for (int b = 0; b < n; ++b) {
      std::vector<double> e(static_cast<std::size_t>(n), 0.0);
      e[static_cast<std::size_t>(b)] = 1;
      grad = std::max(grad, std::abs(df(a, Mat::Zero(2, 2), {e})));
    }
  }
  o.le("f_1 FD gradient", grad, 1e-6);
  o.note("f_1 value " + num(forms.at({0, 0})(chart.sample(rng), Mat::Zero(2, 2), {})));
}

void kirillov(Outcome& o) {
  std::mt19937_64 rng(110);
  MatrixGroup g(Family::SU, 2);
  Mat x0 = Mat::Zero(2, 2);
  x0(0, 0) = cplx(0, 2 * std::numbers::pi);
  x0(1, 1) = cplx(0, -2 * std::numbers::pi);
  auto r = kirillov_check(g, x0, basic_trace_form(), 20, rng);
  o.holds("20 tangent pairs used", r.samples == 20);
  o.le("relative spread of form / KKS", r.spread, 1e-4);
  o.ge("|ratio|", std::abs(r.ratio), 1e-3);
  o.note("ratio " + num(r.ratio));
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "exact chain algebra", 10, chain_algebra},
      {2, "retraction to cellular chains", 5, retraction},
      {3, "cycle certificates", 5, certificates},
      {4, "Shulman ladder", 60, shulman_ladder},
      {5, "equivariant extension", 120, equivariant_extension},
      {6, "pairing identity", 120, pairing_identity},
      {7, "extended moduli space", 180, moduli},
      {8, "Chern-Simons function", 300, chern_simons_check},
      {9, "U(n) generator catalog", 180, catalog},
      {10, "Kirillov form", 60, kirillov},
  };
  std::cout.precision(3);
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.holds(std::string("threw: ") + e.what(), false);
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.le("time (s)", secs, c.budget);
    failed += !o.pass;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title
              << "  [" << o.detail.str() << "]" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
