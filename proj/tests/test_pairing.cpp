#include <doctest.h>

#include <random>

#include "kanform/cyclelift.hpp"
#include "kanform/pairing.hpp"
#include "support.hpp"

using namespace kanform;

namespace {

Mat fd_word(const std::vector<std::pair<int, int>>& w, const Point& p, const Tangent& v) {
  const double h = 1e-6;
  const int n = static_cast<int>(p[0].rows());
  return (evaluate_word(w, flow(p, v, h), n) - evaluate_word(w, flow(p, v, -h), n)) / (2 * h);
}

}  // namespace

TEST_CASE("representation spaces of the genus-1 surface group") {
  auto k = builtin_surface(1);
  RepSpace h0(k, 0), h1(k, 1), h2(k, 2);
  CHECK(h0.size() == 2);
  CHECK(h1.size() == 3);
  CHECK(h2.size() == 4);
  CHECK_THROWS_AS(h1.index("x1"), InputError);
  RepPoint p{1, {{"s0.x1", Mat::Identity(2, 2)}, {"r", Mat::Identity(2, 2)}}};
  CHECK_THROWS_AS(h1.pack(p), InputError);
  // Coface 0 sends phi to phi o d_0: r -> [x1, y1].
  std::mt19937_64 rng(1);
  MatrixGroup g(Family::SU, 2);
  Point phi = random_point(g, 2, rng);
  Point up = h1.coface(0).apply(phi);
  RepPoint named = h1.unpack(up);
  Mat x = phi[static_cast<std::size_t>(h0.index("x1"))], y = phi[static_cast<std::size_t>(h0.index("y1"))];
  CHECK((named.values["r"] - x * y * x.adjoint() * y.adjoint()).norm() < 1e-13);
  CHECK((named.values["s0.x1"] - x).norm() < 1e-14);
  CHECK((h1.coface(1).apply(phi)[static_cast<std::size_t>(h1.index("r"))] - Mat::Identity(2, 2)).norm() < 1e-14);
}

TEST_CASE("evaluation pushforward") {
  std::mt19937_64 rng(2);
  MatrixGroup g(Family::U, 2);
  auto k = builtin_surface(1);
  RepSpace h(k, 0);
  Point p = random_point(g, 2, rng);
  Tangent v = random_tangent(g, 2, rng);
  const int ix = h.index("x1");
  Mat gx = p[static_cast<std::size_t>(ix)], vx = v[static_cast<std::size_t>(ix)];

  auto [pt, tv] = evaluation_pushforward(h, {0, {Word::parse("x1")}}, p, {v});
  CHECK((pt[0] - gx).norm() < 1e-15);
  CHECK((tv[0][0] - vx).norm() < 1e-15);

  // x*x: left-trivialized derivative against a finite-difference curve.
  BarTuple sq{0, {Word::parse("x1*x1")}};
  auto [p2, t2] = evaluation_pushforward(h, sq, p, {v});
  CHECK((p2[0] - gx * gx).norm() < 1e-14);
  Mat fd = fd_word(h.word_indices(sq.entries[0]), p, v);
  CHECK((p2[0] * t2[0][0] - fd).norm() < 1e-8);
  // At the base point the matrix derivative is (g v) g + g (g v).
  CHECK((fd - (gx * vx * gx + gx * gx * vx)).norm() < 1e-8);

  BarTuple inv{0, {Word::parse("x1^-1")}};
  auto [p3, t3] = evaluation_pushforward(h, inv, p, {v});
  CHECK((p3[0] - gx.adjoint()).norm() < 1e-14);
  // d(g^{-1}) = -g^{-1} (g v) g^{-1}; left-trivialized: -g v g^{-1}.
  CHECK((p3[0] * t3[0][0] + gx.adjoint() * gx * vx * gx.adjoint()).norm() < 1e-12);
  CHECK_THROWS_AS(h.evaluation({0, {Word::parse("z")}}), InputError);
}

TEST_CASE("pairing sign and bilinearity") {
  CHECK(pairing_sign(1) == 1);
  CHECK(pairing_sign(2) == 1);
  CHECK(pairing_sign(3) == -1);
  CHECK(pairing_sign(4) == -1);
  CHECK(pairing_sign(5) == 1);
  for (int k = 1; k < 6; ++k) CHECK(pairing_sign(k) * pairing_sign(k + 1) == (k % 2 ? 1 : -1));

  std::mt19937_64 rng(3);
  MatrixGroup g(Family::SU, 2);
  auto k = builtin_surface(1);
  auto om = assemble_omega(basic_trace_form());
  CHECK(pair(k, om.components, Chain()).empty());
  auto c = surface_cycle(k).cycle;
  Chain a = c.component(2, 0), b = c.component(1, 1);
  auto pa = pair(k, om.components, a), pb = pair(k, om.components, b);
  auto pab = pair(k, om.components, Integer(3) * a + b);
  for (const auto& [key, f] : pab) {
    auto [i, j, q] = key;
    RepSpace h(k, q);
    Point p = random_point(g, h.size(), rng);
    Mat x = g.random_algebra(rng);
    std::vector<Tangent> v;
    for (int s = 0; s < j; ++s) v.push_back(random_tangent(g, h.size(), rng));
    double expect = 0;
    if (pa.count(key)) expect += 3 * pa.at(key)(p, x, v);
    if (pb.count(key)) expect += pb.at(key)(p, x, v);
    CHECK(f(p, x, v) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("S^3: pairing with sigma pulls back the Cartan form") {
  std::mt19937_64 rng(4);
  MatrixGroup g(Family::SU, 2);
  auto k = builtin_threefold(ThreefoldData::minimal_s3());
  auto om = assemble_omega(basic_trace_form());
  RepSpace h(k, 2);
  GradedForms only{{{0, 3, 1}, *om.find(0, 3, 1)}};
  const std::string sigma = "sigma";
  auto paired = pair(k, only, Chain(BarTuple{2, std::vector<Word>{Word::generator(sigma)}}));
  REQUIRE(paired.count({0, 3, 2}));
  auto lambda = cartan_three_form(basic_trace_form());
  const auto ix = static_cast<std::size_t>(h.index(sigma));
  for (int s = 0; s < 5; ++s) {
    Point p = random_point(g, h.size(), rng);
    std::vector<Tangent> v;
    for (int a = 0; a < 3; ++a) v.push_back(random_tangent(g, h.size(), rng));
    std::vector<Tangent> vs;
    for (const auto& t : v) vs.push_back(Tangent{t[ix]});
    CHECK(paired.at({0, 3, 2})(p, Mat(), v) == doctest::Approx(lambda(Point{p[ix]}, Mat(), vs)).epsilon(1e-12));
  }
}

TEST_CASE("differential of the pairing on the genus-1 cycle") {
  std::mt19937_64 rng(5);
  auto k = builtin_surface(1);
  auto c = surface_cycle(k).cycle;
  auto om = assemble_omega(basic_trace_form());
  for (auto grp : {MatrixGroup(Family::SU, 2), MatrixGroup(Family::U, 2)}) {
    auto omega = grp.family() == Family::U ? assemble_omega(chern_polynomial(2)) : om;
    auto rep = differential_identity_check(k, grp, omega.components, 4, c, 4, rng);
    CHECK(rep.worst < 1e-5);
    for (const auto& row : rep.rows) CHECK(row.magnitude < 1e-5);  // D<Omega,c> = 0
    auto fixed = differential_identity_check(k, grp, omega.components, 4, c, 4, rng, false);
    CHECK(fixed.worst < 1e-5);
  }
  // Non-cycle control: the defect is exactly <Omega, dc>.
  Chain broken = c - c.component(2, 0);
  auto rep = differential_identity_check(k, MatrixGroup(Family::SU, 2), om.components, 4, broken, 4, rng);
  CHECK(rep.worst < 1e-5);
  double biggest = 0;
  for (const auto& row : rep.rows) biggest = std::max(biggest, row.boundary);
  CHECK(biggest > 1e-2);
  // Omega = 0.
  auto zero = differential_identity_check(k, MatrixGroup(Family::SU, 2), {}, 4, c, 2, rng);
  CHECK(zero.worst == 0);
}

TEST_CASE("differential of the pairing on pure bar chains") {
  std::mt19937_64 rng(6);
  auto k = testing::torus_set();
  auto kan = kan_loop_group(k);
  auto om = assemble_omega(basic_trace_form());
  MatrixGroup g(Family::SU, 2);
  for (int trial = 0; trial < 3; ++trial) {
    Chain c = testing::random_chain(kan, 2, 0, rng, 2) + testing::random_chain(kan, 3, 0, rng, 2);
    auto rep = differential_identity_check(kan, g, om.components, 4, c, 2, rng, false);
    CHECK(rep.worst < 1e-5);
  }
}

TEST_CASE("wedge products") {
  std::mt19937_64 rng(7);
  MatrixGroup g(Family::SU, 2);
  auto q = basic_trace_form();
  EquivariantForm one{0, 0, 0, [](const Point&, const Mat&, const std::vector<Tangent>&) { return 1.0; }};
  const Mat e = g.basis()[0];
  EquivariantForm theta{1, 0, 1, [q, e](const Point& p, const Mat&, const std::vector<Tangent>& v) {
                          return q({e, ad(p[0], v[0][0])});
                        }};
  EquivariantForm lambda = cartan_three_form(q);
  EquivariantForm mu{1, 2, 0, [q](const Point& p, const Mat& x, const std::vector<Tangent>&) {
                       return q({x, ad_inv(p[0], x)});
                     }};
  auto w1 = wedge(theta, one);
  CHECK(w1.factors == 1);
  Point p = random_point(g, 3, rng);
  Mat x = g.random_algebra(rng);
  std::vector<Tangent> v;
  for (int a = 0; a < 5; ++a) v.push_back(random_tangent(g, 3, rng));
  CHECK(w1({p[0]}, x, {{v[0][0]}}) == doctest::Approx(theta({p[0]}, x, {{v[0][0]}})));
  auto ab = wedge(wedge(theta, mu), lambda);
  auto a_b = wedge(theta, wedge(mu, lambda));
  CHECK(ab.i == 2);
  CHECK(ab.j == 4);
  CHECK(ab.factors == 3);
  CHECK(std::abs(ab(p, x, {v[0], v[1], v[2], v[3]}) - a_b(p, x, {v[0], v[1], v[2], v[3]})) < 1e-8);
  // Alternating in the tangent slots.
  auto tt = wedge(theta, theta);
  Point p2{p[0], p[1]};
  Tangent a{v[0][0], v[0][1]}, b{v[1][0], v[1][1]};
  CHECK(tt(p2, x, {a, b}) == doctest::Approx(-tt(p2, x, {b, a})));
}
