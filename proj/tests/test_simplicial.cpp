#include <random>

#include "doctest.h"
#include "kanform/simplicial.hpp"
#include "support.hpp"

using namespace kanform;
using kanform::testing::synthetic_threefold;

namespace {

Word w(const char* s) { return Word::parse(s); }

}  // namespace

TEST_CASE("degeneracy names") {
  auto g = GeneratorRef::parse("s1s0.x");
  CHECK(g.degeneracies == std::vector<int>{1, 0});
  CHECK(g.base == "x");
  CHECK(g.name() == "s1s0.x");
  CHECK_THROWS_AS(GeneratorRef::parse("s0s1.x"), InputError);
  CHECK_THROWS_AS(GeneratorRef::parse("t0.x"), InputError);
  // s_0 s_0 = s_1 s_0
  CHECK(compose_degeneracy(0, {0}) == std::vector<int>{1, 0});
  CHECK(compose_degeneracy(2, {0}) == std::vector<int>{2, 0});
  // s_0 s_1 s_0 = s_2 s_0 s_0 = s_2 s_1 s_0
  CHECK(compose_degeneracy(0, {1, 0}) == std::vector<int>{2, 1, 0});
}

TEST_CASE("surface group faces") {
  auto k = builtin_surface(1);
  CHECK(k.face(1, 1, w("r")).is_identity());
  CHECK(k.face(1, 0, w("r")) == w("x1*y1*x1^-1*y1^-1"));
  CHECK(k.face(1, 0, Word{}).is_identity());
  CHECK(k.face(1, 0, w("s0.x1")) == w("x1"));
  CHECK(k.face(1, 1, w("s0.x1")) == w("x1"));
  CHECK_THROWS_AS(k.face(1, 2, w("r")), InputError);
  CHECK(k.identity_violations().empty());

  auto k0 = builtin_surface(0);
  CHECK(k0.generators(0).empty());
  CHECK(k0.face(1, 0, w("r")).is_identity());

  auto k2 = builtin_surface(2);
  CHECK(k2.face(1, 0, w("r")) == w("x1*y1*x1^-1*y1^-1*x2*y2*x2^-1*y2^-1"));
  CHECK(exponent_sums(k2.face(1, 0, w("r"))).empty());
  CHECK(k2.identity_violations().empty());
}

TEST_CASE("generator enumeration and degenerate images") {
  auto k = builtin_surface(1);
  // K_2 of the surface: s1s0 on x1,y1 and s0, s1 on r.
  auto g2 = k.all_generators(2);
  CHECK(g2 == std::vector<std::string>{"s0.r", "s1.r", "s1s0.x1", "s1s0.y1"});
  CHECK(k.degree_of("s1s0.x1") == 2);
  CHECK_THROWS_AS(k.degree_of("s2.r"), InputError);
  CHECK(k.in_degeneracy_image(2, 0, w("s0.r*s1s0.x1")));
  CHECK(k.in_degeneracy_image(2, 1, w("s1.r*s1s0.x1")));
  CHECK_FALSE(k.in_degeneracy_image(2, 0, w("s0.r*s1.r")));
  CHECK(k.degeneracy(1, 0, w("r*s0.x1")) == w("s0.r*s1s0.x1"));
}

TEST_CASE("face maps are homomorphisms") {
  auto k = builtin_surface(2);
  std::mt19937_64 rng(11);
  for (int q = 1; q <= 3; ++q) {
    auto gens = k.all_generators(q);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1), len(0, 8);
    std::bernoulli_distribution sign;
    auto random_word = [&] {
      std::vector<Letter> ls(len(rng));
      for (auto& l : ls) l = {gens[pick(rng)], sign(rng) ? 1 : -1};
      return Word::reduce(ls);
    };
    for (int t = 0; t < 100; ++t) {
      Word a = random_word(), b = random_word();
      for (int i = 0; i <= q; ++i)
        CHECK(k.face(q, i, a * b) == k.face(q, i, a) * k.face(q, i, b));
    }
  }
}

TEST_CASE("Kan loop group of small simplicial sets") {
  auto pt = kan_loop_group(ReducedSimplicialSet::point());
  for (int q = 0; q <= 4; ++q) CHECK(pt.all_generators(q).empty());

  auto s1 = kan_loop_group(ReducedSimplicialSet::circle());
  CHECK(s1.generators(0).size() == 1);
  for (int q = 1; q <= 4; ++q) CHECK(s1.generators(q).empty());
  CHECK(s1.all_generators(2).size() == 1);
  CHECK(s1.identity_violations().empty());

  auto s2 = kan_loop_group(ReducedSimplicialSet::sphere(2));
  CHECK(s2.generators(0).empty());
  CHECK(s2.generators(1).size() == 1);
  CHECK(s2.face_of_generator("e2", 0).is_identity());
  CHECK(s2.identity_violations().empty());

  auto s3 = kan_loop_group(ReducedSimplicialSet::sphere(3));
  CHECK(s3.generators(2).size() == 1);
  CHECK(s3.identity_violations().empty());

  ReducedSimplicialSet bad;
  bad.simplices = {{"v", "w"}};
  CHECK_THROWS_AS(kan_loop_group(bad), InputError);
}

TEST_CASE("Kan loop group of the two-triangle torus") {
  ReducedSimplicialSet t;
  t.simplices = {{"v"}, {"a", "b", "c"}, {"U", "L"}};
  for (auto e : {"a", "b", "c"}) t.faces[e] = {"v", "v"};
  t.faces["U"] = {"b", "c", "a"};
  t.faces["L"] = {"a", "c", "b"};
  auto k = kan_loop_group(t);
  CHECK(k.face_of_generator("U", 0) == w("c*b^-1"));
  CHECK(k.face_of_generator("U", 1) == w("a"));
  CHECK(k.face_of_generator("L", 0) == w("c*a^-1"));
  CHECK(k.identity_violations().empty());
}

TEST_CASE("Kan output passes the identity checker on random 3-dimensional sets") {
  // Random face tables over a small pool; keep those X accepts, then K must
  // satisfy the identities too.
  std::mt19937_64 rng(3);
  std::vector<std::string> one = {"a", "b"};
  std::vector<std::string> two = {"A", "B", "s0.a", "s1.a", "s0.b", "s1.b", "s1s0.v"};
  int accepted = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    ReducedSimplicialSet x;
    x.simplices = {{"v"}, one, {"A", "B"}, {"T"}};
    for (auto& e : one) x.faces[e] = {"v", "v"};
    std::uniform_int_distribution<std::size_t> p1(0, one.size() - 1), p2(0, two.size() - 1);
    for (auto s : {"A", "B"}) x.faces[s] = {one[p1(rng)], one[p1(rng)], one[p1(rng)]};
    x.faces["T"] = {two[p2(rng)], two[p2(rng)], two[p2(rng)], two[p2(rng)]};
    try {
      x.validate();
    } catch (const InputError&) {
      continue;
    }
    ++accepted;
    auto k = kan_loop_group(x);
    CHECK(k.identity_violations().empty());
  }
  CHECK(accepted > 20);
}

TEST_CASE("threefold builtins") {
  auto s3 = builtin_threefold(ThreefoldData::minimal_s3());
  CHECK(s3.generators(2).size() == 1);
  CHECK(s3.face_of_generator("sigma", 0).is_identity());

  auto k = builtin_threefold(synthetic_threefold());
  CHECK(k.face(1, 0, k.face_of_generator("sigma", 0)).is_identity());
  CHECK(k.identity_violations().empty());

  auto bad = synthetic_threefold();
  bad.sigma_faces[0] = w("r");
  CHECK_THROWS_WITH_AS(builtin_threefold(bad), doctest::Contains("identity"), InputError);

  ThreefoldData inconsistent;
  inconsistent.relators = {{"r", Word{}}};
  inconsistent.sigma_faces = {w("r"), Word{}, Word{}};
  CHECK_THROWS_WITH_AS(builtin_threefold(inconsistent), doctest::Contains("inconsistent"),
                       InputError);
}
