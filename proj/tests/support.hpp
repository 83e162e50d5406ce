#pragma once

#include <random>

#include "kanform/chains.hpp"

namespace kanform::testing {

inline Word random_word(const FreeSimplicialGroup& k, int q, std::mt19937_64& rng,
                        std::size_t max_len = 4) {
  auto gens = k.all_generators(q);
  if (gens.empty()) return {};
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1), len(1, max_len);
  std::bernoulli_distribution sign;
  std::vector<Letter> ls(len(rng));
  for (auto& l : ls) l = {gens[pick(rng)], sign(rng) ? 1 : -1};
  return Word::reduce(ls);
}

/// Random sharp-normalized chain in bidegree (k,q) with up to `terms` tuples.
inline Chain random_chain(const FreeSimplicialGroup& g, int k, int q, std::mt19937_64& rng,
                          int terms = 3) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Chain c;
  for (int t = 0; t < terms; ++t) {
    BarTuple tup{q, {}};
    for (int i = 0; i < k; ++i) tup.entries.push_back(random_word(g, q, rng));
    c.add(tup, coef(rng));
  }
  return sharp_normalize(g, c);
}

/// Two-triangle torus as a reduced simplicial set.
inline ReducedSimplicialSet torus_set() {
  ReducedSimplicialSet t;
  t.simplices = {{"v"}, {"a", "b", "c"}, {"U", "L"}};
  for (auto e : {"a", "b", "c"}) t.faces[e] = {"v", "v"};
  t.faces["U"] = {"b", "c", "a"};
  t.faces["L"] = {"a", "c", "b"};
  return t;
}

/// Generators x,y, relator r = [x,y], and sigma with
/// d_0 sigma = (s0.R) r (s0.R)^{-1} r^{-1}, the other faces trivial.
inline ThreefoldData synthetic_threefold() {
  ThreefoldData d;
  d.generators = {"x", "y"};
  d.relators = {{"r", Word::parse("x*y*x^-1*y^-1")}};
  d.sigma_faces = {
      Word::parse("s0.x*s0.y*s0.x^-1*s0.y^-1*r*s0.y*s0.x*s0.y^-1*s0.x^-1*r^-1"), Word{},
      Word{}};
  return d;
}

}  // namespace kanform::testing
