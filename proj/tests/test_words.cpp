#include <random>

#include "doctest.h"
#include "kanform/words.hpp"

using namespace kanform;

namespace {

// Independent oracle: repeatedly delete the first cancelling pair.
std::vector<Letter> naive_reduce(std::vector<Letter> v) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i].gen == v[i + 1].gen && v[i].exp == -v[i + 1].exp) {
        v.erase(v.begin() + static_cast<long>(i), v.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return v;
}

std::vector<Letter> random_letters(std::mt19937_64& rng, std::size_t max_len) {
  static const char* gens[] = {"x", "y", "z"};
  std::uniform_int_distribution<std::size_t> len(0, max_len), g(0, 2);
  std::bernoulli_distribution sign;
  std::vector<Letter> out(len(rng));
  for (auto& l : out) l = {gens[g(rng)], sign(rng) ? 1 : -1};
  return out;
}

}  // namespace

TEST_CASE("reduce examples") {
  CHECK(Word::reduce({{"x", 1}, {"x", -1}}).is_identity());
  CHECK(Word::reduce({{"x", 1}, {"y", 1}, {"y", -1}, {"x", 1}}).str() == "x*x");
  auto c = Word::reduce({{"x", 1}, {"y", 1}, {"x", -1}, {"y", -1}});
  CHECK(c.length() == 4);
  CHECK(c.str() == "x*y*x^-1*y^-1");
}

TEST_CASE("multiply and invert") {
  auto x = Word::generator("x"), y = Word::generator("y");
  CHECK((x * x.inverse()).is_identity());
  CHECK((x * y).inverse().str() == "y^-1*x^-1");
  auto xy = Word::parse("x*y*x^-1*y^-1"), yx = Word::parse("y*x*y^-1*x^-1");
  // [x,y][y,x] = 1 in any group.
  CHECK((xy * yx).is_identity());
}

TEST_CASE("exponent sums") {
  CHECK(exponent_sums(Word{}).empty());
  CHECK(exponent_sums(Word::parse("x*y*x^-1*y^-1")).empty());
  auto v = exponent_sums(Word::parse("x*x*y^-1"));
  CHECK(v.at("x") == 2);
  CHECK(v.at("y") == -1);
}

TEST_CASE("text syntax") {
  CHECK(Word::parse("1").is_identity());
  CHECK(Word::parse(" x1 * y1^-1 ").str() == "x1*y1^-1");
  CHECK_THROWS_AS(Word::parse(""), InputError);
  CHECK_THROWS_AS(Word::parse("x**y"), InputError);
  CHECK_THROWS_AS(Word::parse("x^2"), InputError);
  try {
    Word::parse("x*y^3");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("y^3") != std::string::npos);
  }
  CHECK_THROWS_AS(Word::generator("a b"), InputError);
  CHECK_THROWS_AS(reduce_checked({{"q", 1}}, [](std::string_view s) { return s == "x"; }),
                  InputError);
}

TEST_CASE("randomized group laws") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    auto la = random_letters(rng, 64), lb = random_letters(rng, 64),
         lc = random_letters(rng, 64);
    Word a = Word::reduce(la), b = Word::reduce(lb), c = Word::reduce(lc);
    CHECK(a.letters() == naive_reduce(la));
    CHECK(Word::reduce(a.letters()) == a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a.inverse().inverse() == a);
    CHECK((a * a.inverse()).is_identity());
    auto s = exponent_sums(a);
    s += exponent_sums(b);
    CHECK(exponent_sums(a * b) == s);
    CHECK(Word::parse(a.str()) == a);
  }
}
