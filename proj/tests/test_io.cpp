#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "kanform/io.hpp"
#include "support.hpp"

using namespace kanform;
using namespace kanform::testing;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("groups survive a JSON round trip") {
  std::vector<FreeSimplicialGroup> groups;
  groups.push_back(builtin_surface(2));
  groups.push_back(builtin_threefold(ThreefoldData::minimal_s3()));
  groups.push_back(builtin_threefold(synthetic_threefold()));
  groups.push_back(kan_loop_group(torus_set()));
  for (const auto& k : groups) {
    json j = group_to_json(k);
    CHECK(j.at("schema_version") == kSchemaVersion);
    CHECK(j.at("identity_check").at("violations").empty());
    FreeSimplicialGroup back = group_from_json(j);
    CHECK(back.kind == k.kind);
    CHECK(group_to_json(back) == j);
  }
  json s2 = group_to_json(group_from_json(json{{"kind", "surface"}, {"genus", 2}}));
  CHECK(s2.at("generator_counts").at("0") == 4);
  CHECK(s2.at("generator_counts").at("1") == 1);
}

TEST_CASE("complex descriptions of every kind") {
  auto s3 = group_from_json(json{{"kind", "threefold"}, {"minimal_s3", true}});
  CHECK(threefold_cycle(s3).cycle.str() == "[sigma]_2");

  json synth = {{"kind", "threefold"},
                {"generators", {"x", "y"}},
                {"relators", {{{"name", "r"}, {"word", "x*y*x^-1*y^-1"}}}},
                {"sigma_faces",
                 {"s0.x*s0.y*s0.x^-1*s0.y^-1*r*s0.y*s0.x*s0.y^-1*s0.x^-1*r^-1", "1", "1"}}};
  CHECK(group_to_json(group_from_json(synth)) ==
        group_to_json(builtin_threefold(synthetic_threefold())));

  auto one = group_from_json(
      json{{"kind", "one_relator"}, {"generators", {"a", "b"}}, {"relator", "a*b*a^-1*b^-1"}});
  CHECK(one.generators(0).size() == 2);

  json circle = {{"kind", "simplicial_set"},
                 {"simplices", {{"v"}, {"e"}}},
                 {"faces", {{"e", {"v", "v"}}}}};
  CHECK(group_from_json(circle).generators(0).size() == 1);
}

TEST_CASE("malformed complexes are reported with their location") {
  json bad_word = {{"kind", "one_relator"}, {"generators", {"x", "y"}}, {"relator", "x*y*)"}};
  CHECK(error_of([&] { group_from_json(bad_word); }).find("')'") != std::string::npos);
  json bad_power = {{"kind", "one_relator"}, {"generators", {"x"}}, {"relator", "x^2"}};
  CHECK(error_of([&] { group_from_json(bad_power); }).find("'x^2'") != std::string::npos);

  json bad_sigma = {{"kind", "threefold"},
                    {"generators", {"x"}},
                    {"relators", {{{"name", "r"}, {"word", "x*x^-1"}}}},
                    {"sigma_faces", {"s0.x", "1", "1"}}};
  CHECK_THROWS_AS(group_from_json(bad_sigma), InputError);

  json listed = group_to_json(builtin_threefold(synthetic_threefold()));
  REQUIRE(listed["generators"][3]["name"] == "sigma");
  listed["generators"][3]["faces"][1] = "r";
  CHECK(error_of([&] { group_from_json(listed); }).find("identity") != std::string::npos);

  CHECK_THROWS_AS(group_from_json(json{{"kind", "torus"}}), InputError);
  CHECK_THROWS_AS(group_from_json(json{{"genus", 1}}), InputError);
  CHECK_THROWS_AS(group_from_json(json{{"kind", "free"}, {"generators", {{{"name", "x"}}, 3}}}),
                  InputError);
}

TEST_CASE("chains and cycles round trip") {
  std::mt19937_64 rng(41);
  auto k = builtin_threefold(synthetic_threefold());
  for (int trial = 0; trial < 20; ++trial) {
    Chain c = random_chain(k, 2, 1, rng) + random_chain(k, 1, 2, rng);
    CHECK(chain_from_json(chain_to_json(c)) == c);
  }
  Chain big(BarTuple{0, {Word::parse("x")}}, Integer("123456789012345678901234567890"));
  CHECK(chain_from_json(chain_to_json(big)) == big);

  auto s1 = builtin_surface(1);
  json cj = cycle_to_json(s1, surface_cycle(s1));
  CHECK(cj.at("boundary_zero") == true);
  CHECK(cj.at("components").contains("c_1,1"));
  CHECK(cj.at("components").contains("c_2,0"));
  CHECK(cj.at("retraction").at("2").size() == 1);
  CHECK(total_boundary(s1, chain_from_json(cj.at("cycle"))).is_zero());

  json bad = chain_to_json(big);
  bad["terms"][0]["coeff"] = "twelve";
  CHECK_THROWS_AS(chain_from_json(bad), InputError);
}

TEST_CASE("polynomial and group descriptors") {
  std::mt19937_64 rng(42);
  MatrixGroup g(Family::SU, 2);
  Mat a = g.random_algebra(rng), b = g.random_algebra(rng);
  auto basic = basic_trace_form();
  CHECK(polynomial_from_descriptor("basic")({a, b}) == doctest::Approx(basic({a, b})));
  CHECK(polynomial_from_descriptor(R"({"kind":"trace_form","normalization":"basic"})")({a, b}) ==
        doctest::Approx(basic({a, b})));
  CHECK(polynomial_from_descriptor("trace:2")({a, b}) ==
        doctest::Approx(2 * (a * b).trace().real()));
  CHECK(polynomial_from_descriptor(R"({"kind":"chern","r":2})").degree == 2);
  CHECK(polynomial_from_string("chern:3").degree == 3);
  CHECK_THROWS_AS(polynomial_from_string("chern:0"), InputError);
  CHECK_THROWS_AS(polynomial_from_string("trace:abc"), InputError);
  CHECK_THROWS_AS(polynomial_from_string("pfaffian"), InputError);
  CHECK_THROWS_AS(polynomial_from_descriptor("{\"kind\":"), InputError);

  CHECK(group_from_descriptor(R"({"family":"SU","n":2})").name() == "SU2");
  CHECK(group_from_descriptor("U3").name() == "U3");
  CHECK_THROWS_AS(group_from_descriptor("Sp2"), InputError);
}

TEST_CASE("plot descriptors") {
  MatrixGroup g(Family::SU, 2);
  auto s3 = builtin_threefold(ThreefoldData::minimal_s3());
  auto sweep = plot_from_json(json{{"family", "s3_sweep"}, {"degree", 1}}, s3, g);
  CHECK(sweep.family == "s3_sweep");
  CHECK(sweep.plot.domain.dim == 4);
  CHECK(sweep.plot.equivariant);
  auto alt = plot_from_json(json{{"degrees", {{"2", "s3_sweep"}}}, {"params", {{"degree", -1}}}}, s3, g);
  CHECK(alt.family == "s3_sweep");

  auto s1 = builtin_surface(1);
  auto c = plot_from_json(
      json{{"family", "constant"}, {"domain", {{"kind", "box"}, {"dim", 2}, {"bounds", {{0, 1}, {0, 1}}}}}},
      s1, g);
  CHECK(c.plot.domain.dim == 2);
  std::mt19937_64 rng(43);
  CHECK(c.field({0.5, 0.5}, g.random_algebra(rng)).size() == 2);

  CHECK_THROWS_AS(plot_from_json(json{{"family", "s3_sweep"}}, s1, g), InputError);
  CHECK_THROWS_AS(plot_from_json(json{{"family", "spiral"}}, s3, g), InputError);
  CHECK_THROWS_AS(plot_from_json(json{{"degrees", {{"1", "constant"}, {"2", "s3_sweep"}}}}, s3, g),
                  InputError);

  LoopSpec l = loop_from_json(json{{"base", {0, 0}}, {"direction", {1, 0}}});
  CHECK(l.points == 64);
  CHECK(l.closed);
  CHECK_THROWS_AS(loop_from_json(json{{"base", {0}}, {"direction", {1, 0}}}), InputError);
}

TEST_CASE("files are written atomically and read back") {
  auto dir = std::filesystem::temp_directory_path() / "kanform_io_test";
  std::filesystem::remove_all(dir);
  std::string path = (dir / "sub" / "x.json").string();
  write_json(path, json{{"a", 1}});
  CHECK(read_json(path).at("a") == 1);
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  CHECK_THROWS_AS(read_json((dir / "missing.json").string()), InputError);
  std::ofstream(dir / "broken.json") << "{\"a\": ";
  CHECK_THROWS_AS(read_json((dir / "broken.json").string()), InputError);
  std::filesystem::remove_all(dir);
}
