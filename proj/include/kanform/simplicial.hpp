#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kanform/words.hpp"

namespace kanform {

/// A free generator of K_q written as s_{j_p} ... s_{j_1} b with b a stored
/// (nondegenerate) generator and j_p > ... > j_1.  Its text name is
/// "s<j_p>s<j_{p-1}>...s<j_1>.b", or just "b" when there are no degeneracies.
struct GeneratorRef {
  std::vector<int> degeneracies;  // outermost first, strictly decreasing
  std::string base;

  static GeneratorRef parse(const std::string& name);
  std::string name() const;
};

/// Prepends s_i to a canonical degeneracy sequence and restores the
/// canonical (strictly decreasing) order via s_i s_j = s_{j+1} s_i, i <= j.
std::vector<int> compose_degeneracy(int i, std::vector<int> ops);

struct Generator {
  std::string name;
  int degree = 0;  // simplicial degree of birth
  std::vector<Word> faces;  // d_0..d_degree, words in K_{degree-1}
};

/// Free simplicial group stored by its nondegenerate generators and their
/// face images; degeneracies are formal and materialized lazily.
class FreeSimplicialGroup {
 public:
  explicit FreeSimplicialGroup(int max_degree = 4);

  /// Registers a nondegenerate generator.  `faces` must have degree+1 words
  /// in K_{degree-1} (empty for degree 0).  Face words are validated
  /// against the generators known so far.
  void add_generator(const std::string& name, int degree, std::vector<Word> faces);

  int max_degree() const { return max_degree_; }
  const std::vector<Generator>& generators(int q) const;
  const Generator& base(const std::string& name) const;
  bool has_base(const std::string& name) const { return index_.count(name) != 0; }

  /// Simplicial degree of a (possibly degenerate) generator name; throws
  /// InputError for unknown names.
  int degree_of(const std::string& name) const;
  bool is_generator(const std::string& name) const;
  bool is_degenerate(const std::string& name) const;
  /// Degree of a word; identity words report `fallback`.
  int degree_of(const Word& w, int fallback) const;

  Word face(int q, int i, const Word& w) const;
  Word degeneracy(int q, int i, const Word& w) const;
  Word face_of_generator(const std::string& name, int i) const;
  /// w lies in the image of s_j : K_{q-1} -> K_q.
  bool in_degeneracy_image(int q, int j, const Word& w) const;

  /// All generators (nondegenerate and degenerate) of K_q.
  std::vector<std::string> all_generators(int q) const;

  /// Violations of d_i d_j = d_{j-1} d_i over every generator up to
  /// max_degree; empty when the identities hold.
  std::vector<std::string> identity_violations() const;

  /// Free-form provenance tag ("surface", "threefold", "kan") and notes
  /// recorded in reports.
  std::string kind;
  std::map<std::string, std::string> notes;

 private:
  Word face_letter(const GeneratorRef& g, int i) const;
  void require_degree(const Word& w, int q, const char* what) const;

  int max_degree_;
  std::vector<std::vector<Generator>> by_degree_;
  std::map<std::string, std::pair<int, std::size_t>> index_;
};

/// Reduced simplicial set given by nondegenerate simplices and face tables.
/// Faces are named simplices, optionally with a degeneracy prefix
/// ("s0.v", "s1s0.v").
struct ReducedSimplicialSet {
  std::vector<std::vector<std::string>> simplices;  // per degree, nondegenerate
  std::map<std::string, std::vector<std::string>> faces;

  int dimension() const { return static_cast<int>(simplices.size()) - 1; }
  int degree_of(const std::string& simplex) const;  // base simplex only
  /// Face of a formal (possibly degenerate) simplex, canonical text form.
  std::string face(const std::string& simplex, int i) const;
  /// Throws InputError on non-reduced input or violated identities.
  void validate() const;

  static ReducedSimplicialSet point();
  static ReducedSimplicialSet circle();
  static ReducedSimplicialSet sphere(int n);  // one vertex, one n-simplex
};

FreeSimplicialGroup kan_loop_group(const ReducedSimplicialSet& x, int max_degree = 4);

/// Generators x1,y1,...,xl,yl in degree 0 and r in degree 1 with
/// d_0 r = prod [x_j, y_j], d_1 r = 1.
FreeSimplicialGroup builtin_surface(int genus, int max_degree = 4);

/// Presentation data of a 3-complex with a single 3-cell.
struct ThreefoldData {
  std::vector<std::string> generators;
  std::vector<std::pair<std::string, Word>> relators;  // name, relator word in F
  std::string sigma_name = "sigma";
  std::vector<Word> sigma_faces;  // d_0, d_1, d_2 of sigma, words in K_1

  /// The single-3-cell sphere: no 1- or 2-cells, all faces trivial.
  static ThreefoldData minimal_s3();
};

FreeSimplicialGroup builtin_threefold(const ThreefoldData& data, int max_degree = 4);

/// Product of commutators [x1,y1]...[xl,yl].
Word surface_relator(int genus);

}  // namespace kanform
