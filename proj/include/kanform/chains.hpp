#pragma once

#include <map>
#include <string>
#include <vector>

#include "kanform/intmatrix.hpp"
#include "kanform/simplicial.hpp"

namespace kanform {

/// [w_1|...|w_k] with entries in K_q.
struct BarTuple {
  int q = 0;
  std::vector<Word> entries;

  int k() const { return static_cast<int>(entries.size()); }
  std::string str() const;
  auto operator<=>(const BarTuple&) const = default;
  bool operator==(const BarTuple&) const = default;
};

/// Sparse integer combination of bar tuples.  One type serves for single
/// bidegree components and for total chains; tuples with an identity entry
/// are never stored.
class Chain {
 public:
  Chain() = default;
  explicit Chain(BarTuple t, Integer coeff = 1) { add(std::move(t), coeff); }

  void add(BarTuple t, const Integer& coeff);
  const std::map<BarTuple, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// The (k,q) bidegree part.
  Chain component(int k, int q) const;
  /// Highest k+q over the support, or -1 for the zero chain.
  int max_total_degree() const;

  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Integer& s, const Chain& c);
  Chain operator-() const { return Integer(-1) * *this; }
  bool operator==(const Chain&) const = default;

  std::string str() const;

 private:
  std::map<BarTuple, Integer> terms_;
};

/// Reduced normalized bar differential; zero on k = 1.
Chain boundary_bar(const Chain& c);
/// Alternating sum of entrywise face maps; zero on q = 0.
Chain boundary_simp(const FreeSimplicialGroup& k, const Chain& c);

/// All entries lie in the image of one common s_j.
bool jointly_degenerate(const FreeSimplicialGroup& k, const BarTuple& t);
/// Projects jointly degenerate tuples to zero.
Chain sharp_normalize(const FreeSimplicialGroup& k, const Chain& c);

/// d = d_bar + (-1)^k d_simp, followed by normalization.
Chain total_boundary(const FreeSimplicialGroup& k, const Chain& c);

/// Cellular chain complex of the CW-complex Y modelled by K: one 0-cell
/// "o" and a (q+1)-cell for each nondegenerate generator of K_q.
struct CellComplex {
  std::vector<std::vector<std::string>> cells;  // per degree
  std::map<std::string, std::map<std::string, Integer>> boundary;

  int dimension() const { return static_cast<int>(cells.size()) - 1; }
  int degree_of(const std::string& cell) const;  // -1 when unknown

  static CellComplex from_group(const FreeSimplicialGroup& k);
};

/// degree -> cell -> coefficient, zero entries omitted.
using CellularChain = std::map<int, std::map<std::string, Integer>>;

void add_cell(CellularChain& c, int degree, const std::string& cell, const Integer& coeff);
CellularChain cellular_boundary(const CellComplex& y, const CellularChain& c);

/// Keeps the bar-degree-1 column and abelianizes onto nondegenerate
/// generators, landing in C_{q+1}(Y).  Throws InputError when a generator
/// is not a cell of Y.
CellularChain retract_to_cellular(const FreeSimplicialGroup& k, const Chain& c,
                                  const CellComplex& y);

struct HomologyGroup {
  int degree = 0;
  long rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
};

std::vector<HomologyGroup> cellular_homology(const CellComplex& y);

}  // namespace kanform
