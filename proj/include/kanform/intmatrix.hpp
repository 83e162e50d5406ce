#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace kanform {

using Integer = boost::multiprecision::cpp_int;

/// Column of a sparse integer matrix: row index -> nonzero entry.
using SparseColumn = std::map<std::size_t, Integer>;

struct SparseIntMatrix {
  std::size_t rows = 0;
  std::vector<SparseColumn> cols;
};

/// Finds some integer x with A x = b, or nullopt when none exists.  Uses a
/// column Hermite reduction with a tracked unimodular transform, so the
/// answer is deterministic for a fixed column order.
std::optional<SparseColumn> solve_integer(const SparseIntMatrix& a, const SparseColumn& b);

/// Nonzero diagonal entries of the Smith normal form (positive, each
/// dividing the next).  Input is dense, row-major.
std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> m);

}  // namespace kanform
