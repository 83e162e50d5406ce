#include "kanform/intmatrix.hpp"

#include <algorithm>
#include <utility>

namespace kanform {

namespace {

void axpy(SparseColumn& y, const Integer& a, const SparseColumn& x) {
  if (a == 0) return;
  for (const auto& [i, v] : x) {
    Integer& e = y[i];
    e += a * v;
    if (e == 0) y.erase(i);
  }
}

Integer entry(const SparseColumn& c, std::size_t i) {
  auto it = c.find(i);
  return it == c.end() ? Integer(0) : it->second;
}

}  // namespace

std::optional<SparseColumn> solve_integer(const SparseIntMatrix& a, const SparseColumn& b) {
  const std::size_t n = a.cols.size();
  std::vector<SparseColumn> h = a.cols;
  std::vector<SparseColumn> u(n);
  for (std::size_t j = 0; j < n; ++j) u[j][j] = 1;

  std::vector<std::size_t> active(n);
  for (std::size_t j = 0; j < n; ++j) active[j] = j;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)

  for (std::size_t row = 0; row < a.rows && !active.empty(); ++row) {
    for (;;) {
      std::vector<std::size_t> nz;
      for (std::size_t j : active)
        if (h[j].count(row)) nz.push_back(j);
      if (nz.empty()) break;
      auto p = *std::min_element(nz.begin(), nz.end(), [&](std::size_t x, std::size_t y) {
        Integer ax = abs(h[x].at(row)), ay = abs(h[y].at(row));
        return ax < ay || (ax == ay && x < y);
      });
      if (nz.size() == 1) {
        pivots.emplace_back(row, p);
        active.erase(std::find(active.begin(), active.end(), p));
        break;
      }
      Integer pv = h[p].at(row);
      for (std::size_t j : nz) {
        if (j == p) continue;
        Integer qt = h[j].at(row) / pv;
        axpy(h[j], -qt, h[p]);
        axpy(u[j], -qt, u[p]);
      }
    }
  }

  SparseColumn residual = b, y;
  for (auto [row, col] : pivots) {
    Integer r = entry(residual, row);
    if (r == 0) continue;
    Integer pv = h[col].at(row);
    if (r % pv != 0) return std::nullopt;
    Integer coef = r / pv;
    y[col] = coef;
    axpy(residual, -coef, h[col]);
  }
  if (!residual.empty()) return std::nullopt;
  SparseColumn x;
  for (const auto& [col, coef] : y) axpy(x, coef, u[col]);
  return x;
}

std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> m) {
  std::vector<Integer> out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the remaining block as pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& r : m) std::swap(r[t], r[pc]);
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      Integer qt = m[i][t] / m[t][t];
      if (qt != 0)
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= qt * m[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      Integer qt = m[t][j] / m[t][t];
      if (qt != 0)
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= qt * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    // Divisibility: fold any entry not divisible by the pivot into row t.
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
          divides = false;
          break;
        }
    if (!divides) continue;
    out.push_back(abs(m[t][t]));
    ++t;
  }
  return out;
}

}  // namespace kanform
