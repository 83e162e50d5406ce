#include "kanform/chains.hpp"

#include <algorithm>
#include <sstream>

namespace kanform {

std::string BarTuple::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += "|";
    out += entries[i].str();
  }
  return out + "]_" + std::to_string(q);
}

void Chain::add(BarTuple t, const Integer& coeff) {
  if (coeff == 0 || t.entries.empty()) return;
  for (const auto& e : t.entries)
    if (e.is_identity()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(t), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Chain Chain::component(int k, int q) const {
  Chain out;
  for (const auto& [t, n] : terms_)
    if (t.k() == k && t.q == q) out.terms_.emplace(t, n);
  return out;
}

int Chain::max_total_degree() const {
  int d = -1;
  for (const auto& [t, n] : terms_) d = std::max(d, t.k() + t.q);
  return d;
}

Chain& Chain::operator+=(const Chain& o) {
  for (const auto& [t, n] : o.terms_) add(t, n);
  return *this;
}

Chain& Chain::operator-=(const Chain& o) {
  for (const auto& [t, n] : o.terms_) add(t, -n);
  return *this;
}

Chain operator*(const Integer& s, const Chain& c) {
  Chain out;
  if (s == 0) return out;
  for (const auto& [t, n] : c.terms_) out.terms_.emplace(t, s * n);
  return out;
}

std::string Chain::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, n] : terms_) {
    if (n < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    Integer a = abs(n);
    if (a != 1) os << a << "*";
    os << t.str();
    first = false;
  }
  return os.str();
}

Chain boundary_bar(const Chain& c) {
  Chain out;
  for (const auto& [t, n] : c.terms()) {
    const int k = t.k();
    if (k < 2) continue;
    const auto& e = t.entries;
    out.add({t.q, {e.begin() + 1, e.end()}}, n);
    for (int i = 1; i < k; ++i) {
      std::vector<Word> merged;
      merged.reserve(static_cast<std::size_t>(k) - 1);
      for (int a = 0; a < k; ++a) {
        if (a == i) {
          merged.back() *= e[static_cast<std::size_t>(a)];
        } else {
          merged.push_back(e[static_cast<std::size_t>(a)]);
        }
      }
      out.add({t.q, std::move(merged)}, (i % 2 ? -n : n));
    }
    out.add({t.q, {e.begin(), e.end() - 1}}, (k % 2 ? -n : n));
  }
  return out;
}

Chain boundary_simp(const FreeSimplicialGroup& k, const Chain& c) {
  Chain out;
  for (const auto& [t, n] : c.terms()) {
    if (t.q == 0) continue;
    for (int p = 0; p <= t.q; ++p) {
      BarTuple f{t.q - 1, {}};
      f.entries.reserve(t.entries.size());
      for (const auto& w : t.entries) f.entries.push_back(k.face(t.q, p, w));
      out.add(std::move(f), (p % 2 ? -n : n));
    }
  }
  return out;
}

bool jointly_degenerate(const FreeSimplicialGroup& k, const BarTuple& t) {
  for (int j = 0; j < t.q; ++j) {
    bool all = std::all_of(t.entries.begin(), t.entries.end(),
                           [&](const Word& w) { return k.in_degeneracy_image(t.q, j, w); });
    if (all) return true;
  }
  return false;
}

Chain sharp_normalize(const FreeSimplicialGroup& k, const Chain& c) {
  Chain out;
  for (const auto& [t, n] : c.terms())
    if (!jointly_degenerate(k, t)) out.add(t, n);
  return out;
}

Chain total_boundary(const FreeSimplicialGroup& k, const Chain& c) {
  Chain out = boundary_bar(c);
  for (const auto& [t, n] : c.terms()) {
    if (t.q == 0) continue;
    Chain s = boundary_simp(k, Chain(t, n));
    if (t.k() % 2) out -= s; else out += s;
  }
  return sharp_normalize(k, out);
}

// ---------------------------------------------------------------------------

int CellComplex::degree_of(const std::string& cell) const {
  for (std::size_t d = 0; d < cells.size(); ++d)
    if (std::find(cells[d].begin(), cells[d].end(), cell) != cells[d].end())
      return static_cast<int>(d);
  return -1;
}

void add_cell(CellularChain& c, int degree, const std::string& cell, const Integer& coeff) {
  if (coeff == 0) return;
  auto& m = c[degree];
  Integer& e = m[cell];
  e += coeff;
  if (e == 0) m.erase(cell);
  if (m.empty()) c.erase(degree);
}

namespace {

// Abelianization restricted to nondegenerate letters.
void add_epsilon(CellularChain& out, const FreeSimplicialGroup& k, int q, const Word& w,
                 const Integer& n) {
  for (const auto& l : w.letters())
    if (!k.is_degenerate(l.gen)) add_cell(out, q + 1, l.gen, n * l.exp);
}

}  // namespace

CellComplex CellComplex::from_group(const FreeSimplicialGroup& k) {
  CellComplex y;
  y.cells.push_back({"o"});
  int top = 0;
  for (int q = 0; q <= k.max_degree(); ++q)
    if (!k.generators(q).empty()) top = q + 1;
  for (int d = 1; d <= top; ++d) {
    y.cells.emplace_back();
    for (const auto& g : k.generators(d - 1)) {
      y.cells.back().push_back(g.name);
      if (d == 1) continue;
      CellularChain b;
      for (int i = 0; i < d; ++i)
        add_epsilon(b, k, d - 2, g.faces[static_cast<std::size_t>(i)], i % 2 ? 1 : -1);
      if (b.count(d - 1)) y.boundary[g.name] = b.at(d - 1);
    }
  }
  return y;
}

CellularChain cellular_boundary(const CellComplex& y, const CellularChain& c) {
  CellularChain out;
  for (const auto& [d, m] : c) {
    for (const auto& [cell, n] : m) {
      auto it = y.boundary.find(cell);
      if (it == y.boundary.end()) continue;
      for (const auto& [f, e] : it->second) add_cell(out, d - 1, f, n * e);
    }
  }
  return out;
}

CellularChain retract_to_cellular(const FreeSimplicialGroup& k, const Chain& c,
                                  const CellComplex& y) {
  CellularChain out;
  for (const auto& [t, n] : c.terms()) {
    if (t.k() != 1) continue;
    add_epsilon(out, k, t.q, t.entries[0], n);
  }
  for (const auto& [d, m] : out)
    for (const auto& [cell, n] : m)
      if (y.degree_of(cell) != d)
        throw InputError("generator '" + cell + "' is not a " + std::to_string(d) +
                         "-cell of the complex");
  return out;
}

std::vector<HomologyGroup> cellular_homology(const CellComplex& y) {
  const int dim = y.dimension();
  // ranks[d] = rank of the boundary C_d -> C_{d-1}; invariants likewise.
  std::vector<long> ranks(static_cast<std::size_t>(dim) + 2, 0);
  std::vector<std::vector<Integer>> inv(static_cast<std::size_t>(dim) + 2);
  for (int d = 1; d <= dim; ++d) {
    const auto& src = y.cells[static_cast<std::size_t>(d)];
    const auto& dst = y.cells[static_cast<std::size_t>(d - 1)];
    std::vector<std::vector<Integer>> m(dst.size(), std::vector<Integer>(src.size(), 0));
    for (std::size_t j = 0; j < src.size(); ++j) {
      auto it = y.boundary.find(src[j]);
      if (it == y.boundary.end()) continue;
      for (const auto& [f, e] : it->second) {
        auto pos = std::find(dst.begin(), dst.end(), f);
        if (pos == dst.end()) throw InputError("boundary of '" + src[j] + "' leaves the complex");
        m[static_cast<std::size_t>(pos - dst.begin())][j] += e;
      }
    }
    auto s = smith_invariants(std::move(m));
    ranks[static_cast<std::size_t>(d)] = static_cast<long>(s.size());
    inv[static_cast<std::size_t>(d)] = std::move(s);
  }
  std::vector<HomologyGroup> out;
  for (int d = 0; d <= dim; ++d) {
    HomologyGroup h;
    h.degree = d;
    h.rank = static_cast<long>(y.cells[static_cast<std::size_t>(d)].size()) -
             ranks[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d) + 1];
    for (const auto& v : inv[static_cast<std::size_t>(d) + 1])
      if (v > 1) h.torsion.push_back(v);
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace kanform
