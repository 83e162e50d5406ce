#include "kanform/cyclelift.hpp"

#include <set>
#include <sstream>

namespace kanform {

std::string to_string(LiftMethod m) {
  switch (m) {
    case LiftMethod::telescoping: return "telescoping";
    case LiftMethod::fox: return "fox";
    case LiftMethod::linear: return "linear";
  }
  return "?";
}

LiftMethod lift_method_from_string(const std::string& s) {
  if (s == "telescoping") return LiftMethod::telescoping;
  if (s == "fox") return LiftMethod::fox;
  if (s == "linear") return LiftMethod::linear;
  throw InputError("unknown lift method '" + s + "'");
}

namespace {

std::string show(const ExponentVector& v) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [g, e] : v) {
    os << (first ? "" : ", ") << g << ":" << e;
    first = false;
  }
  os << "}";
  return os.str();
}

Word prefix(const Word& w, std::size_t p) {
  return Word::reduce({w.letters().begin(), w.letters().begin() + static_cast<long>(p)});
}

Word suffix(const Word& w, std::size_t p) {
  return Word::reduce({w.letters().begin() + static_cast<long>(p), w.letters().end()});
}

// ---------------------------------------------------------------------------
// Telescoping lift in bar degree 1:
//   [a w'] = [a] + [w'] - d[a|w'],  [g^-1] = -[g] + d[g|g^-1].

Chain telescope(const Chain& b) {
  Chain z;
  for (const auto& [t, n] : b.terms()) {
    const Word& w = t.entries[0];
    for (std::size_t p = 0; p < w.length(); ++p) {
      const Letter& a = w.letters()[p];
      Word rest = suffix(w, p + 1);
      z.add({t.q, {Word::reduce({a}), rest}}, -n);
      if (a.exp < 0) {
        Word g = Word::reduce({{a.gen, 1}});
        z.add({t.q, {g, g.inverse()}}, n);
      }
    }
  }
  return z;
}

// ---------------------------------------------------------------------------
// Contracting homotopy on the bar resolution of a free group.  Elements of
// the resolution carry a left group coefficient.  H_1 comes from Fox
// derivatives, and H_k(e) = -s(H_{k-1}(d e)) with s(g[..]) = [g|..].

using Resolved = std::map<std::pair<Word, BarTuple>, Integer>;

void radd(Resolved& r, const Word& g, BarTuple t, const Integer& n) {
  if (n == 0) return;
  for (const auto& e : t.entries)
    if (e.is_identity()) return;
  auto key = std::make_pair(g, std::move(t));
  Integer& v = r[key];
  v += n;
  if (v == 0) r.erase(key);
}

// Bar resolution differential on a basis element 1[w_1|...|w_k], k >= 2.
Resolved resolution_boundary(const BarTuple& t) {
  Resolved out;
  const auto& e = t.entries;
  const std::size_t k = e.size();
  radd(out, e[0], {t.q, {e.begin() + 1, e.end()}}, 1);
  for (std::size_t i = 1; i < k; ++i) {
    std::vector<Word> merged(e.begin(), e.begin() + static_cast<long>(i));
    merged.back() *= e[i];
    merged.insert(merged.end(), e.begin() + static_cast<long>(i) + 1, e.end());
    radd(out, Word{}, {t.q, std::move(merged)}, i % 2 ? -1 : 1);
  }
  radd(out, Word{}, {t.q, {e.begin(), e.end() - 1}}, k % 2 ? -1 : 1);
  return out;
}

class Homotopy {
 public:
  // H_k(1 * t) for a k-tuple t.
  const Resolved& operator()(const BarTuple& t) {
    auto it = memo_.find(t);
    if (it != memo_.end()) return it->second;
    Resolved out;
    if (t.k() == 1) {
      const Word& w = t.entries[0];
      for (std::size_t p = 0; p < w.length(); ++p) {
        const Letter& a = w.letters()[p];
        Word x = Word::reduce({{a.gen, 1}});
        if (a.exp > 0) {
          radd(out, Word{}, {t.q, {prefix(w, p), x}}, -1);
        } else {
          radd(out, Word{}, {t.q, {prefix(w, p + 1), x}}, 1);
        }
      }
    } else {
      for (const auto& [key, n] : resolution_boundary(t)) {
        const auto& [g, inner] = key;
        const Resolved& h = (*this)(inner);
        for (const auto& [hkey, m] : h) {
          BarTuple s{t.q, {g * hkey.first}};
          s.entries.insert(s.entries.end(), hkey.second.entries.begin(),
                           hkey.second.entries.end());
          radd(out, Word{}, std::move(s), -n * m);
        }
      }
    }
    return memo_.emplace(t, std::move(out)).first->second;
  }

 private:
  std::map<BarTuple, Resolved> memo_;
};

Chain homotopy_lift(const Chain& b) {
  Homotopy h;
  Chain z;
  for (const auto& [t, n] : b.terms())
    for (const auto& [key, m] : h(t)) z.add(key.second, n * m);
  return z;
}

// ---------------------------------------------------------------------------
// Linear method.

void splits_of(const BarTuple& t, const std::set<Letter>& alphabet, std::set<BarTuple>& out) {
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    const Word& w = t.entries[i];
    auto emit = [&](const Word& u, const Word& v) {
      if (u.is_identity() || v.is_identity()) return;
      BarTuple s{t.q, {t.entries.begin(), t.entries.begin() + static_cast<long>(i)}};
      s.entries.push_back(u);
      s.entries.push_back(v);
      s.entries.insert(s.entries.end(), t.entries.begin() + static_cast<long>(i) + 1,
                       t.entries.end());
      out.insert(std::move(s));
    };
    for (std::size_t p = 1; p < w.length(); ++p) emit(prefix(w, p), suffix(w, p));
    for (const auto& a : alphabet) {
      Word u = Word::reduce({a});
      emit(u, u.inverse() * w);
    }
  }
}

struct LinearOutcome {
  std::optional<Chain> solution;
  std::size_t basis = 0;
};

std::optional<Chain> solve_over(const Chain& b, const std::set<BarTuple>& candidates) {
  std::map<BarTuple, std::size_t> row;
  std::vector<BarTuple> cols(candidates.begin(), candidates.end());
  SparseIntMatrix a;
  a.cols.resize(cols.size());
  auto row_of = [&](const BarTuple& t) {
    auto [it, inserted] = row.try_emplace(t, row.size());
    return it->second;
  };
  for (const auto& [t, n] : b.terms()) row_of(t);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Chain bd = boundary_bar(Chain(cols[j]));
    for (const auto& [t, n] : bd.terms()) a.cols[j][row_of(t)] = n;
  }
  a.rows = row.size();
  SparseColumn rhs;
  for (const auto& [t, n] : b.terms()) rhs[row.at(t)] = n;
  auto x = solve_integer(a, rhs);
  if (!x) return std::nullopt;
  Chain z;
  for (const auto& [j, n] : *x) z.add(cols[j], n);
  return z;
}

// Grows the candidate set one closure level at a time and stops at the
// first level that admits a solution.
LinearOutcome linear_lift(const Chain& b, int depth, std::size_t max_candidates) {
  std::set<Letter> alphabet;
  for (const auto& [t, n] : b.terms())
    for (const auto& w : t.entries)
      for (const auto& l : w.letters()) {
        alphabet.insert({l.gen, 1});
        alphabet.insert({l.gen, -1});
      }

  std::set<BarTuple> candidates, seen;
  std::vector<BarTuple> frontier;
  for (const auto& [t, n] : b.terms()) {
    frontier.push_back(t);
    seen.insert(t);
  }
  for (int d = 0; d < depth && !frontier.empty(); ++d) {
    std::set<BarTuple> fresh;
    for (const auto& t : frontier) splits_of(t, alphabet, fresh);
    frontier.clear();
    for (const auto& c : fresh) {
      if (!candidates.insert(c).second) continue;
      Chain bd = boundary_bar(Chain(c));
      for (const auto& [t, n] : bd.terms())
        if (seen.insert(t).second) frontier.push_back(t);
    }
    if (candidates.size() > max_candidates) return {std::nullopt, candidates.size()};
    if (auto z = solve_over(b, candidates)) return {z, candidates.size()};
  }
  return {std::nullopt, candidates.size()};
}

void check_homogeneous(const Chain& b, int& k, int& q) {
  k = -1;
  q = -1;
  for (const auto& [t, n] : b.terms()) {
    if (k < 0) {
      k = t.k();
      q = t.q;
    } else if (t.k() != k || t.q != q) {
      throw InputError("lift target is not homogeneous in bidegree");
    }
  }
}

}  // namespace

LiftCertificate bar_lift(const Chain& b, const LiftOptions& opts) {
  int k, q;
  check_homogeneous(b, k, q);
  LiftCertificate cert;
  cert.target = b;
  cert.method = opts.method.value_or(k <= 1 ? LiftMethod::telescoping : LiftMethod::linear);
  if (b.is_zero()) return cert;

  if (k == 1) {
    ExponentVector total;
    for (const auto& [t, n] : b.terms())
      total += scaled(exponent_sums(t.entries[0]), static_cast<long>(n));
    if (!total.empty())
      throw ObstructionError("lift obstructed: target has nonzero class " + show(total) +
                                 " in H_1",
                             total);
  } else if (!boundary_bar(b).is_zero()) {
    throw InputError("lift target in bar degree " + std::to_string(k) + " is not a cycle");
  }

  switch (cert.method) {
    case LiftMethod::telescoping:
      cert.solution = k == 1 ? telescope(b) : homotopy_lift(b);
      break;
    case LiftMethod::fox:
      cert.solution = homotopy_lift(b);
      break;
    case LiftMethod::linear: {
      cert.depth = opts.depth;
      auto out = linear_lift(b, opts.depth, opts.max_candidates);
      cert.basis = out.basis;
      if (out.solution) {
        cert.solution = *out.solution;
      } else if (opts.fallback) {
        cert.solution = homotopy_lift(b);
        cert.method = LiftMethod::telescoping;
        cert.note = "linear support exhausted with " + std::to_string(out.basis) +
                    " candidates at depth " + std::to_string(opts.depth) +
                    "; used the contracting homotopy";
      } else {
        throw std::runtime_error("linear lift support exhausted with " +
                                 std::to_string(out.basis) + " candidates at depth " +
                                 std::to_string(opts.depth));
      }
      break;
    }
  }
  cert.residual = boundary_bar(cert.solution) - b;
  if (!cert.residual.is_zero())
    throw std::logic_error("bar_lift produced a wrong solution: residual " +
                           cert.residual.str());
  return cert;
}

CycleResult complete_cycle(const FreeSimplicialGroup& k, const Chain& top,
                           const LiftOptions& opts) {
  int k0, r1;
  check_homogeneous(top, k0, r1);
  CycleResult res;
  if (top.is_zero()) return res;
  if (k0 != 1) throw InputError("top column must be in bar degree 1");
  const int r = r1 + 1;
  Chain raw = top, prev = top;
  // Lift the unnormalized column; normalization commutes with both
  // differentials, so projecting the finished cycle keeps it a cycle.
  for (int kk = 2; kk <= r; ++kk) {
    Chain target = boundary_simp(k, prev);
    if (kk % 2) target = -target;
    // Degenerate 1-tuples may carry exponent sums that vanish in the
    // normalized complex.  For r <= 3 this step sits at q <= 1, where the
    // simplicial boundary of a degenerate 1-tuple is zero, so the later
    // targets stay exact cycles.
    if (kk == 2) target = sharp_normalize(k, target);
    auto cert = bar_lift(target, opts);
    prev = cert.solution;
    raw += prev;
    res.steps.push_back(std::move(cert));
  }
  res.cycle = sharp_normalize(k, raw);
  Chain check = total_boundary(k, res.cycle);
  if (!check.is_zero())
    throw std::logic_error("constructed chain is not a cycle: " + check.str());
  return res;
}

CycleResult surface_cycle(const FreeSimplicialGroup& k, const LiftOptions& opts) {
  if (!k.has_base("r") || k.degree_of("r") != 1)
    throw InputError("surface_cycle needs a surface group with relator generator r");
  return complete_cycle(k, Chain(BarTuple{1, {Word::generator("r")}}), opts);
}

CycleResult threefold_cycle(const FreeSimplicialGroup& k, const LiftOptions& opts) {
  if (k.generators(2).size() != 1)
    throw InputError("threefold_cycle needs exactly one degree-2 generator");
  const std::string& sigma = k.generators(2).front().name;
  return complete_cycle(k, Chain(BarTuple{2, {Word::generator(sigma)}}), opts);
}

CycleResult cycle_from_cellular(const FreeSimplicialGroup& k, const CellComplex& y,
                                const CellularChain& z, const LiftOptions& opts) {
  if (!cellular_boundary(y, z).empty()) throw InputError("cellular chain is not a cycle");
  if (z.empty()) return {};
  if (z.size() != 1) throw InputError("cellular chain is not homogeneous");
  const auto& [r, cells] = *z.begin();
  if (r < 1 || r > 3) throw InputError("cellular lifts are supported in degrees 1..3");
  Chain top;
  for (const auto& [cell, n] : cells) {
    if (!k.has_base(cell) || k.degree_of(cell) != r - 1)
      throw InputError("cell '" + cell + "' is not a generator of K_" + std::to_string(r - 1));
    top.add({r - 1, {Word::generator(cell)}}, n);
  }
  return complete_cycle(k, top, opts);
}

}  // namespace kanform
