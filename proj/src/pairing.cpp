#include "kanform/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace kanform {

RepSpace::RepSpace(const FreeSimplicialGroup& k, int q)
    : k_(&k), q_(q), names_(k.all_generators(q)) {
  for (std::size_t i = 0; i < names_.size(); ++i) index_[names_[i]] = static_cast<int>(i);
}

int RepSpace::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw InputError("generator without assigned value in degree " + std::to_string(q_) + ": " +
                     name);
  return it->second;
}

std::vector<std::pair<int, int>> RepSpace::word_indices(const Word& w) const {
  std::vector<std::pair<int, int>> out;
  out.reserve(w.length());
  for (const auto& l : w.letters()) out.push_back({index(l.gen), l.exp});
  return out;
}

WordMap RepSpace::evaluation(const BarTuple& t) const {
  if (t.q != q_) throw InputError("bar tuple " + t.str() + " is not in degree " + std::to_string(q_));
  WordMap m;
  m.inputs = size();
  for (const auto& w : t.entries) m.outputs.push_back(word_indices(w));
  return m;
}

WordMap RepSpace::coface(int l) const {
  if (q_ < 1 || l < 0 || l > q_) throw std::invalid_argument("coface index out of range");
  RepSpace below(*k_, q_ - 1);
  WordMap m;
  m.inputs = below.size();
  for (const auto& name : names_) m.outputs.push_back(below.word_indices(k_->face_of_generator(name, l)));
  return m;
}

Point RepSpace::pack(const RepPoint& p) const {
  if (p.q != q_) throw InputError("representation point has degree " + std::to_string(p.q));
  Point out;
  out.reserve(names_.size());
  for (const auto& name : names_) {
    auto it = p.values.find(name);
    if (it == p.values.end()) throw InputError("generator without assigned value: " + name);
    out.push_back(it->second);
  }
  return out;
}

RepPoint RepSpace::unpack(const Point& p) const {
  RepPoint out{q_, {}};
  for (std::size_t i = 0; i < names_.size(); ++i) out.values[names_[i]] = p.at(i);
  return out;
}

std::pair<Point, std::vector<Tangent>> evaluation_pushforward(const RepSpace& h,
                                                              const BarTuple& t, const Point& p,
                                                              const std::vector<Tangent>& v) {
  WordMap m = h.evaluation(t);
  std::vector<Tangent> pushed;
  for (const auto& x : v) pushed.push_back(m.push(p, x));
  return {m.apply(p), pushed};
}

int pairing_sign(int k) { return ((k - 1) * (k + 2) / 2) % 2 ? -1 : 1; }

namespace {

const RepSpace& space(std::map<int, RepSpace>& cache, const FreeSimplicialGroup& k, int q) {
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, RepSpace(k, q)).first;
  return it->second;
}

GradedForms collect(std::map<std::tuple<int, int, int>, std::vector<EquivariantForm>>& parts) {
  GradedForms out;
  for (auto& [key, terms] : parts) out.emplace(key, sum(std::move(terms)));
  return out;
}

}  // namespace

GradedForms pair(const FreeSimplicialGroup& k, const GradedForms& omega, const Chain& c) {
  std::map<int, RepSpace> spaces;
  std::map<std::tuple<int, int, int>, std::vector<EquivariantForm>> parts;
  for (const auto& [tuple, n] : c.terms()) {
    const double coeff = static_cast<double>(n) * pairing_sign(tuple.k());
    const RepSpace* h = nullptr;
    for (const auto& [key, form] : omega) {
      auto [i, j, nerve] = key;
      if (nerve != tuple.k()) continue;
      if (!h) h = &space(spaces, k, tuple.q);
      parts[{i, j, tuple.q}].push_back(scaled(pullback(form, h->evaluation(tuple)), coeff));
    }
  }
  return collect(parts);
}

EquivariantForm sharp_pullback(const FreeSimplicialGroup& k, const EquivariantForm& f, int q) {
  RepSpace h(k, q);
  std::vector<EquivariantForm> terms;
  for (int l = 0; l <= q; ++l) terms.push_back(scaled(pullback(f, h.coface(l)), l % 2 ? -1 : 1));
  return sum(std::move(terms));
}

GradedForms total_D(const FreeSimplicialGroup& k, const GradedForms& f, bool sharp,
                    const FdOptions& o) {
  std::map<std::tuple<int, int, int>, std::vector<EquivariantForm>> parts;
  for (const auto& [key, form] : f) {
    auto [i, j, q] = key;
    parts[{i, j + 1, q}].push_back(exterior_derivative(form, o));
    if (j >= 1) parts[{i + 2, j - 1, q}].push_back(delta_g(form));
    if (sharp && q >= 1)
      parts[{i, j, q - 1}].push_back(scaled(sharp_pullback(k, form, q), (i + j) % 2 ? -1 : 1));
  }
  return collect(parts);
}

Chain raw_total_boundary(const FreeSimplicialGroup& k, const Chain& c) {
  std::map<int, Chain> by_k;
  for (const auto& [t, n] : c.terms()) by_k[t.k()].add(t, n);
  Chain out;
  for (const auto& [bar, part] : by_k) {
    out += boundary_bar(part);
    Chain s = boundary_simp(k, part);
    out += bar % 2 ? -s : s;
  }
  return out;
}

IdentityReport differential_identity_check(const FreeSimplicialGroup& k, const MatrixGroup& g,
                                           const GradedForms& omega, int total_degree,
                                           const Chain& c, int samples, std::mt19937_64& rng,
                                           bool sharp) {
  std::vector<EquivariantForm> comps;
  for (const auto& [key, f] : omega) comps.push_back(f);
  GradedForms lhs = total_D(k, pair(k, omega, c), sharp);
  GradedForms closed = comps.empty() ? GradedForms{} : pair(k, total_differential(comps), c);
  Chain bd = sharp ? raw_total_boundary(k, c) : boundary_bar(c);
  GradedForms correction = pair(k, omega, bd);
  const double sign = total_degree % 2 ? -1.0 : 1.0;

  std::set<std::tuple<int, int, int>> targets;
  for (const auto* m : {&lhs, &closed, &correction})
    for (const auto& [key, f] : *m) targets.insert(key);

  IdentityReport rep;
  rep.sharp = sharp;
  rep.samples = samples;
  std::map<int, RepSpace> spaces;
  for (const auto& key : targets) {
    auto [i, j, q] = key;
    const int n = space(spaces, k, q).size();
    IdentityResidual row{key, 0, 0, 0};
    auto value = [](const GradedForms& m, const std::tuple<int, int, int>& key, const Point& p,
                    const Mat& x, const std::vector<Tangent>& v) {
      auto it = m.find(key);
      return it == m.end() ? 0.0 : it->second(p, x, v);
    };
    for (int s = 0; s < samples; ++s) {
      Point p = random_point(g, n, rng);
      Mat x = g.random_algebra(rng);
      std::vector<Tangent> v;
      for (int a = 0; a < j; ++a) v.push_back(random_tangent(g, n, rng));
      const double l = value(lhs, key, p, x, v);
      const double b = sign * value(correction, key, p, x, v);
      const double r = value(closed, key, p, x, v) + b;
      row.residual = std::max(row.residual, std::abs(l - r));
      row.magnitude = std::max(row.magnitude, std::abs(l));
      row.boundary = std::max(row.boundary, std::abs(b));
    }
    rep.worst = std::max(rep.worst, row.residual);
    rep.rows.push_back(row);
  }
  return rep;
}

namespace {

// Shuffles of (a, b): the first a positions of each permutation go to the
// left factor.  Sign of the permutation attached.
void shuffles(int a, int b, std::vector<std::pair<std::vector<int>, int>>& out) {
  std::vector<int> mask(static_cast<std::size_t>(a + b), 1);
  std::fill(mask.begin(), mask.begin() + a, 0);
  do {
    std::vector<int> left, right;
    for (int p = 0; p < a + b; ++p) (mask[static_cast<std::size_t>(p)] ? right : left).push_back(p);
    int inversions = 0;
    for (int x : left)
      for (int y : right)
        if (y < x) ++inversions;
    std::vector<int> perm = left;
    perm.insert(perm.end(), right.begin(), right.end());
    out.push_back({perm, inversions % 2 ? -1 : 1});
  } while (std::next_permutation(mask.begin(), mask.end()));
}

}  // namespace

EquivariantForm wedge(const EquivariantForm& a, const EquivariantForm& b) {
  std::vector<std::pair<std::vector<int>, int>> sh;
  shuffles(a.j, b.j, sh);
  return {a.factors + b.factors, a.i + b.i, a.j + b.j,
          [a, b, sh](const Point& p, const Mat& x, const std::vector<Tangent>& v) {
            Point pa(p.begin(), p.begin() + a.factors), pb(p.begin() + a.factors, p.end());
            double total = 0;
            for (const auto& [perm, sign] : sh) {
              std::vector<Tangent> va, vb;
              for (int s = 0; s < a.j + b.j; ++s) {
                const Tangent& t = v[static_cast<std::size_t>(perm[static_cast<std::size_t>(s)])];
                if (s < a.j)
                  va.emplace_back(t.begin(), t.begin() + a.factors);
                else
                  vb.emplace_back(t.begin() + a.factors, t.end());
              }
              total += sign * a(pa, x, va) * b(pb, x, vb);
            }
            return total;
          }};
}

GradedForms wedge(const GradedForms& a, const GradedForms& b) {
  std::map<std::tuple<int, int, int>, std::vector<EquivariantForm>> parts;
  for (const auto& [ka, fa] : a)
    for (const auto& [kb, fb] : b)
      parts[{std::get<0>(ka) + std::get<0>(kb), std::get<1>(ka) + std::get<1>(kb),
             std::get<2>(ka) + std::get<2>(kb)}]
          .push_back(wedge(fa, fb));
  return collect(parts);
}

std::vector<double> ParamDomain::sample(std::mt19937_64& rng) const {
  std::vector<double> w;
  for (int d = 0; d < dim; ++d) {
    auto [lo, hi] = d < static_cast<int>(bounds.size()) ? bounds[static_cast<std::size_t>(d)]
                                                         : std::pair{0.0, 1.0};
    w.push_back(std::uniform_real_distribution<double>(lo, hi)(rng));
  }
  return w;
}

double plot_face_defect(const FreeSimplicialGroup& k, const Plot& f, int samples,
                        std::mt19937_64& rng) {
  double worst = 0;
  for (const auto& [q, map] : f.maps) {
    if (q == 0 || !f.maps.count(q - 1)) continue;
    RepSpace h(k, q);
    const auto& lower = f.maps.at(q - 1);
    std::uniform_real_distribution<double> u(0, 1);
    for (int s = 0; s < samples; ++s) {
      auto w = f.domain.sample(rng);
      std::vector<double> t(static_cast<std::size_t>(q));
      double tot = 0;
      for (auto& x : t) tot += (x = u(rng));
      for (auto& x : t) x /= tot;
      Point below = lower(w, t);
      for (int l = 0; l <= q; ++l) {
        std::vector<double> tf = t;
        tf.insert(tf.begin() + l, 0.0);
        Point a = map(w, tf), b = h.coface(l).apply(below);
        for (std::size_t x = 0; x < a.size(); ++x) worst = std::max(worst, (a[x] - b[x]).norm());
      }
    }
  }
  return worst;
}

namespace {

// Left-trivialized derivative of a plot along a curve in its arguments.
Tangent plot_derivative(const std::function<Point(double)>& curve, const FdOptions& o) {
  auto central = [&](double h) {
    Point a = curve(h), b = curve(-h);
    Tangent d;
    for (std::size_t x = 0; x < a.size(); ++x) d.push_back((a[x] - b[x]) / (2 * h));
    return d;
  };
  Tangent d1 = central(o.step);
  if (o.richardson) {
    Tangent d2 = central(o.step / 2);
    for (std::size_t x = 0; x < d1.size(); ++x) d1[x] = (4 * d2[x] - d1[x]) / 3;
  }
  Point base = curve(0);
  for (std::size_t x = 0; x < d1.size(); ++x) d1[x] = base[x].adjoint() * d1[x];
  return d1;
}

ParamForm integrate_component(const EquivariantForm& form, int q, const Plot::Map& map,
                              const FdOptions& o, const SimplexRule& rule) {
  return {form.i, form.j - q,
          [form, q, map, rule, o](const std::vector<double>& w, const Mat& x,
                                  const std::vector<std::vector<double>>& u) {
            double total = 0;
            for (std::size_t n = 0; n < rule.nodes.size(); ++n) {
              const auto& t = rule.nodes[n];
              std::vector<Tangent> v;
              for (int a = 1; a <= q; ++a)
                v.push_back(plot_derivative(
                    [&](double s) {
                      auto ts = t;
                      ts[static_cast<std::size_t>(a)] += s;
                      ts[0] -= s;
                      return map(w, ts);
                    },
                    o));
              for (const auto& dir : u)
                v.push_back(plot_derivative(
                    [&](double s) {
                      auto ws = w;
                      for (std::size_t d = 0; d < ws.size(); ++d) ws[d] += s * dir[d];
                      return map(ws, t);
                    },
                    o));
              total += rule.weights[n] * form(map(w, t), x, v);
            }
            return total;
          }};
}

}  // namespace

ParamForm param_sum(std::vector<ParamForm> terms) {
  if (terms.empty()) throw std::invalid_argument("param_sum needs at least one term");
  if (terms.size() == 1) return terms[0];
  const int i = terms[0].i, j = terms[0].j;
  return {i, j, [terms = std::move(terms)](const std::vector<double>& w, const Mat& x,
                                           const std::vector<std::vector<double>>& u) {
            double s = 0;
            for (const auto& t : terms) s += t(w, x, u);
            return s;
          }};
}

ParamForms integrate_over_plot(const GradedForms& forms, const Plot& f, const FdOptions& o,
                               const std::map<int, SimplexRule>& rules) {
  std::map<std::pair<int, int>, std::vector<ParamForm>> parts;
  for (const auto& [key, form] : forms) {
    auto [i, j, q] = key;
    if (j < q) continue;  // no Delta_q-directions left to integrate
    auto it = f.maps.find(q);
    if (it == f.maps.end())
      throw InputError("plot has no map in simplicial degree " + std::to_string(q));
    auto r = rules.find(q);
    // Sign making I a chain map from D to d + delta_G.
    const int sign = (q * j + q * (q + 3) / 2) % 2 ? -1 : 1;
    parts[{i, j - q}].push_back(param_scaled(
        integrate_component(form, q, it->second, o, r == rules.end() ? simplex_rule(q) : r->second),
        sign));
  }
  ParamForms out;
  for (auto& [key, terms] : parts) out.emplace(key, param_sum(std::move(terms)));
  return out;
}

ParamForm param_exterior_derivative(const ParamForm& f, const FdOptions& o) {
  return {f.i, f.j + 1,
          [f, o](const std::vector<double>& w, const Mat& x,
                 const std::vector<std::vector<double>>& u) {
            double total = 0;
            for (std::size_t a = 0; a < u.size(); ++a) {
              std::vector<std::vector<double>> rest;
              for (std::size_t b = 0; b < u.size(); ++b)
                if (b != a) rest.push_back(u[b]);
              auto along = [&](double s) {
                auto ws = w;
                for (std::size_t d = 0; d < ws.size(); ++d) ws[d] += s * u[a][d];
                return f(ws, x, rest);
              };
              auto central = [&](double h) { return (along(h) - along(-h)) / (2 * h); };
              double d = central(o.step);
              if (o.richardson) d = (4 * central(o.step / 2) - d) / 3;
              total += a % 2 ? -d : d;
            }
            return total;
          }};
}

ParamForm param_scaled(const ParamForm& f, double s) {
  return {f.i, f.j, [f, s](const std::vector<double>& w, const Mat& x,
                           const std::vector<std::vector<double>>& u) { return s * f(w, x, u); }};
}

ParamForm param_delta_g(const ParamForm& f, ParamField field) {
  if (f.j < 1) throw std::invalid_argument("delta_G of a 0-form is zero");
  return {f.i + 2, f.j - 1,
          [f, field](const std::vector<double>& w, const Mat& x,
                     const std::vector<std::vector<double>>& u) {
            std::vector<std::vector<double>> v{field(w, x)};
            v.insert(v.end(), u.begin(), u.end());
            return -f(w, x, v);
          }};
}

}  // namespace kanform
