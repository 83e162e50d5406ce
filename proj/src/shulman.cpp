#include "kanform/shulman.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kanform {

const NerveConventions& default_conventions() {
  static const NerveConventions c{};
  return c;
}

namespace {

std::vector<std::pair<int, int>> tail_word(int from, int q) {
  std::vector<std::pair<int, int>> w;
  for (int l = from; l < q; ++l) w.push_back({l, 1});
  return w;
}

Mat vertex_section(const Point& g, int i) {
  const int q = static_cast<int>(g.size());
  const long n = g.empty() ? 1 : g[0].rows();
  return evaluate_word(tail_word(i, q), g, static_cast<int>(n));
}

struct Matching {
  std::vector<std::pair<int, int>> pairs;
  int sign = 1;
};

void enumerate(std::vector<int> rest, int sign, std::vector<std::pair<int, int>>& cur,
               std::vector<Matching>& out) {
  if (rest.empty()) {
    out.push_back({cur, sign});
    return;
  }
  const int a = rest[0];
  for (std::size_t idx = 1; idx < rest.size(); ++idx) {
    std::vector<int> next;
    for (std::size_t k = 1; k < rest.size(); ++k)
      if (k != idx) next.push_back(rest[k]);
    cur.push_back({a, rest[idx]});
    enumerate(next, idx % 2 ? sign : -sign, cur, out);
    cur.pop_back();
  }
}

const std::vector<Matching>& matchings(int p) {
  static std::map<int, std::vector<Matching>> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  std::vector<int> all(static_cast<std::size_t>(2 * p));
  std::iota(all.begin(), all.end(), 0);
  std::vector<Matching> out;
  std::vector<std::pair<int, int>> cur;
  enumerate(all, 1, cur, out);
  return cache.emplace(p, std::move(out)).first->second;
}

double factorial(int n) {
  double f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// Curvature data at one point of G^q x Delta_q for a list of vectors whose
// first q entries are the coordinate fields d/dt_1..d/dt_q.
class CurvatureFrame {
 public:
  CurvatureFrame(const Point& g, const std::vector<double>& t, const std::vector<Tangent>& vs,
                 int q)
      : t_(t), q_(q), n_(g.empty() ? 1 : g[0].rows()) {
    for (const auto& v : vs) {
      std::vector<Mat> th;
      th.reserve(static_cast<std::size_t>(q) + 1);
      Mat sum = Mat::Zero(n_, n_);
      for (int i = 0; i <= q; ++i) {
        th.push_back(vertex_form(g, i, v));
        sum += t[static_cast<std::size_t>(i)] * th.back();
      }
      theta_.push_back(std::move(th));
      theta_sum_.push_back(std::move(sum));
    }
  }

  // F(w_a, w_b) where indices < q are coordinate fields.
  Mat operator()(int a, int b) const {
    if (a < q_ && b < q_) return Mat::Zero(n_, n_);
    if (a < q_) return dt_part(a, b - q_);
    if (b < q_) return -dt_part(b, a - q_);
    const auto& u = theta_[static_cast<std::size_t>(a - q_)];
    const auto& v = theta_[static_cast<std::size_t>(b - q_)];
    Mat f = bracket(theta_sum_[static_cast<std::size_t>(a - q_)],
                    theta_sum_[static_cast<std::size_t>(b - q_)]);
    for (int i = 0; i <= q_; ++i)
      f -= t_[static_cast<std::size_t>(i)] * bracket(u[static_cast<std::size_t>(i)],
                                                     v[static_cast<std::size_t>(i)]);
    return f;
  }

 private:
  // F(d/dt_{a+1}, v) = theta_{a+1}(v) - theta_0(v)
  Mat dt_part(int a, int vi) const {
    const auto& th = theta_[static_cast<std::size_t>(vi)];
    return th[static_cast<std::size_t>(a) + 1] - th[0];
  }

  std::vector<double> t_;
  int q_;
  long n_;
  std::vector<std::vector<Mat>> theta_;
  std::vector<Mat> theta_sum_;
};

}  // namespace

Mat vertex_form(const Point& g, int i, const Tangent& v) {
  return word_pushforward(tail_word(i, static_cast<int>(g.size())), g, v);
}

Mat connection(const Point& g, const std::vector<double>& t, const Tangent& v) {
  Mat out = Mat::Zero(g[0].rows(), g[0].rows());
  for (std::size_t i = 0; i < t.size(); ++i) out += t[i] * vertex_form(g, static_cast<int>(i), v);
  return out;
}

Mat curvature(const Point& g, const std::vector<double>& t, const SimplexTangent& u,
              const SimplexTangent& v) {
  const int q = static_cast<int>(g.size());
  Mat f = bracket(connection(g, t, u.xi), connection(g, t, v.xi));
  for (int i = 0; i <= q; ++i)
    f -= t[static_cast<std::size_t>(i)] * bracket(vertex_form(g, i, u.xi), vertex_form(g, i, v.xi));
  for (int a = 0; a < q; ++a) {
    Mat diff_v = vertex_form(g, a + 1, v.xi) - vertex_form(g, 0, v.xi);
    Mat diff_u = vertex_form(g, a + 1, u.xi) - vertex_form(g, 0, u.xi);
    f += u.dt[static_cast<std::size_t>(a)] * diff_v - v.dt[static_cast<std::size_t>(a)] * diff_u;
  }
  return f;
}

Mat moment(const Point& g, const std::vector<double>& t, const Mat& x, int sign) {
  Mat out = Mat::Zero(x.rows(), x.cols());
  for (std::size_t i = 0; i < t.size(); ++i)
    out += t[i] * ad_inv(vertex_section(g, static_cast<int>(i)), x);
  return static_cast<double>(sign) * out;
}

EquivariantForm equivariant_component(const InvariantPolynomial& poly, int q, int m,
                                      const NerveConventions& c, const SimplexRule* rule) {
  const int r = poly.degree;
  const int j = 2 * (r - m) - q;
  if (q < 1 || q > r || m < 0 || j < 0)
    throw std::invalid_argument("no component Q^{2m,j,q} for these indices");
  const SimplexRule& rl = rule ? *rule : simplex_rule(q);
  const double coeff = binomial(r, m) * factorial(r - m) *
                       c.orientation[static_cast<std::size_t>(q)];
  const int p = r - m;
  return {q, 2 * m, j,
          [poly, q, m, p, coeff, rl, mu_sign = c.mu_sign](
              const Point& g, const Mat& x, const std::vector<Tangent>& vs) {
            const auto& ms = matchings(p);
            double total = 0;
            for (std::size_t n = 0; n < rl.nodes.size(); ++n) {
              const auto& t = rl.nodes[n];
              CurvatureFrame fr(g, t, vs, q);
              Mat mu = m > 0 ? moment(g, t, x, mu_sign) : Mat();
              double val = 0;
              for (const auto& mt : ms) {
                std::vector<Mat> args(static_cast<std::size_t>(m), mu);
                for (auto [a, b] : mt.pairs) args.push_back(fr(a, b));
                val += mt.sign * poly.real(args);
              }
              total += rl.weights[n] * val;
            }
            return coeff * total;
          }};
}

EquivariantForm shulman_form(const InvariantPolynomial& poly, int q, const NerveConventions& c) {
  const int r = poly.degree;
  const int j = 2 * r - q;
  if (q < 1 || q > r) throw std::invalid_argument("shulman_form needs 1 <= q <= r");
  const SimplexRule& rl = simplex_rule(q);
  const double coeff = c.orientation[static_cast<std::size_t>(q)] / std::pow(2.0, r);
  return {q, 0, j, [poly, q, r, coeff, rl](const Point& g, const Mat&, const std::vector<Tangent>& vs) {
            const int n = 2 * r;
            double total = 0;
            for (std::size_t node = 0; node < rl.nodes.size(); ++node) {
              const auto& t = rl.nodes[node];
              // Assemble explicit tangents of G^q x Delta_q.
              std::vector<SimplexTangent> w;
              for (int a = 0; a < q; ++a) {
                SimplexTangent st{Tangent(g.size(), Mat::Zero(g[0].rows(), g[0].rows())),
                                  std::vector<double>(static_cast<std::size_t>(q), 0.0)};
                st.dt[static_cast<std::size_t>(a)] = 1.0;
                w.push_back(st);
              }
              for (const auto& v : vs)
                w.push_back({v, std::vector<double>(static_cast<std::size_t>(q), 0.0)});
              std::vector<int> perm(static_cast<std::size_t>(n));
              std::iota(perm.begin(), perm.end(), 0);
              double val = 0;
              do {
                int inversions = 0;
                for (int a = 0; a < n; ++a)
                  for (int b = a + 1; b < n; ++b)
                    if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
                std::vector<Mat> args;
                for (int k = 0; k < r; ++k)
                  args.push_back(curvature(g, t, w[static_cast<std::size_t>(perm[static_cast<std::size_t>(2 * k)])],
                                           w[static_cast<std::size_t>(perm[static_cast<std::size_t>(2 * k + 1)])]));
                double qv = poly.real(args);
                val += inversions % 2 ? -qv : qv;
              } while (std::next_permutation(perm.begin(), perm.end()));
              total += rl.weights[node] * val;
            }
            return coeff * total;
          }};
}

std::vector<EquivariantForm> equivariant_forms(const InvariantPolynomial& poly, int q,
                                               const NerveConventions& c) {
  std::vector<EquivariantForm> out;
  for (int m = 0; 2 * (poly.degree - m) - q >= 0; ++m)
    out.push_back(equivariant_component(poly, q, m, c));
  return out;
}

const EquivariantForm* OmegaQ::find(int i, int j, int q) const {
  auto it = components.find({i, j, q});
  return it == components.end() ? nullptr : &it->second;
}

std::vector<EquivariantForm> OmegaQ::on_nerve_degree(int k) const {
  std::vector<EquivariantForm> out;
  for (const auto& [key, f] : components)
    if (std::get<2>(key) == k) out.push_back(f);
  return out;
}

OmegaQ assemble_omega(const InvariantPolynomial& poly, const NerveConventions& c) {
  OmegaQ o;
  o.r = poly.degree;
  for (int q = 1; q <= poly.degree; ++q)
    for (auto& f : equivariant_forms(poly, q, c)) o.components.emplace(std::make_tuple(f.i, f.j, q), f);
  return o;
}

std::map<std::tuple<int, int, int>, EquivariantForm> total_differential(
    const std::vector<EquivariantForm>& forms, const FdOptions& o) {
  std::map<std::tuple<int, int, int>, std::vector<EquivariantForm>> parts;
  for (const auto& f : forms) {
    parts[{f.i, f.j + 1, f.factors}].push_back(exterior_derivative(f, o));
    if (f.j >= 1) parts[{f.i + 2, f.j - 1, f.factors}].push_back(delta_g(f));
    parts[{f.i, f.j, f.factors + 1}].push_back(scaled(delta_nat(f), (f.i + f.j) % 2 ? -1 : 1));
  }
  std::map<std::tuple<int, int, int>, EquivariantForm> out;
  for (auto& [key, terms] : parts) out.emplace(key, sum(std::move(terms)));
  return out;
}

EquivariantForm cartan_three_form(const InvariantPolynomial& poly) {
  if (poly.degree != 2) throw std::invalid_argument("Cartan 3-form needs a quadratic polynomial");
  return {1, 0, 3, [poly](const Point&, const Mat&, const std::vector<Tangent>& v) {
            return poly.real({v[0][0], bracket(v[1][0], v[2][0])});
          }};
}

}  // namespace kanform
