#include "kanform/forms.hpp"

#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

namespace kanform {

EquivariantForm zero_form(int factors, int i, int j) {
  return {factors, i, j, [](const Point&, const Mat&, const std::vector<Tangent>&) { return 0.0; }};
}

EquivariantForm scaled(const EquivariantForm& f, double s) {
  auto e = f.eval;
  return {f.factors, f.i, f.j,
          [e, s](const Point& p, const Mat& x, const std::vector<Tangent>& v) {
            return s * e(p, x, v);
          }};
}

EquivariantForm sum(std::vector<EquivariantForm> terms) {
  if (terms.empty()) throw std::invalid_argument("sum of no forms");
  for (const auto& t : terms)
    if (t.factors != terms[0].factors || t.i != terms[0].i || t.j != terms[0].j)
      throw std::invalid_argument("sum of forms of different type");
  EquivariantForm out = terms[0];
  out.eval = [terms = std::move(terms)](const Point& p, const Mat& x,
                                        const std::vector<Tangent>& v) {
    double s = 0;
    for (const auto& t : terms) s += t.eval(p, x, v);
    return s;
  };
  return out;
}

Mat evaluate_word(const std::vector<std::pair<int, int>>& word, const Point& p, int n) {
  Mat out = Mat::Identity(n, n);
  for (auto [idx, e] : word) {
    const Mat& g = p.at(static_cast<std::size_t>(idx));
    out = out * (e > 0 ? g : Mat(g.adjoint()));
  }
  return out;
}

Mat word_pushforward(const std::vector<std::pair<int, int>>& word, const Point& p,
                     const Tangent& v) {
  // w^{-1} dw = sum_l S_l^{-1} eta_l S_l with S_l the product after l.
  const long n = p.empty() ? (v.empty() ? 1 : v[0].rows()) : p[0].rows();
  Mat out = Mat::Zero(n, n);
  Mat suffix = Mat::Identity(n, n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto [idx, e] = *it;
    const Mat& g = p.at(static_cast<std::size_t>(idx));
    const Mat& xi = v.at(static_cast<std::size_t>(idx));
    Mat eta = e > 0 ? xi : Mat(-(g * xi * g.adjoint()));
    out += suffix.adjoint() * eta * suffix;
    suffix = (e > 0 ? g : Mat(g.adjoint())) * suffix;
  }
  return out;
}

Point WordMap::apply(const Point& p) const {
  const int n = p.empty() ? 1 : static_cast<int>(p[0].rows());
  Point out;
  out.reserve(outputs.size());
  for (const auto& w : outputs) out.push_back(evaluate_word(w, p, n));
  return out;
}

Tangent WordMap::push(const Point& p, const Tangent& v) const {
  Tangent out;
  out.reserve(outputs.size());
  for (const auto& w : outputs) out.push_back(word_pushforward(w, p, v));
  return out;
}

EquivariantForm pullback(const EquivariantForm& f, const WordMap& m) {
  if (m.size() != f.factors) throw std::invalid_argument("pullback: word map target mismatch");
  auto e = f.eval;
  return {m.inputs, f.i, f.j,
          [e, m](const Point& p, const Mat& x, const std::vector<Tangent>& v) {
            std::vector<Tangent> pushed;
            pushed.reserve(v.size());
            for (const auto& t : v) pushed.push_back(m.push(p, t));
            return e(m.apply(p), x, pushed);
          }};
}

WordMap nerve_face(int k, int l) {
  WordMap m;
  m.inputs = k + 1;
  for (int a = 0; a < k; ++a) {
    // output a (0-based) in terms of inputs g_0..g_k (0-based)
    if (l == 0) {
      m.outputs.push_back({{a + 1, 1}});
    } else if (l == k + 1) {
      m.outputs.push_back({{a, 1}});
    } else if (a + 1 < l) {
      m.outputs.push_back({{a, 1}});
    } else if (a + 1 == l) {
      m.outputs.push_back({{a, 1}, {a + 1, 1}});
    } else {
      m.outputs.push_back({{a + 1, 1}});
    }
  }
  return m;
}

EquivariantForm delta_nat(const EquivariantForm& f) {
  const int k = f.factors;
  std::vector<EquivariantForm> terms;
  for (int l = 0; l <= k + 1; ++l) terms.push_back(scaled(pullback(f, nerve_face(k, l)), l % 2 ? -1 : 1));
  return sum(std::move(terms));
}

Tangent conjugation_field(const Point& p, const Mat& x) {
  Tangent out;
  out.reserve(p.size());
  for (const auto& g : p) out.push_back(ad_inv(g, x) - x);
  return out;
}

EquivariantForm delta_g(const EquivariantForm& f) {
  if (f.j < 1) return zero_form(f.factors, f.i + 2, 0);
  auto e = f.eval;
  return {f.factors, f.i + 2, f.j - 1,
          [e](const Point& p, const Mat& x, const std::vector<Tangent>& v) {
            std::vector<Tangent> w;
            w.reserve(v.size() + 1);
            w.push_back(conjugation_field(p, x));
            w.insert(w.end(), v.begin(), v.end());
            return -e(p, x, w);
          }};
}

Point flow(const Point& p, const Tangent& v, double s) {
  Point out;
  out.reserve(p.size());
  for (std::size_t l = 0; l < p.size(); ++l) out.push_back(p[l] * Mat(s * v[l]).exp());
  return out;
}

double directional_derivative(const std::function<double(const Point&)>& f, const Point& p,
                              const Tangent& v, const FdOptions& o) {
  auto central = [&](double h) { return (f(flow(p, v, h)) - f(flow(p, v, -h))) / (2 * h); };
  double d1 = central(o.step);
  if (!o.richardson) return d1;
  double d2 = central(o.step / 2);
  return (4 * d2 - d1) / 3;
}

EquivariantForm exterior_derivative(const EquivariantForm& f, const FdOptions& o) {
  auto e = f.eval;
  const int j = f.j;
  return {f.factors, f.i, f.j + 1,
          [e, j, o](const Point& p, const Mat& x, const std::vector<Tangent>& v) {
            double total = 0;
            for (int a = 0; a <= j; ++a) {
              std::vector<Tangent> rest;
              for (int b = 0; b <= j; ++b)
                if (b != a) rest.push_back(v[static_cast<std::size_t>(b)]);
              double da = directional_derivative(
                  [&](const Point& q) { return e(q, x, rest); }, p,
                  v[static_cast<std::size_t>(a)], o);
              total += (a % 2 ? -da : da);
            }
            for (int a = 0; a <= j; ++a)
              for (int b = a + 1; b <= j; ++b) {
                Tangent br;
                for (std::size_t l = 0; l < p.size(); ++l)
                  br.push_back(bracket(v[static_cast<std::size_t>(a)][l],
                                       v[static_cast<std::size_t>(b)][l]));
                std::vector<Tangent> rest{br};
                for (int c = 0; c <= j; ++c)
                  if (c != a && c != b) rest.push_back(v[static_cast<std::size_t>(c)]);
                double val = e(p, x, rest);
                total += ((a + b) % 2 ? -val : val);
              }
            return total;
          }};
}

Point random_point(const MatrixGroup& g, int n, std::mt19937_64& rng, double scale) {
  Point p;
  for (int l = 0; l < n; ++l) p.push_back(g.random_element(rng, scale));
  return p;
}

Tangent random_tangent(const MatrixGroup& g, int n, std::mt19937_64& rng) {
  Tangent t;
  for (int l = 0; l < n; ++l) t.push_back(g.random_algebra(rng));
  return t;
}

}  // namespace kanform
