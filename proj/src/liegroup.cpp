#include "kanform/liegroup.hpp"

#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <numbers>

#include "kanform/words.hpp"

namespace kanform {

namespace {

Mat unit(int n, int a, int b) {
  Mat m = Mat::Zero(n, n);
  m(a, b) = 1.0;
  return m;
}

double real_inner(const Mat& a, const Mat& b) { return (a.adjoint() * b).trace().real(); }

}  // namespace

MatrixGroup::MatrixGroup(Family family, int n) : family_(family), n_(n) {
  if (n < 1 || n > 8) throw InputError("group size n must be in 1..8");
  const cplx I(0, 1);
  if (family == Family::SO) {
    if (n < 2) throw InputError("SO(n) needs n >= 2");
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) basis_.push_back(unit(n, a, b) - unit(n, b, a));
  } else {
    if (family == Family::SU && n < 2) throw InputError("SU(n) needs n >= 2");
    if (family == Family::U)
      for (int a = 0; a < n; ++a) basis_.push_back(I * unit(n, a, a));
    else
      for (int a = 0; a + 1 < n; ++a) basis_.push_back(I * (unit(n, a, a) - unit(n, a + 1, a + 1)));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        basis_.push_back(unit(n, a, b) - unit(n, b, a));
        basis_.push_back(I * (unit(n, a, b) + unit(n, b, a)));
      }
  }
  const int d = dim();
  Eigen::MatrixXd gram(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) gram(a, b) = real_inner(basis_[a], basis_[b]);
  gram_inv_ = gram.inverse();
}

MatrixGroup MatrixGroup::parse(const std::string& name) {
  std::size_t p = 0;
  while (p < name.size() && std::isalpha(static_cast<unsigned char>(name[p]))) ++p;
  std::string fam = name.substr(0, p), num = name.substr(p);
  if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("bad group name '" + name + "' (expected e.g. SU2)");
  int n = std::stoi(num);
  if (fam == "U") return {Family::U, n};
  if (fam == "SU") return {Family::SU, n};
  if (fam == "SO") return {Family::SO, n};
  throw InputError("unknown group family '" + fam + "'");
}

std::string MatrixGroup::name() const {
  const char* f = family_ == Family::U ? "U" : family_ == Family::SU ? "SU" : "SO";
  return f + std::to_string(n_);
}

Mat MatrixGroup::exp(const Mat& x) const { return x.exp(); }
Mat MatrixGroup::log(const Mat& g) const { return g.log(); }

Eigen::VectorXd MatrixGroup::coords(const Mat& x) const {
  Eigen::VectorXd rhs(dim());
  for (int a = 0; a < dim(); ++a) rhs(a) = real_inner(basis_[a], x);
  return gram_inv_ * rhs;
}

Mat MatrixGroup::from_coords(const Eigen::VectorXd& c) const {
  Mat x = Mat::Zero(n_, n_);
  for (int a = 0; a < dim(); ++a) x += c(a) * basis_[a];
  return x;
}

Mat MatrixGroup::random_algebra(std::mt19937_64& rng, double scale) const {
  std::normal_distribution<double> nd(0.0, scale);
  Eigen::VectorXd c(dim());
  for (int a = 0; a < dim(); ++a) c(a) = nd(rng);
  return from_coords(c);
}

Mat MatrixGroup::random_element(std::mt19937_64& rng, double scale) const {
  return exp(random_algebra(rng, scale));
}

double MatrixGroup::point_residual(const Mat& g) const {
  double r = (g.adjoint() * g - identity()).norm();
  if (family_ != Family::U) r += std::abs(g.determinant() - 1.0);
  if (family_ == Family::SO) r += g.imag().norm();
  return r;
}

double MatrixGroup::algebra_residual(const Mat& x) const { return (x - project(x)).norm(); }

// ---------------------------------------------------------------------------

InvariantPolynomial trace_form(double scale, std::string name) {
  InvariantPolynomial q;
  q.name = std::move(name);
  q.degree = 2;
  q.eval = [scale](const std::vector<Mat>& a) { return scale * (a[0] * a[1]).trace(); };
  return q;
}

InvariantPolynomial basic_trace_form() {
  return trace_form(-1.0 / (8.0 * std::numbers::pi * std::numbers::pi), "basic");
}

std::vector<cplx> elementary_symmetric(const Mat& a, int r) {
  // Newton's identities on power traces.
  std::vector<cplx> p(static_cast<std::size_t>(r) + 1), e(static_cast<std::size_t>(r) + 1);
  Mat pw = Mat::Identity(a.rows(), a.cols());
  for (int k = 1; k <= r; ++k) {
    pw = pw * a;
    p[static_cast<std::size_t>(k)] = pw.trace();
  }
  e[0] = 1.0;
  for (int k = 1; k <= r; ++k) {
    cplx s = 0;
    for (int i = 1; i <= k; ++i) {
      cplx term = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)];
      s += (i % 2 ? term : -term);
    }
    e[static_cast<std::size_t>(k)] = s / static_cast<double>(k);
  }
  return e;
}

InvariantPolynomial chern_polynomial(int r) {
  if (r < 1) throw InputError("Chern polynomial degree must be positive");
  InvariantPolynomial q;
  q.name = "chern" + std::to_string(r);
  q.degree = r;
  q.eval = [r](const std::vector<Mat>& args) {
    const cplx c(0, 1.0 / (2.0 * std::numbers::pi));
    // Polarization over subsets: P(A_1..A_r) = (1/r!) sum_S (-1)^{r-|S|} c_r(sum_S A).
    cplx total = 0;
    const unsigned full = 1u << r;
    double fact = 1;
    for (int k = 2; k <= r; ++k) fact *= k;
    for (unsigned s = 1; s < full; ++s) {
      Mat sum = Mat::Zero(args[0].rows(), args[0].cols());
      int size = 0;
      for (int i = 0; i < r; ++i)
        if (s & (1u << i)) {
          sum += args[static_cast<std::size_t>(i)];
          ++size;
        }
      cplx v = elementary_symmetric(c * sum, r)[static_cast<std::size_t>(r)];
      total += ((r - size) % 2 ? -v : v);
    }
    return total / fact;
  };
  return q;
}

Eigen::MatrixXd ad_matrix(const MatrixGroup& g, const Mat& x) {
  Eigen::MatrixXd a(g.dim(), g.dim());
  for (int b = 0; b < g.dim(); ++b) a.col(b) = g.coords(bracket(x, g.basis()[static_cast<std::size_t>(b)]));
  return a;
}

Eigen::MatrixXd left_dexp(const MatrixGroup& g, const Mat& x) {
  const Eigen::MatrixXd a = ad_matrix(g, x);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(g.dim(), g.dim());
  Eigen::MatrixXd out = term;
  for (int n = 1; n < 120; ++n) {
    term = -a * term / static_cast<double>(n + 1);
    out += term;
    if (term.norm() < 1e-18 * out.norm()) break;
  }
  return out;
}

}  // namespace kanform
