#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace kanform {

using Mat = Eigen::MatrixXcd;
using cplx = std::complex<double>;

enum class Family { U, SU, SO };

/// Compact matrix group with a real basis of its Lie algebra.  Tangent
/// vectors are always left-trivialized: the Lie algebra element xi stands
/// for g*xi at g.
class MatrixGroup {
 public:
  MatrixGroup(Family family, int n);
  /// "SU2", "U3", "SO3" and the JSON spellings family/n.
  static MatrixGroup parse(const std::string& name);

  Family family() const { return family_; }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Mat>& basis() const { return basis_; }
  std::string name() const;

  Mat identity() const { return Mat::Identity(n_, n_); }
  Mat exp(const Mat& x) const;
  Mat log(const Mat& g) const;

  /// Real coordinates of x in the basis (least squares for off-algebra x).
  Eigen::VectorXd coords(const Mat& x) const;
  Mat from_coords(const Eigen::VectorXd& c) const;
  /// Orthogonal projection onto the Lie algebra.
  Mat project(const Mat& x) const { return from_coords(coords(x)); }

  Mat random_algebra(std::mt19937_64& rng, double scale = 1.0) const;
  Mat random_element(std::mt19937_64& rng, double scale = 1.0) const;

  /// Distance from satisfying the group constraints.
  double point_residual(const Mat& g) const;
  double algebra_residual(const Mat& x) const;

 private:
  Family family_;
  int n_;
  std::vector<Mat> basis_;
  Eigen::MatrixXd gram_inv_;
};

inline Mat bracket(const Mat& a, const Mat& b) { return a * b - b * a; }
/// Ad_g x = g x g^{-1} for unitary g.
inline Mat ad(const Mat& g, const Mat& x) { return g * x * g.adjoint(); }
inline Mat ad_inv(const Mat& g, const Mat& x) { return g.adjoint() * x * g; }

/// Real matrix of ad_x in the basis of g.
Eigen::MatrixXd ad_matrix(const MatrixGroup& g, const Mat& x);
/// Left-trivialized differential of exp at x, (1 - e^{-ad x}) / ad x, as a
/// real matrix in the basis of g.
Eigen::MatrixXd left_dexp(const MatrixGroup& g, const Mat& x);

/// Invariant symmetric multilinear form on the Lie algebra of degree r.
struct InvariantPolynomial {
  std::string name;
  int degree = 0;
  std::function<cplx(const std::vector<Mat>&)> eval;

  double real(const std::vector<Mat>& args) const { return eval(args).real(); }
  double operator()(const std::vector<Mat>& args) const { return real(args); }
};

/// Q(A,B) = scale * tr(AB).  scale = -1/(8 pi^2) is the basic
/// normalization on SU(n).
InvariantPolynomial trace_form(double scale, std::string name = "trace_form");
InvariantPolynomial basic_trace_form();
/// Polarized r-th Chern polynomial: coefficient of lambda^r in
/// det(I + lambda * (i/2pi) A).
InvariantPolynomial chern_polynomial(int r);

/// Elementary symmetric functions e_0..e_r of the eigenvalues of A.
std::vector<cplx> elementary_symmetric(const Mat& a, int r);

}  // namespace kanform
