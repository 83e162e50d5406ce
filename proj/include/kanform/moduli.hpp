#pragma once

#include <random>
#include <string>
#include <vector>

#include "kanform/cyclelift.hpp"
#include "kanform/pairing.hpp"

namespace kanform {

/// K for a 2-complex with one 0-cell and one 2-cell: the generators in
/// degree 0 and a degree-1 generator "r" with faces (relator, 1).  Throws
/// InputError unless every exponent sum of the relator vanishes.
FreeSimplicialGroup one_relator_group(const std::vector<std::string>& gens, const Word& relator,
                                      int max_degree = 3);

struct ModuliPoint {
  Point w;  // values of the degree-0 generators
  Mat x;    // exp(x) = r(w)
};

/// Pairs (w, X) in G^n x O with exp(X) = r(w), where O is the regular
/// locus of exp.
class ExtendedModuli {
 public:
  ExtendedModuli(int genus, MatrixGroup g);
  ExtendedModuli(std::vector<std::string> gens, Word relator, MatrixGroup g);

  const MatrixGroup& group() const { return g_; }
  const FreeSimplicialGroup& complex() const { return k_; }
  const Word& relator() const { return relator_; }
  const std::vector<std::string>& generators() const { return gens_; }
  int rank() const { return static_cast<int>(gens_.size()); }
  int dimension() const { return rank() * g_.dim(); }

  Mat relator_value(const Point& w) const;
  double residual(const ModuliPoint& p) const;
  /// No eigenvalue of ad_x within `margin` of 2 pi i Z \ {0}.
  bool regular(const Mat& x, double margin = 1e-3) const;
  /// Newton iteration for exp(x) = r(w) from x0 with w fixed.  Throws
  /// InputError when it does not converge inside O.
  Mat solve_x(const Point& w, const Mat& x0) const;
  /// Gauss-Newton projection of (w, x) jointly, using the pseudo-inverse of
  /// the constraint Jacobian.
  ModuliPoint project(const ModuliPoint& seed) const;
  ModuliPoint conjugate(const ModuliPoint& p, const Mat& k) const;
  /// The X-component of the tangent vector over xi: J(x) y = r^{-1} dr(xi).
  Mat lift_tangent(const ModuliPoint& p, const Tangent& xi) const;
  double tangent_residual(const ModuliPoint& p, const Tangent& xi, const Mat& y) const;

 private:
  MatrixGroup g_;
  std::vector<std::string> gens_;
  Word relator_;
  FreeSimplicialGroup k_;
  std::vector<std::pair<int, int>> relator_word_;
};

/// Chart of M near a base point: a in R^{rank * dim G}, w_l = base_l exp(a_l),
/// X continued from the base by Newton.
class ModuliChart {
 public:
  ModuliChart(ExtendedModuli m, ModuliPoint base, double radius = 0.3);

  const ExtendedModuli& moduli() const { return m_; }
  const ModuliPoint& base() const { return base_; }
  double radius() const { return radius_; }

  ModuliPoint point(const std::vector<double>& a) const;
  std::vector<double> sample(std::mt19937_64& rng) const;
  /// Conjugation fundamental field in chart coordinates.
  std::vector<double> fundamental_field(const std::vector<double>& a, const Mat& x) const;

 private:
  ExtendedModuli m_;
  ModuliPoint base_;
  double radius_;
};

/// Seed near the identity projected onto M.
ModuliPoint random_moduli_point(const ExtendedModuli& m, std::mt19937_64& rng, double scale = 0.5);

/// F_0(a) = w(a); F_1(a; t) sends the degenerate generators to w(a) and r to
/// exp(t_1 X(a)).  Equivariant.
Plot moduli_plot(const ModuliChart& chart);

struct SurfaceForms {
  ParamForm omega;  // (0, 2)
  ParamForm mu;     // (2, 0), linear in X
  GradedForms paired;
};

/// omega_c and mu_sharp as forms on the chart.  With drop_c20 the bar
/// 2-chain is left out of mu (not of omega).
SurfaceForms surface_two_form(const ModuliChart& chart, const InvariantPolynomial& q,
                              const Chain& cycle, bool drop_c20 = false);

/// mu(p) in g with Q(mu, X) = mu_sharp(X).
Mat moment_value(const SurfaceForms& f, const MatrixGroup& g, const InvariantPolynomial& q,
                 const std::vector<double>& a);

/// Singular values of omega_c at chart coordinates a, largest first.  The
/// form is not asserted nondegenerate; callers report its numerical rank.
std::vector<double> omega_singular_values(const ModuliChart& chart, const ParamForm& omega,
                                          const std::vector<double>& a);
int numerical_rank(const std::vector<double>& singular, double rel_tol = 1e-8);

struct MomentumReport {
  int samples = 0;
  double closedness = 0;      // worst |d omega|
  double literal = 0;         // worst |delta_G omega - d mu|
  double opposite = 0;        // worst |delta_G omega + d mu|
  double scale = 0;           // worst |d mu|
  double equivariance = 0;    // worst |omega(conjugated) - omega|
  int realized_sign() const { return opposite < literal ? -1 : 1; }
};

/// Samples closedness of omega_c, both signs of the momentum identity, and
/// invariance under conjugating the chart by a random element.
MomentumReport momentum_check(const ModuliChart& chart, const InvariantPolynomial& q,
                              const Chain& cycle, int samples, std::mt19937_64& rng);

struct KirillovReport {
  int samples = 0;
  double ratio = 0;   // fitted omega / omega_KKS
  double spread = 0;  // std / |mean| of the ratio
  double max_form = 0;
};

/// Restricts the genus-0 2-form to the conjugation orbit of x0 (exp(x0) = e)
/// and compares it with Q(X, [a, b]); `reference` replaces Q in the
/// comparison when given.
KirillovReport kirillov_check(const MatrixGroup& g, const Mat& x0, const InvariantPolynomial& q,
                              int samples, std::mt19937_64& rng,
                              const InvariantPolynomial* reference = nullptr);

/// Real number mod 1, represented in [0, 1).
struct CircleValue {
  double value = 0;
  static CircleValue from_real(double r);
};

/// psi = (0, 1)-part of I<Omega_Q, c> for a threefold cycle c.
ParamForm chern_simons_form(const FreeSimplicialGroup& k, const Chain& cycle, const Plot& f,
                            const InvariantPolynomial& q,
                            const std::map<int, SimplexRule>& rules = {});

struct LoopSpec {
  std::vector<double> base;
  std::vector<double> direction;  // path s -> base + s * direction, s in [0, 1]
  int points = 64;
  bool closed = true;  // trapezoid rule for loops, Gauss-Legendre otherwise
};

struct ChernSimonsReport {
  double raw = 0;       // integral of psi along the path
  CircleValue value;    // raw mod 1
  double distance_to_integer = 0;
  double closedness = 0;     // worst |d psi| at sampled points
  double equivariance = 0;   // worst |delta_G psi(X)| over basis X
};

double path_integral(const ParamForm& psi, const LoopSpec& path);

ChernSimonsReport chern_simons(const FreeSimplicialGroup& k, const Chain& cycle, const Plot& f,
                               const MatrixGroup& g, const InvariantPolynomial& q, const LoopSpec& path,
                               const ParamField& field, int samples, std::mt19937_64& rng,
                               const std::map<int, SimplexRule>& rules = {});

/// Degree-d sweep for the minimal 3-sphere: W = circle x (chart of G acting
/// by conjugation), F_2(s, a; t) = k Phi_d(s, t) k^{-1} with Phi_d = e on the
/// boundary of Delta_2 and at s = 0, 1.  `degree` 0 gives a contractible
/// family.
Plot s3_sweep_plot(const MatrixGroup& g, int degree);
/// Conjugation field on the chart coordinates of s3_sweep_plot.
ParamField s3_sweep_field(const MatrixGroup& g);
/// The plot sending every generator to e.
Plot constant_plot(const FreeSimplicialGroup& k, int max_degree, int matrix_size,
                   const ParamDomain& domain);

/// alpha = <Q^{0,2,2}, c_{2,1}> on H_1.
EquivariantForm alpha_form(const FreeSimplicialGroup& k, const Chain& cycle,
                           const InvariantPolynomial& q);

struct AlphaReport {
  double residual = 0;  // worst |d alpha - i^* lambda|
  double scale = 0;     // worst |i^* lambda|
  double literal = 0;     // worst |delta_G omega - d mu| on H_2 + H_1
  double opposite = 0;    // worst |delta_G omega + d mu|
  int realized_sign() const { return opposite < literal ? -1 : 1; }
};

AlphaReport alpha_check(const FreeSimplicialGroup& k, const Chain& cycle, const MatrixGroup& g,
                        const InvariantPolynomial& q, int samples, std::mt19937_64& rng);

struct CatalogEntry {
  std::string name;     // f_r, b_r^j, a_r
  int r = 0;
  int degree = 0;       // total degree
  int cycle_degree = 0; // |c|, 0 for a_r
  bool free_generator = true;  // |c| < 2|Q|
  std::string chain;
  GradedForms form;     // keyed (i, j, q) over H_q, or (2r, 0, 0) for a_r
  double closedness = -1;  // worst residual, -1 when not verified
};

/// Generators for U(n) and a closed surface of genus l: f_r = <Omega_r, c>,
/// b_r^j = <Omega_r, u_j>, a_r = Q_r.
std::vector<CatalogEntry> un_generator_catalog(int genus, int n, int samples,
                                               std::mt19937_64& rng, bool verify = true);

}  // namespace kanform
