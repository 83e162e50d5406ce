#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kanform/chains.hpp"
#include "kanform/forms.hpp"
#include "kanform/shulman.hpp"
#include "kanform/simplicial.hpp"

namespace kanform {

/// Forms keyed by (i, j, k): X-degree 2m, form degree, and the index of the
/// space they live on (nerve degree k for G^k, simplicial degree q for H_q).
using GradedForms = std::map<std::tuple<int, int, int>, EquivariantForm>;

/// Values of a representation K_q -> G on named generators.
struct RepPoint {
  int q = 0;
  std::map<std::string, Mat> values;
};

/// H_q = Hom(K_q, G), one factor of G per generator of K_q (degenerate
/// generators included) in the order of all_generators(q).
class RepSpace {
 public:
  RepSpace(const FreeSimplicialGroup& k, int q);

  int q() const { return q_; }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generators() const { return names_; }
  /// Throws InputError for names that are not generators of K_q.
  int index(const std::string& name) const;

  std::vector<std::pair<int, int>> word_indices(const Word& w) const;
  /// Evaluation at a bar tuple, H_q -> G^k.
  WordMap evaluation(const BarTuple& t) const;
  /// delta^l : H_{q-1} -> H_q, phi -> phi o d_l.  Requires q >= 1.
  WordMap coface(int l) const;

  Point pack(const RepPoint& p) const;
  RepPoint unpack(const Point& p) const;

 private:
  const FreeSimplicialGroup* k_;
  int q_;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

/// Evaluates the tuple at p and pushes the tangents along the word maps.
std::pair<Point, std::vector<Tangent>> evaluation_pushforward(const RepSpace& h,
                                                              const BarTuple& t, const Point& p,
                                                              const std::vector<Tangent>& v);

/// Sign attached to bar degree k in the pairing: (-1)^{(k-1)(k+2)/2}.
int pairing_sign(int k);

/// <Omega, c>: for every term n [a_1|...|a_k] of c_{k,q} and every
/// component of Omega on G^k, n * pairing_sign(k) times the pullback along
/// evaluation at the tuple.  Output keyed (i, j, q).
GradedForms pair(const FreeSimplicialGroup& k, const GradedForms& omega, const Chain& c);

/// Alternating sum of coface pullbacks Omega(H_q) -> Omega(H_{q-1}).
EquivariantForm sharp_pullback(const FreeSimplicialGroup& k, const EquivariantForm& f, int q);

/// D = d + delta_G + (-1)^{i+j} partial_sharp on forms over H_sharp.  With
/// `sharp = false` only d + delta_G is applied (the fixed-q complex).
GradedForms total_D(const FreeSimplicialGroup& k, const GradedForms& f, bool sharp = true,
                    const FdOptions& o = {});

/// d + (-1)^{k} partial_simp on the bar side without normalization; used
/// where pointwise identities need the raw boundary.
Chain raw_total_boundary(const FreeSimplicialGroup& k, const Chain& c);

struct IdentityResidual {
  std::tuple<int, int, int> target;
  double residual = 0;    // worst |lhs - rhs|
  double magnitude = 0;   // worst |lhs|
  double boundary = 0;    // worst |<Omega, dc>| contribution
};

struct IdentityReport {
  bool sharp = true;
  int samples = 0;
  double worst = 0;
  std::vector<IdentityResidual> rows;
};

/// Samples D<Omega,c> against <d_G Omega, c> + (-1)^{|Omega|} <Omega, dc>
/// where d is the raw total boundary (sharp = true) or the bar boundary
/// alone (sharp = false, the fixed-q identity).  Omega must be
/// homogeneous of total degree `total_degree`.
IdentityReport differential_identity_check(const FreeSimplicialGroup& k, const MatrixGroup& g,
                                           const GradedForms& omega, int total_degree,
                                           const Chain& c, int samples, std::mt19937_64& rng,
                                           bool sharp = true);

/// Exterior product on G^{k+k'} of forms on G^k and G^{k'}.
EquivariantForm wedge(const EquivariantForm& a, const EquivariantForm& b);
GradedForms wedge(const GradedForms& a, const GradedForms& b);

/// Parameter domain of a plot.
struct ParamDomain {
  std::string kind = "box";  // box, torus or interval
  int dim = 1;
  std::vector<std::pair<double, double>> bounds;

  std::vector<double> sample(std::mt19937_64& rng) const;
};

/// Explicit family F_q : W x Delta_q -> H_q, one map per simplicial degree.
/// t is barycentric (t_0..t_q).
struct Plot {
  using Map = std::function<Point(const std::vector<double>& w, const std::vector<double>& t)>;
  ParamDomain domain;
  std::map<int, Map> maps;
  bool equivariant = false;
};

/// Worst mismatch of F_q restricted to the face t_l = 0 against
/// delta^l o F_{q-1}, over `samples` parameter points.
double plot_face_defect(const FreeSimplicialGroup& k, const Plot& f, int samples,
                        std::mt19937_64& rng);

/// Form on the parameter domain: tangents are coordinate vectors in R^dim.
struct ParamForm {
  int i = 0;
  int j = 0;
  std::function<double(const std::vector<double>& w, const Mat& x,
                       const std::vector<std::vector<double>>& u)>
      eval;

  double operator()(const std::vector<double>& w, const Mat& x,
                    const std::vector<std::vector<double>>& u) const {
    return eval(w, x, u);
  }
};

/// Keyed by (i, j).
using ParamForms = std::map<std::pair<int, int>, ParamForm>;

/// I = sum_q I_q: pulls each (i, j, q) form back along F_q and integrates
/// the Delta_q directions (inserted first) by quadrature, leaving an
/// (i, j - q) form on W.  I_q carries the sign (-1)^{qj + q(q+3)/2}, so that
/// (d + delta_G) I = I D for equivariant plots.  Throws InputError when a needed degree is missing.
/// `rules` overrides the default simplex rule per degree.
ParamForms integrate_over_plot(const GradedForms& forms, const Plot& f,
                               const FdOptions& o = {},
                               const std::map<int, SimplexRule>& rules = {});

/// Exterior derivative of a parameter form by central differences.
ParamForm param_exterior_derivative(const ParamForm& f, const FdOptions& o = {});
ParamForm param_sum(std::vector<ParamForm> terms);
ParamForm param_scaled(const ParamForm& f, double s);
/// (delta_G f)(X; u..) = -f(X; X_W, u..) for the fundamental field X_W of
/// the G-action on the parameter domain.
using ParamField = std::function<std::vector<double>(const std::vector<double>& w, const Mat& x)>;
ParamForm param_delta_g(const ParamForm& f, ParamField field);

}  // namespace kanform
