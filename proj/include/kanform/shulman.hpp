#pragma once

#include <array>
#include <map>
#include <tuple>
#include <vector>

#include "kanform/forms.hpp"
#include "kanform/quadrature.hpp"

namespace kanform {

/// Sign choices that the construction leaves open.  The defaults make
/// Omega_Q d_G-closed with Q^{0,3,1} equal to +Q(xi_1, [xi_2, xi_3]).
struct NerveConventions {
  int mu_sign = -1;
  std::array<int, 4> orientation{1, 1, -1, 1};  // fiber-integration sign per q
};

const NerveConventions& default_conventions();

/// Tangent vector of G^q x Delta_q: left-trivialized group part and the
/// components along t_1..t_q (t_0 = 1 - sum).
struct SimplexTangent {
  Tangent xi;
  std::vector<double> dt;
};

/// theta_i(v) for the vertex section h_i = g_{i+1} ... g_q, i = 0..q.
Mat vertex_form(const Point& g, int i, const Tangent& v);
/// The simplicial connection sum_i t_i theta_i.
Mat connection(const Point& g, const std::vector<double>& t, const Tangent& v);
/// Curvature F_q = d theta + [theta, theta]/2 in closed form.
Mat curvature(const Point& g, const std::vector<double>& t, const SimplexTangent& u,
              const SimplexTangent& v);
/// mu_q(X) = sign * sum_i t_i h_i^{-1} X h_i.
Mat moment(const Point& g, const std::vector<double>& t, const Mat& x,
           int sign = default_conventions().mu_sign);

/// Component Q^{2m, 2(r-m)-q, q} of Omega_Q: the fiber integral over Delta_q
/// of the X-degree-m layer binom(r,m) Q(mu^m, F^{r-m}).
EquivariantForm equivariant_component(const InvariantPolynomial& q, int simplex_dim, int m,
                                      const NerveConventions& c = default_conventions(),
                                      const SimplexRule* rule = nullptr);

/// Q^{2r-q,q} = int_{Delta_q} Q(F_q), evaluated through the full
/// permutation expansion of the wedge power.  Independent of
/// equivariant_component; used as its X = 0 oracle.
EquivariantForm shulman_form(const InvariantPolynomial& q, int simplex_dim,
                             const NerveConventions& c = default_conventions());

/// All components with 2i+j+q = 2r, q <= r, for one simplex dimension q.
std::vector<EquivariantForm> equivariant_forms(const InvariantPolynomial& q, int simplex_dim,
                                               const NerveConventions& c = default_conventions());

/// Omega_Q keyed by (i, j, q).
struct OmegaQ {
  int r = 0;
  std::map<std::tuple<int, int, int>, EquivariantForm> components;

  const EquivariantForm* find(int i, int j, int q) const;
  /// Components living on G^k.
  std::vector<EquivariantForm> on_nerve_degree(int k) const;
};

OmegaQ assemble_omega(const InvariantPolynomial& q,
                      const NerveConventions& c = default_conventions());

/// d_G = d + delta_G + (-1)^{i+j} delta_nat applied to a collection of
/// forms, grouped by target (i, j, k).
std::map<std::tuple<int, int, int>, EquivariantForm> total_differential(
    const std::vector<EquivariantForm>& forms, const FdOptions& o = {});

/// Cartan's 3-form Q(xi_1, [xi_2, xi_3]) on G for a quadratic Q.
EquivariantForm cartan_three_form(const InvariantPolynomial& q);

}  // namespace kanform
