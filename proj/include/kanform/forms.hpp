#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "kanform/liegroup.hpp"

namespace kanform {

/// Point of G^N and a left-trivialized tangent vector there.
using Point = std::vector<Mat>;
using Tangent = std::vector<Mat>;

/// Numerically evaluable element of Omega_G^{i,j}(G^N): i is twice the
/// polynomial degree in the Lie algebra variable X, j the form degree.
struct EquivariantForm {
  int factors = 0;
  int i = 0;
  int j = 0;
  std::function<double(const Point&, const Mat& x, const std::vector<Tangent>&)> eval;

  double operator()(const Point& p, const Mat& x, const std::vector<Tangent>& v) const {
    return eval(p, x, v);
  }
  int total_degree() const { return i + j; }
};

EquivariantForm zero_form(int factors, int i, int j);
EquivariantForm scaled(const EquivariantForm& f, double s);
/// Sum of forms of equal type.  Empty input is not allowed.
EquivariantForm sum(std::vector<EquivariantForm> terms);

/// Map G^N -> G^M whose components are words in the N factors.
struct WordMap {
  int inputs = 0;
  std::vector<std::vector<std::pair<int, int>>> outputs;  // (input index, +-1)

  int size() const { return static_cast<int>(outputs.size()); }
  Point apply(const Point& p) const;
  Tangent push(const Point& p, const Tangent& v) const;
};

/// Left-trivialized derivative of a single word: w^{-1} dw.
Mat word_pushforward(const std::vector<std::pair<int, int>>& word, const Point& p,
                     const Tangent& v);
Mat evaluate_word(const std::vector<std::pair<int, int>>& word, const Point& p, int n);

EquivariantForm pullback(const EquivariantForm& f, const WordMap& m);

/// Nerve face maps G^{k+1} -> G^k: l = 0 drops g_1, 0 < l <= k merges
/// g_l g_{l+1}, l = k+1 drops g_{k+1}.
WordMap nerve_face(int k, int l);

/// Simplicial coboundary sum_l (-1)^l (face_l)^* : forms on G^k -> G^{k+1}.
EquivariantForm delta_nat(const EquivariantForm& f);

/// Conjugation fundamental field X_M at p, left-trivialized per factor:
/// g^{-1} X g - X.
Tangent conjugation_field(const Point& p, const Mat& x);

/// (delta_G f)(X; v..) = -f(X; X_M, v..).
EquivariantForm delta_g(const EquivariantForm& f);

struct FdOptions {
  double step = 1e-4;
  bool richardson = true;
};

/// Exterior derivative by central differences along left-invariant fields:
/// d f(V_0..V_j) = sum_a (-1)^a V_a f(..^a..) + sum_{a<b} (-1)^{a+b} f([V_a,V_b], ..).
EquivariantForm exterior_derivative(const EquivariantForm& f, const FdOptions& o = {});

/// Derivative of a scalar function along the curve s -> p exp(s v).
double directional_derivative(const std::function<double(const Point&)>& f, const Point& p,
                              const Tangent& v, const FdOptions& o = {});

/// Point moved along exp in each factor: g_l exp(s v_l).
Point flow(const Point& p, const Tangent& v, double s);

/// Random point of G^N and random tangent.
Point random_point(const MatrixGroup& g, int n, std::mt19937_64& rng, double scale = 1.0);
Tangent random_tangent(const MatrixGroup& g, int n, std::mt19937_64& rng);

}  // namespace kanform
