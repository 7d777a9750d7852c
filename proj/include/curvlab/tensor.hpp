#ifndef CURVLAB_TENSOR_HPP
#define CURVLAB_TENSOR_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "curvlab/linalg.hpp"

// Pointwise tensor algebra on a single tangent space. All covariant
// tensors are stored dense in row-major multi-index order; the default
// dimension cap is 12 (n^6 is still under 3M doubles there).
//
// Sign conventions, fixed once and used by every downstream formula:
//   (X wedge_A Y)Z = A(Y,Z) X - A(X,Z) Y
//   G(X1,X2,X3,X4) = g((X1 wedge_g X2)X3, X4),  G = (1/2) g^g
// so G_1212 = -1 for the identity metric in dimension 2.

namespace curvlab {

inline constexpr int kMaxDimension = 12;

// Relative residual used everywhere: stable for near-zero tensors.
//   res(L, R) = |L - R|_F / max(1, |L|_F + |R|_F)
double rel_residual(std::span<const double> lhs, std::span<const double> rhs);
double frobenius(std::span<const double> v);

// The metric at one point: g, its inverse, and the signature (number of
// negative eigenvalues). Inversion is LU with partial pivoting so that
// Lorentzian and other indefinite signatures are first-class.
struct MetricPoint {
  int n = 0;
  Mat g;
  Mat g_inv;
  int signature = 0;  // count of negative eigenvalues of g
  double det = 0.0;

  // Throws std::invalid_argument on asymmetry, degeneracy or dimension
  // out of range (2 <= n <= kMaxDimension).
  static MetricPoint make(const Mat& g);
  static MetricPoint euclidean(int n);
  static MetricPoint minkowski(int n);  // diag(-1, 1, ..., 1)
};

// Symmetric (0,2) tensor. Writes go through set() which mirrors, so
// symmetry is exact by construction.
struct Sym2 {
  int n = 0;
  Mat a;

  Sym2() = default;
  explicit Sym2(int dim) : n(dim), a(dim, dim) {}

  static Sym2 from_diag(const std::vector<double>& d);
  // Requires an exactly symmetric matrix (upper triangle is mirrored).
  static Sym2 from_matrix(const Mat& m, double tol = 1e-12);

  double operator()(int i, int j) const { return a(i, j); }
  void set(int i, int j, double v) {
    a(i, j) = v;
    a(j, i) = v;
  }

  std::span<const double> flat() const { return {a.data(), static_cast<size_t>(n) * n}; }
};

// Dense (0,4) tensor; also the storage for generalized curvature tensors
// (their symmetries are checked by a validator, not enforced here).
struct Ten4 {
  int n = 0;
  std::vector<double> t;

  Ten4() = default;
  explicit Ten4(int dim) : n(dim), t(static_cast<size_t>(dim) * dim * dim * dim, 0.0) {}

  double& at(int h, int i, int j, int k) {
    return t[(((static_cast<size_t>(h) * n + i) * n) + j) * n + k];
  }
  double at(int h, int i, int j, int k) const {
    return t[(((static_cast<size_t>(h) * n + i) * n) + j) * n + k];
  }

  std::span<const double> flat() const { return {t.data(), t.size()}; }
};

using CurvTensor = Ten4;

// Dense (0,6) tensor, produced by B.T and Q(A,T).
struct Ten6 {
  int n = 0;
  std::vector<double> t;

  Ten6() = default;
  explicit Ten6(int dim) : n(dim), t(static_cast<size_t>(dim) * dim * dim * dim * dim * dim, 0.0) {}

  size_t index(int a, int b, int c, int d, int e, int f) const {
    return ((((static_cast<size_t>(a) * n + b) * n + c) * n + d) * n + e) * n + f;
  }
  double& at(int a, int b, int c, int d, int e, int f) { return t[index(a, b, c, d, e, f)]; }
  double at(int a, int b, int c, int d, int e, int f) const { return t[index(a, b, c, d, e, f)]; }

  std::span<const double> flat() const { return {t.data(), t.size()}; }
};

using Cov6 = Ten6;

// Elementwise linear combinations.
Ten4 lincomb(double ca, const Ten4& a, double cb, const Ten4& b);
Ten6 lincomb(double ca, const Ten6& a, double cb, const Ten6& b);
Sym2 lincomb(double ca, const Sym2& a, double cb, const Sym2& b);
Ten4 scaled(double c, const Ten4& a);
Ten6 scaled(double c, const Ten6& a);
Sym2 scaled(double c, const Sym2& a);

// Kulkarni-Nomizu products.
//   (E^T)(X1..X4, Y..) = E(X1,X4) T(X2,X3,Y..) + E(X2,X3) T(X1,X4,Y..)
//                      - E(X1,X3) T(X2,X4,Y..) - E(X2,X4) T(X1,X3,Y..)
Ten4 kn_product(const Sym2& e, const Sym2& t);
Ten6 kn_product(const Sym2& e, const Ten4& t);

// G = (1/2) g^g.
Ten4 big_g(const MetricPoint& m);

// The metric itself viewed as a Sym2.
Sym2 sym2_of_metric(const MetricPoint& m);

// A composed with itself k-1 times through the metric: A^2 = A g^-1 A, etc.
// k must be 2 or 3.
Sym2 metric_power(const Sym2& a, const MetricPoint& m, int k);

// g^{ij} A_ij.
double metric_trace(const Sym2& a, const MetricPoint& m);

// Count of singular values above tol_rel times the largest one.
int numeric_rank(const Sym2& a, double tol_rel = 1e-9);

// Generalized-curvature validator: antisymmetry in both pairs, pair
// symmetry, first Bianchi (cyclic over the first three slots). Residuals
// are relative to the tensor's own Frobenius norm.
struct ValidatorReport {
  double antisym_first = 0.0;
  double antisym_second = 0.0;
  double pair_symmetry = 0.0;
  double bianchi = 0.0;
  double worst() const;
};

bool is_generalized_curvature(const Ten4& t, double tol, ValidatorReport* report = nullptr);

}  // namespace curvlab

#endif
