#ifndef CURVLAB_TAYLOR_HPP
#define CURVLAB_TAYLOR_HPP

#include <vector>

#include "curvlab/linalg.hpp"

// Second-order forward-mode scalar: value, gradient and full Hessian with
// respect to the chart coordinates. The Riemann tensor needs second
// derivatives of the metric, and at n <= 12 carrying the whole O(n^2)
// tangent per scalar is cheap and avoids nested-dual bookkeeping.

namespace curvlab {

class TaylorScalar {
public:
  TaylorScalar() = default;
  TaylorScalar(int n, double value) : n_(n), v_(value), g_(n, 0.0), h_(n, n) {}

  // Seed for coordinate `index`: value x, gradient e_index, zero Hessian.
  static TaylorScalar variable(int n, int index, double x);
  static TaylorScalar constant(int n, double c) { return TaylorScalar(n, c); }

  int dim() const { return n_; }
  double value() const { return v_; }
  double grad(int i) const { return g_[i]; }
  double hess(int i, int j) const { return h_(i, j); }

  TaylorScalar operator-() const;
  TaylorScalar& operator+=(const TaylorScalar& o);

  friend TaylorScalar operator+(const TaylorScalar& a, const TaylorScalar& b);
  friend TaylorScalar operator-(const TaylorScalar& a, const TaylorScalar& b);
  friend TaylorScalar operator*(const TaylorScalar& a, const TaylorScalar& b);
  friend TaylorScalar operator/(const TaylorScalar& a, const TaylorScalar& b);
  friend TaylorScalar operator+(double a, const TaylorScalar& b);
  friend TaylorScalar operator-(double a, const TaylorScalar& b);
  friend TaylorScalar operator*(double a, const TaylorScalar& b);
  friend TaylorScalar operator/(double a, const TaylorScalar& b);
  friend TaylorScalar operator+(const TaylorScalar& a, double b);
  friend TaylorScalar operator-(const TaylorScalar& a, double b);
  friend TaylorScalar operator*(const TaylorScalar& a, double b);
  friend TaylorScalar operator/(const TaylorScalar& a, double b);

  friend TaylorScalar sin(const TaylorScalar& a);
  friend TaylorScalar cos(const TaylorScalar& a);
  friend TaylorScalar exp(const TaylorScalar& a);
  friend TaylorScalar sqrt(const TaylorScalar& a);
  friend TaylorScalar pow(const TaylorScalar& a, int k);

private:
  // Chain rule for f(a): value f, gradient f' da, Hessian f' d2a + f'' da x da.
  static TaylorScalar chain(const TaylorScalar& a, double f, double fp, double fpp);

  int n_ = 0;
  double v_ = 0.0;
  std::vector<double> g_;
  Mat h_;
};

}  // namespace curvlab

#endif
