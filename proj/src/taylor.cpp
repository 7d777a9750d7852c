#include "curvlab/taylor.hpp"

#include <cassert>
#include <cmath>

namespace curvlab {

TaylorScalar TaylorScalar::variable(int n, int index, double x) {
  TaylorScalar t(n, x);
  t.g_[index] = 1.0;
  return t;
}

TaylorScalar TaylorScalar::operator-() const {
  TaylorScalar r(n_, -v_);
  for (int i = 0; i < n_; ++i) r.g_[i] = -g_[i];
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.h_(i, j) = -h_(i, j);
  return r;
}

TaylorScalar& TaylorScalar::operator+=(const TaylorScalar& o) {
  assert(n_ == o.n_);
  v_ += o.v_;
  for (int i = 0; i < n_; ++i) g_[i] += o.g_[i];
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) h_(i, j) += o.h_(i, j);
  return *this;
}

TaylorScalar operator+(const TaylorScalar& a, const TaylorScalar& b) {
  TaylorScalar r = a;
  r += b;
  return r;
}

TaylorScalar operator-(const TaylorScalar& a, const TaylorScalar& b) {
  TaylorScalar r = a;
  r += -b;
  return r;
}

TaylorScalar operator*(const TaylorScalar& a, const TaylorScalar& b) {
  assert(a.n_ == b.n_);
  const int n = a.n_;
  TaylorScalar r(n, a.v_ * b.v_);
  for (int i = 0; i < n; ++i) r.g_[i] = a.g_[i] * b.v_ + a.v_ * b.g_[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r.h_(i, j) = a.h_(i, j) * b.v_ + a.v_ * b.h_(i, j) + a.g_[i] * b.g_[j] + a.g_[j] * b.g_[i];
  return r;
}

TaylorScalar operator/(const TaylorScalar& a, const TaylorScalar& b) {
  assert(a.n_ == b.n_);
  const int n = a.n_;
  TaylorScalar q(n, a.v_ / b.v_);
  for (int i = 0; i < n; ++i) q.g_[i] = (a.g_[i] - q.v_ * b.g_[i]) / b.v_;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      q.h_(i, j) =
          (a.h_(i, j) - q.v_ * b.h_(i, j) - q.g_[i] * b.g_[j] - q.g_[j] * b.g_[i]) / b.v_;
  return q;
}

TaylorScalar operator+(double a, const TaylorScalar& b) {
  TaylorScalar r = b;
  return (r += TaylorScalar::constant(b.n_, a));
}
TaylorScalar operator-(double a, const TaylorScalar& b) { return TaylorScalar::constant(b.n_, a) + (-b); }
TaylorScalar operator*(double a, const TaylorScalar& b) {
  TaylorScalar r = b;
  r.v_ *= a;
  for (int i = 0; i < r.n_; ++i) r.g_[i] *= a;
  for (int i = 0; i < r.n_; ++i)
    for (int j = 0; j < r.n_; ++j) r.h_(i, j) *= a;
  return r;
}
TaylorScalar operator/(double a, const TaylorScalar& b) { return TaylorScalar::constant(b.n_, a) / b; }
TaylorScalar operator+(const TaylorScalar& a, double b) { return b + a; }
TaylorScalar operator-(const TaylorScalar& a, double b) { return a + (-b); }
TaylorScalar operator*(const TaylorScalar& a, double b) { return b * a; }
TaylorScalar operator/(const TaylorScalar& a, double b) { return (1.0 / b) * a; }

TaylorScalar TaylorScalar::chain(const TaylorScalar& a, double f, double fp, double fpp) {
  const int n = a.n_;
  TaylorScalar r(n, f);
  for (int i = 0; i < n; ++i) r.g_[i] = fp * a.g_[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.h_(i, j) = fp * a.h_(i, j) + fpp * a.g_[i] * a.g_[j];
  return r;
}

TaylorScalar sin(const TaylorScalar& a) {
  return TaylorScalar::chain(a, std::sin(a.v_), std::cos(a.v_), -std::sin(a.v_));
}

TaylorScalar cos(const TaylorScalar& a) {
  return TaylorScalar::chain(a, std::cos(a.v_), -std::sin(a.v_), -std::cos(a.v_));
}

TaylorScalar exp(const TaylorScalar& a) {
  const double e = std::exp(a.v_);
  return TaylorScalar::chain(a, e, e, e);
}

TaylorScalar sqrt(const TaylorScalar& a) {
  const double s = std::sqrt(a.v_);
  return TaylorScalar::chain(a, s, 0.5 / s, -0.25 / (s * a.v_));
}

TaylorScalar pow(const TaylorScalar& a, int k) {
  if (k == 0) return TaylorScalar::constant(a.n_, 1.0);
  if (k < 0) return 1.0 / pow(a, -k);
  TaylorScalar r = a;
  for (int i = 1; i < k; ++i) r = r * a;
  return r;
}

}  // namespace curvlab
