#include "curvlab/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace curvlab {

double frobenius(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double rel_residual(std::span<const double> lhs, std::span<const double> rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("rel_residual: size mismatch");
  double diff = 0.0, nl = 0.0, nr = 0.0;
  for (size_t i = 0; i < lhs.size(); ++i) {
    const double d = lhs[i] - rhs[i];
    diff += d * d;
    nl += lhs[i] * lhs[i];
    nr += rhs[i] * rhs[i];
  }
  return std::sqrt(diff) / std::max(1.0, std::sqrt(nl) + std::sqrt(nr));
}

MetricPoint MetricPoint::make(const Mat& g) {
  const int n = g.rows();
  if (n < 2 || n > kMaxDimension || g.cols() != n)
    throw std::invalid_argument("MetricPoint: dimension out of range");
  if (!g.is_symmetric(0.0)) throw std::invalid_argument("MetricPoint: metric not symmetric");
  LuFactor lu(g);
  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(g(i, j)));
  const double d = lu.det();
  if (lu.singular() || std::abs(d) <= 1e-12 * std::pow(scale, n))
    throw std::invalid_argument("MetricPoint: metric is degenerate");
  MetricPoint m;
  m.n = n;
  m.g = g;
  m.g_inv = lu.inverse();
  m.det = d;
  const SymEigen e = sym_eigen(g);
  m.signature = 0;
  for (double v : e.values)
    if (v < 0.0) ++m.signature;
  return m;
}

MetricPoint MetricPoint::euclidean(int n) { return make(Mat::identity(n)); }

MetricPoint MetricPoint::minkowski(int n) {
  std::vector<double> d(n, 1.0);
  d[0] = -1.0;
  return make(Mat::diag(d));
}

Sym2 Sym2::from_diag(const std::vector<double>& d) {
  Sym2 s(static_cast<int>(d.size()));
  for (int i = 0; i < s.n; ++i) s.set(i, i, d[i]);
  return s;
}

Sym2 Sym2::from_matrix(const Mat& m, double tol) {
  if (!m.is_symmetric(tol)) throw std::invalid_argument("Sym2: matrix not symmetric");
  Sym2 s(m.rows());
  for (int i = 0; i < s.n; ++i)
    for (int j = i; j < s.n; ++j) s.set(i, j, m(i, j));
  return s;
}

Ten4 lincomb(double ca, const Ten4& a, double cb, const Ten4& b) {
  Ten4 r(a.n);
  for (size_t i = 0; i < r.t.size(); ++i) r.t[i] = ca * a.t[i] + cb * b.t[i];
  return r;
}

Ten6 lincomb(double ca, const Ten6& a, double cb, const Ten6& b) {
  Ten6 r(a.n);
  for (size_t i = 0; i < r.t.size(); ++i) r.t[i] = ca * a.t[i] + cb * b.t[i];
  return r;
}

Sym2 lincomb(double ca, const Sym2& a, double cb, const Sym2& b) {
  Sym2 r(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = i; j < a.n; ++j) r.set(i, j, ca * a(i, j) + cb * b(i, j));
  return r;
}

Ten4 scaled(double c, const Ten4& a) {
  Ten4 r(a.n);
  for (size_t i = 0; i < r.t.size(); ++i) r.t[i] = c * a.t[i];
  return r;
}

Ten6 scaled(double c, const Ten6& a) {
  Ten6 r(a.n);
  for (size_t i = 0; i < r.t.size(); ++i) r.t[i] = c * a.t[i];
  return r;
}

Sym2 scaled(double c, const Sym2& a) {
  Sym2 r(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = i; j < a.n; ++j) r.set(i, j, c * a(i, j));
  return r;
}

Ten4 kn_product(const Sym2& e, const Sym2& t) {
  if (e.n != t.n) throw std::invalid_argument("kn_product: dimension mismatch");
  const int n = e.n;
  Ten4 r(n);
  for (int h = 0; h < n; ++h)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          r.at(h, i, j, k) =
              e(h, k) * t(i, j) + e(i, j) * t(h, k) - e(h, j) * t(i, k) - e(i, k) * t(h, j);
  return r;
}

Ten6 kn_product(const Sym2& e, const Ten4& t) {
  if (e.n != t.n) throw std::invalid_argument("kn_product: dimension mismatch");
  const int n = e.n;
  Ten6 r(n);
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = 0; x2 < n; ++x2)
      for (int x3 = 0; x3 < n; ++x3)
        for (int x4 = 0; x4 < n; ++x4)
          for (int y1 = 0; y1 < n; ++y1)
            for (int y2 = 0; y2 < n; ++y2)
              r.at(x1, x2, x3, x4, y1, y2) = e(x1, x4) * t.at(x2, x3, y1, y2) +
                                             e(x2, x3) * t.at(x1, x4, y1, y2) -
                                             e(x1, x3) * t.at(x2, x4, y1, y2) -
                                             e(x2, x4) * t.at(x1, x3, y1, y2);
  return r;
}

Ten4 big_g(const MetricPoint& m) {
  const int n = m.n;
  Ten4 g4(n);
  for (int h = 0; h < n; ++h)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          g4.at(h, i, j, k) = m.g(i, j) * m.g(h, k) - m.g(h, j) * m.g(i, k);
  return g4;
}

Sym2 sym2_of_metric(const MetricPoint& m) { return Sym2::from_matrix(m.g, 0.0); }

Sym2 metric_power(const Sym2& a, const MetricPoint& m, int k) {
  if (a.n != m.n) throw std::invalid_argument("metric_power: dimension mismatch");
  if (k != 2 && k != 3) throw std::invalid_argument("metric_power: k must be 2 or 3");
  const Mat a2 = a.a * m.g_inv * a.a;
  if (k == 2) return Sym2::from_matrix(a2, 1e-9 * (1.0 + frobenius(a.flat())));
  const Mat a3 = a2 * m.g_inv * a.a;
  return Sym2::from_matrix(a3, 1e-9 * (1.0 + frobenius(a.flat())));
}

double metric_trace(const Sym2& a, const MetricPoint& m) {
  if (a.n != m.n) throw std::invalid_argument("metric_trace: dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) s += m.g_inv(i, j) * a(i, j);
  return s;
}

int numeric_rank(const Sym2& a, double tol_rel) {
  // For a symmetric matrix the singular values are |eigenvalues|; going
  // through A^T A would square the condition number and drown rank-
  // deficient directions in sqrt(eps) noise.
  const SymEigen e = sym_eigen(a.a);
  double largest = 0.0;
  for (double v : e.values) largest = std::max(largest, std::abs(v));
  if (largest == 0.0) return 0;
  int r = 0;
  for (double v : e.values)
    if (std::abs(v) > tol_rel * largest) ++r;
  return r;
}

double ValidatorReport::worst() const {
  return std::max(std::max(antisym_first, antisym_second), std::max(pair_symmetry, bianchi));
}

bool is_generalized_curvature(const Ten4& t, double tol, ValidatorReport* report) {
  const int n = t.n;
  const double norm = std::max(1.0, frobenius(t.flat()));
  double a1 = 0.0, a2 = 0.0, ps = 0.0, bi = 0.0;
  for (int h = 0; h < n; ++h)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const double v = t.at(h, i, j, k);
          a1 += std::pow(v + t.at(i, h, j, k), 2);
          a2 += std::pow(v + t.at(h, i, k, j), 2);
          ps += std::pow(v - t.at(j, k, h, i), 2);
          bi += std::pow(v + t.at(j, h, i, k) + t.at(i, j, h, k), 2);
        }
  ValidatorReport rep;
  rep.antisym_first = std::sqrt(a1) / norm;
  rep.antisym_second = std::sqrt(a2) / norm;
  rep.pair_symmetry = std::sqrt(ps) / norm;
  rep.bianchi = std::sqrt(bi) / norm;
  if (report) *report = rep;
  return rep.worst() <= tol;
}

}  // namespace curvlab
