#include "curvlab/curvature.hpp"

#include <cmath>
#include <stdexcept>

namespace curvlab {

Sym2 ricci(const Ten4& r, const MetricPoint& m) {
  const int n = r.n;
  if (n != m.n) throw std::invalid_argument("ricci: dimension mismatch");
  Sym2 s(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double acc = 0.0;
      for (int h = 0; h < n; ++h)
        for (int a = 0; a < n; ++a) acc += m.g_inv(h, a) * r.at(a, i, j, h);
      s.set(i, j, acc);
    }
  return s;
}

double scalar_of(const Ten4& t, const MetricPoint& m) {
  const Sym2 s = ricci(t, m);
  return metric_trace(s, m);
}

CurvaturePackage weyl_decompose(const Ten4& r, const MetricPoint& m) {
  const int n = m.n;
  if (n < 3) throw std::invalid_argument("weyl_decompose: requires n >= 3");
  CurvaturePackage pkg;
  pkg.m = m;
  pkg.R = r;
  pkg.S = ricci(r, m);
  pkg.kappa = metric_trace(pkg.S, m);
  const Ten4 gs = kn_product(sym2_of_metric(m), pkg.S);
  Ten4 c = lincomb(1.0, r, -1.0 / (n - 2), gs);
  pkg.C = lincomb(1.0, c, pkg.kappa / ((n - 2) * (n - 1)), big_g(m));
  return pkg;
}

Ten6 curvature_action(const Ten4& b, const Ten4& t, const MetricPoint& m, bool* validator_warning) {
  if (validator_warning) *validator_warning = !is_generalized_curvature(b, 1e-10);
  return action_on_ten4(raise_last_slot(b, m), t);
}

Ten4 curvature_action(const Ten4& b, const Sym2& t, const MetricPoint& m, bool* validator_warning) {
  if (validator_warning) *validator_warning = !is_generalized_curvature(b, 1e-10);
  return action_on_sym2(raise_last_slot(b, m), t);
}

double cyclic_sum_residual(const Ten6& q6) {
  const int n = q6.n;
  double acc = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f) {
              const double s = q6.at(a, b, c, d, e, f) + q6.at(c, d, e, f, a, b) +
                               q6.at(e, f, a, b, c, d);
              acc += s * s;
            }
  return std::sqrt(acc) / std::max(1.0, frobenius(q6.flat()));
}

QgKernelResult qg_kernel_test(const Ten4& t, const MetricPoint& m, double tol) {
  const int n = m.n;
  QgKernelResult res;
  const double tnorm = std::max(1.0, frobenius(t.flat()));
  const Ten6 q = tachibana(sym2_of_metric(m), t);
  res.q_norm_rel = frobenius(q.flat()) / tnorm;
  const double kt = scalar_of(t, m);
  const Ten4 diff = lincomb(1.0, t, -kt / ((n - 1.0) * n), big_g(m));
  res.g_dist_rel = frobenius(diff.flat()) / tnorm;
  res.q_vanishes = res.q_norm_rel <= tol;
  res.is_g_multiple = res.g_dist_rel <= tol;
  return res;
}

double prop22_residual(const CurvaturePackage& pkg) {
  const int n = pkg.m.n;
  if (n < 4) throw std::invalid_argument("prop22_residual: requires n >= 4");
  const Ten4 rup = raise_last_slot(pkg.R, pkg.m);
  const Ten4 cup = raise_last_slot(pkg.C, pkg.m);
  const Ten6 rc = action_on_ten4(rup, pkg.C);
  const Ten6 cr = action_on_ten4(cup, pkg.R);
  const Ten6 rr = action_on_ten4(rup, pkg.R);
  const Ten6 cc = action_on_ten4(cup, pkg.C);
  const Sym2 g2 = sym2_of_metric(pkg.m);
  const Sym2 s2 = metric_power(pkg.S, pkg.m, 2);
  const Sym2 bracket = lincomb(-pkg.kappa / (n - 1.0), pkg.S, 1.0, s2);
  const Ten6 qterm = tachibana(g2, kn_product(g2, bracket));
  const Ten6 lhs = lincomb(1.0, rc, 1.0, cr);
  Ten6 rhs = lincomb(1.0, rr, 1.0, cc);
  rhs = lincomb(1.0, rhs, -1.0 / ((n - 2.0) * (n - 2.0)), qterm);
  return rel_residual(lhs.flat(), rhs.flat());
}

uint64_t SplitMix64::next_u64() {
  state_ += 0x9e3779b97f4a7c15ull;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double SplitMix64::next_double(double lo, double hi) {
  const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

Ten4 random_algebraic_curvature(uint64_t seed, int n, int terms) {
  if (terms < 1) throw std::invalid_argument("random_algebraic_curvature: terms >= 1");
  SplitMix64 rng(seed);
  Ten4 out(n);
  for (int t = 0; t < terms; ++t) {
    Sym2 a(n), b(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) a.set(i, j, rng.next_double(-1.0, 1.0));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) b.set(i, j, rng.next_double(-1.0, 1.0));
    out = lincomb(1.0, out, 1.0, kn_product(a, b));
  }
  return out;
}

}  // namespace curvlab
