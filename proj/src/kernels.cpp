#include "curvlab/kernels.hpp"

#include <stdexcept>

namespace curvlab {

Ten4 raise_last_slot(const Ten4& b, const MetricPoint& m) {
  const int n = b.n;
  if (n != m.n) throw std::invalid_argument("raise_last_slot: dimension mismatch");
  Ten4 up(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int a = 0; a < n; ++a)
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int r = 0; r < n; ++r) s += b.at(p, q, a, r) * m.g_inv(r, l);
          up.at(p, q, a, l) = s;
        }
  return up;
}

namespace {

// One (p,q) slice of (B.T) for (0,4) T. bup rows are indexed [p][q][a][l].
inline void action4_slice(const Ten4& bup, const Ten4& t, int p, int q, Ten6& out) {
  const int n = t.n;
  for (int h = 0; h < n; ++h)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double s = 0.0;
          for (int l = 0; l < n; ++l) {
            s += t.at(l, i, j, k) * bup.at(p, q, h, l);
            s += t.at(h, l, j, k) * bup.at(p, q, i, l);
            s += t.at(h, i, l, k) * bup.at(p, q, j, l);
            s += t.at(h, i, j, l) * bup.at(p, q, k, l);
          }
          out.at(h, i, j, k, p, q) = -s;
        }
}

inline void action2_slice(const Ten4& bup, const Sym2& t, int p, int q, Ten4& out) {
  const int n = t.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int l = 0; l < n; ++l) {
        s += t(l, j) * bup.at(p, q, i, l);
        s += t(i, l) * bup.at(p, q, j, l);
      }
      out.at(i, j, p, q) = -s;
    }
}

// Q(A,T) slice: (X wedge_A Y) e_j = A(q,j) e_p - A(p,j) e_q, so each sum
// over the replaced slot collapses to two terms.
inline void tach4_slice(const Sym2& a, const Ten4& t, int p, int q, Ten6& out) {
  const int n = t.n;
  for (int h = 0; h < n; ++h)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double s = a(q, h) * t.at(p, i, j, k) - a(p, h) * t.at(q, i, j, k);
          s += a(q, i) * t.at(h, p, j, k) - a(p, i) * t.at(h, q, j, k);
          s += a(q, j) * t.at(h, i, p, k) - a(p, j) * t.at(h, i, q, k);
          s += a(q, k) * t.at(h, i, j, p) - a(p, k) * t.at(h, i, j, q);
          out.at(h, i, j, k, p, q) = -s;
        }
}

inline void tach2_slice(const Sym2& a, const Sym2& t, int p, int q, Ten4& out) {
  const int n = t.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = a(q, i) * t(p, j) - a(p, i) * t(q, j);
      s += a(q, j) * t(i, p) - a(p, j) * t(i, q);
      out.at(i, j, p, q) = -s;
    }
}

}  // namespace

Ten6 action_on_ten4(const Ten4& b_raised, const Ten4& t) {
  const int n = t.n;
  if (b_raised.n != n) throw std::invalid_argument("action_on_ten4: dimension mismatch");
  Ten6 out(n);
#pragma omp parallel for collapse(2) schedule(static)
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) action4_slice(b_raised, t, p, q, out);
  return out;
}

Ten6 action_on_ten4_serial(const Ten4& b_raised, const Ten4& t) {
  const int n = t.n;
  if (b_raised.n != n) throw std::invalid_argument("action_on_ten4: dimension mismatch");
  Ten6 out(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) action4_slice(b_raised, t, p, q, out);
  return out;
}

Ten4 action_on_sym2(const Ten4& b_raised, const Sym2& t) {
  const int n = t.n;
  if (b_raised.n != n) throw std::invalid_argument("action_on_sym2: dimension mismatch");
  Ten4 out(n);
#pragma omp parallel for collapse(2) schedule(static)
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) action2_slice(b_raised, t, p, q, out);
  return out;
}

Ten4 action_on_sym2_serial(const Ten4& b_raised, const Sym2& t) {
  const int n = t.n;
  if (b_raised.n != n) throw std::invalid_argument("action_on_sym2: dimension mismatch");
  Ten4 out(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) action2_slice(b_raised, t, p, q, out);
  return out;
}

Ten6 tachibana(const Sym2& a, const Ten4& t) {
  const int n = t.n;
  if (a.n != n) throw std::invalid_argument("tachibana: dimension mismatch");
  Ten6 out(n);
#pragma omp parallel for collapse(2) schedule(static)
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) tach4_slice(a, t, p, q, out);
  return out;
}

Ten6 tachibana_serial(const Sym2& a, const Ten4& t) {
  const int n = t.n;
  if (a.n != n) throw std::invalid_argument("tachibana: dimension mismatch");
  Ten6 out(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) tach4_slice(a, t, p, q, out);
  return out;
}

Ten4 tachibana(const Sym2& a, const Sym2& t) {
  const int n = t.n;
  if (a.n != n) throw std::invalid_argument("tachibana: dimension mismatch");
  Ten4 out(n);
#pragma omp parallel for collapse(2) schedule(static)
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) tach2_slice(a, t, p, q, out);
  return out;
}

Ten4 tachibana_serial(const Sym2& a, const Sym2& t) {
  const int n = t.n;
  if (a.n != n) throw std::invalid_argument("tachibana: dimension mismatch");
  Ten4 out(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) tach2_slice(a, t, p, q, out);
  return out;
}

}  // namespace curvlab
