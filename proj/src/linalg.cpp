#include "curvlab/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace curvlab {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::diag(const std::vector<double>& values) {
  Mat m(static_cast<int>(values.size()), static_cast<int>(values.size()));
  for (size_t i = 0; i < values.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = values[i];
  return m;
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Mat::is_symmetric(double tol) const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

Mat operator+(const Mat& a, const Mat& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  Mat r(a.rows_, a.cols_);
  for (size_t i = 0; i < r.d_.size(); ++i) r.d_[i] = a.d_[i] + b.d_[i];
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  Mat r(a.rows_, a.cols_);
  for (size_t i = 0; i < r.d_.size(); ++i) r.d_[i] = a.d_[i] - b.d_[i];
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  assert(a.cols_ == b.rows_);
  Mat r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

Mat operator*(double s, const Mat& a) {
  Mat r(a.rows_, a.cols_);
  for (size_t i = 0; i < r.d_.size(); ++i) r.d_[i] = s * a.d_[i];
  return r;
}

LuFactor::LuFactor(const Mat& a) : n_(a.rows()), lu_(a), perm_(a.rows()) {
  assert(a.rows() == a.cols());
  for (int i = 0; i < n_; ++i) perm_[i] = i;
  for (int col = 0; col < n_; ++col) {
    int pivot = col;
    double best = std::abs(lu_(col, col));
    for (int r = col + 1; r < n_; ++r) {
      const double v = std::abs(lu_(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) {
      singular_ = true;
      continue;
    }
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) std::swap(lu_(pivot, j), lu_(col, j));
      std::swap(perm_[pivot], perm_[col]);
      perm_sign_ = -perm_sign_;
    }
    const double inv = 1.0 / lu_(col, col);
    for (int r = col + 1; r < n_; ++r) {
      const double f = lu_(r, col) * inv;
      lu_(r, col) = f;
      for (int j = col + 1; j < n_; ++j) lu_(r, j) -= f * lu_(col, j);
    }
  }
}

double LuFactor::det() const {
  if (singular_) return 0.0;
  double d = perm_sign_;
  for (int i = 0; i < n_; ++i) d *= lu_(i, i);
  return d;
}

std::vector<double> LuFactor::solve(const std::vector<double>& rhs) const {
  if (singular_) throw std::runtime_error("LuFactor::solve: singular matrix");
  std::vector<double> x(n_);
  for (int i = 0; i < n_; ++i) x[i] = rhs[perm_[i]];
  for (int i = 1; i < n_; ++i)
    for (int j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
  for (int i = n_ - 1; i >= 0; --i) {
    for (int j = i + 1; j < n_; ++j) x[i] -= lu_(i, j) * x[j];
    x[i] /= lu_(i, i);
  }
  return x;
}

Mat LuFactor::inverse() const {
  Mat inv(n_, n_);
  std::vector<double> e(n_, 0.0);
  for (int col = 0; col < n_; ++col) {
    e[col] = 1.0;
    const std::vector<double> x = solve(e);
    for (int i = 0; i < n_; ++i) inv(i, col) = x[i];
    e[col] = 0.0;
  }
  return inv;
}

SymEigen sym_eigen(const Mat& a) {
  const int n = a.rows();
  Mat w(a);
  Mat v = Mat::identity(n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += w(i, j) * w(i, j);
    if (off < 1e-300) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = w(p, q);
        if (apq == 0.0) continue;
        const double app = w(p, p);
        const double aqq = w(q, q);
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double wkp = w(k, p);
          const double wkq = w(k, q);
          w(k, p) = c * wkp - s * wkq;
          w(k, q) = s * wkp + c * wkq;
        }
        for (int k = 0; k < n; ++k) {
          const double wpk = w(p, k);
          const double wqk = w(q, k);
          w(p, k) = c * wpk - s * wqk;
          w(q, k) = s * wpk + c * wqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int i, int j) { return w(i, i) < w(j, j); });
  SymEigen out;
  out.values.resize(n);
  out.vectors = Mat(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = w(order[k], order[k]);
    for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> singular_values(const Mat& a) {
  const Mat ata = a.transposed() * a;
  SymEigen e = sym_eigen(ata);
  std::vector<double> sv(e.values.size());
  for (size_t i = 0; i < sv.size(); ++i) sv[i] = std::sqrt(std::max(0.0, e.values[e.values.size() - 1 - i]));
  return sv;
}

namespace {

// Francis double-shift QR on an upper Hessenberg matrix, eigenvalues only.
// Adapted from the classic EISPACK hqr routine.
std::vector<std::complex<double>> hessenberg_qr_eigenvalues(Mat h) {
  const int n = h.rows();
  std::vector<std::complex<double>> eig(n);
  double norm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) norm += std::abs(h(i, j));
  int nn = n - 1;
  double t = 0.0;
  int iter_total = 0;
  while (nn >= 0) {
    int its = 0;
    int l;
    for (;;) {
      for (l = nn; l >= 1; --l) {
        const double s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
        const double scale = (s == 0.0) ? norm : s;
        if (std::abs(h(l, l - 1)) <= 1e-300 + 2.3e-16 * scale) {
          h(l, l - 1) = 0.0;
          break;
        }
      }
      double x = h(nn, nn);
      if (l == nn) {
        eig[nn] = x + t;
        nn -= 1;
        break;
      }
      double y = h(nn - 1, nn - 1);
      double w = h(nn, nn - 1) * h(nn - 1, nn);
      if (l == nn - 1) {
        const double p = 0.5 * (y - x);
        const double q = p * p + w;
        const double z = std::sqrt(std::abs(q));
        x += t;
        if (q >= 0.0) {
          const double zz = p + (p >= 0.0 ? z : -z);
          eig[nn - 1] = x + zz;
          eig[nn] = (zz != 0.0) ? x - w / zz : x + zz;
        } else {
          eig[nn - 1] = std::complex<double>(x + p, z);
          eig[nn] = std::complex<double>(x + p, -z);
        }
        nn -= 2;
        break;
      }
      if (++iter_total > 120 * n) throw std::runtime_error("hessenberg_qr: not converging");
      if (its == 10 || its == 20) {
        // exceptional shift
        t += x;
        for (int i = 0; i <= nn; ++i) h(i, i) -= x;
        const double s = std::abs(h(nn, nn - 1)) + std::abs(h(nn - 1, nn - 2));
        x = y = 0.75 * s;
        w = -0.4375 * s * s;
      }
      ++its;
      int m;
      double p = 0.0, q = 0.0, r = 0.0;
      for (m = nn - 2; m >= l; --m) {
        const double z = h(m, m);
        const double rr = x - z;
        const double ss = y - z;
        p = (rr * ss - w) / h(m + 1, m) + h(m, m + 1);
        q = h(m + 1, m + 1) - z - rr - ss;
        r = h(m + 2, m + 1);
        const double scale = std::abs(p) + std::abs(q) + std::abs(r);
        p /= scale;
        q /= scale;
        r /= scale;
        if (m == l) break;
        const double u = std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r));
        const double v = std::abs(p) * (std::abs(h(m - 1, m - 1)) + std::abs(h(m, m)) + std::abs(h(m + 1, m + 1)));
        if (u <= 2.3e-16 * v) break;
      }
      for (int i = m + 2; i <= nn; ++i) {
        h(i, i - 2) = 0.0;
        if (i != m + 2) h(i, i - 3) = 0.0;
      }
      for (int k = m; k <= nn - 1; ++k) {
        if (k != m) {
          p = h(k, k - 1);
          q = h(k + 1, k - 1);
          r = (k != nn - 1) ? h(k + 2, k - 1) : 0.0;
          x = std::abs(p) + std::abs(q) + std::abs(r);
          if (x == 0.0) continue;
          p /= x;
          q /= x;
          r /= x;
        }
        double s = std::sqrt(p * p + q * q + r * r);
        if (p < 0.0) s = -s;
        if (s == 0.0) continue;
        if (k == m) {
          if (l != m) h(k, k - 1) = -h(k, k - 1);
        } else {
          h(k, k - 1) = -s * x;
        }
        p += s;
        x = p / s;
        y = q / s;
        const double z = r / s;
        q /= p;
        r /= p;
        for (int j = k; j <= nn; ++j) {
          double pp = h(k, j) + q * h(k + 1, j);
          if (k != nn - 1) {
            pp += r * h(k + 2, j);
            h(k + 2, j) -= pp * z;
          }
          h(k + 1, j) -= pp * y;
          h(k, j) -= pp * x;
        }
        const int mmin = std::min(nn, k + 3);
        for (int i = l; i <= mmin; ++i) {
          double pp = x * h(i, k) + y * h(i, k + 1);
          if (k != nn - 1) {
            pp += z * h(i, k + 2);
            h(i, k + 2) -= pp * r;
          }
          h(i, k + 1) -= pp * q;
          h(i, k) -= pp;
        }
      }
    }
  }
  return eig;
}

}  // namespace

std::vector<std::complex<double>> general_eigenvalues(const Mat& a) {
  const int n = a.rows();
  assert(a.cols() == n);
  if (n == 0) return {};
  if (n == 1) return {std::complex<double>(a(0, 0), 0.0)};
  // Householder reduction to upper Hessenberg form.
  Mat h(a);
  for (int col = 0; col < n - 2; ++col) {
    double scale = 0.0;
    for (int i = col + 1; i < n; ++i) scale += std::abs(h(i, col));
    if (scale == 0.0) continue;
    std::vector<double> v(n, 0.0);
    double sigma = 0.0;
    for (int i = col + 1; i < n; ++i) {
      v[i] = h(i, col) / scale;
      sigma += v[i] * v[i];
    }
    double alpha = std::sqrt(sigma);
    if (v[col + 1] < 0.0) alpha = -alpha;
    v[col + 1] += alpha;
    const double beta = alpha * v[col + 1];
    if (beta == 0.0) continue;
    // H = (I - v v^T / beta); apply H A H.
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int i = col + 1; i < n; ++i) s += v[i] * h(i, j);
      s /= beta;
      for (int i = col + 1; i < n; ++i) h(i, j) -= s * v[i];
    }
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = col + 1; j < n; ++j) s += h(i, j) * v[j];
      s /= beta;
      for (int j = col + 1; j < n; ++j) h(i, j) -= s * v[j];
    }
  }
  for (int i = 2; i < n; ++i)
    for (int j = 0; j < i - 1; ++j) h(i, j) = 0.0;
  return hessenberg_qr_eigenvalues(std::move(h));
}

std::vector<double> solve_gram_min_norm(const Mat& gram, const std::vector<double>& b, double rcond) {
  const int k = gram.rows();
  SymEigen e = sym_eigen(gram);
  double lmax = 0.0;
  for (double v : e.values) lmax = std::max(lmax, std::abs(v));
  std::vector<double> x(k, 0.0);
  if (lmax == 0.0) return x;
  for (int j = 0; j < k; ++j) {
    const double lam = e.values[j];
    if (std::abs(lam) <= rcond * lmax) continue;
    double proj = 0.0;
    for (int i = 0; i < k; ++i) proj += e.vectors(i, j) * b[i];
    proj /= lam;
    for (int i = 0; i < k; ++i) x[i] += proj * e.vectors(i, j);
  }
  return x;
}

}  // namespace curvlab
