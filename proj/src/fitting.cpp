#include "curvlab/fitting.hpp"

#include <cmath>
#include <stdexcept>

namespace curvlab {

double FitResult::operator[](const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return coeff[i];
  throw std::out_of_range("FitResult: no coefficient named " + name);
}

FitResult fit_span(std::span<const double> target, const std::vector<NamedSpan>& basis, double tol) {
  if (basis.empty()) throw std::invalid_argument("fit_span: empty basis");
  const size_t len = target.size();
  for (const auto& b : basis)
    if (b.data.size() != len) throw std::invalid_argument("fit_span: valence mismatch");

  const int k = static_cast<int>(basis.size());
  // Basis columns are normalized first so the Gram conditioning reflects
  // angles between directions, not their scales (S^S can be many orders
  // below g^g on the same package). Minimal-norm tie-breaking therefore
  // acts on the normalized coefficients. Accumulation and the pivoted
  // solve run in extended precision: near-collinear Roter bases reach
  // normalized-Gram condition numbers ~1e10, where plain double normal
  // equations lose six digits in the coefficients.
  std::vector<double> scale(k, 0.0);
  for (int i = 0; i < k; ++i) scale[i] = frobenius(basis[i].data);
  std::vector<long double> gram(static_cast<size_t>(k) * k, 0.0L);
  std::vector<long double> rhs(k, 0.0L);
  for (int i = 0; i < k; ++i) {
    const long double si = scale[i] > 0.0 ? scale[i] : 1.0;
    for (int j = i; j < k; ++j) {
      const long double sj = scale[j] > 0.0 ? scale[j] : 1.0;
      long double s = 0.0L;
      for (size_t idx = 0; idx < len; ++idx)
        s += static_cast<long double>(basis[i].data[idx]) * basis[j].data[idx];
      gram[i * k + j] = s / (si * sj);
      gram[j * k + i] = gram[i * k + j];
    }
    long double s = 0.0L;
    for (size_t idx = 0; idx < len; ++idx)
      s += static_cast<long double>(basis[i].data[idx]) * target[idx];
    rhs[i] = s / si;
  }

  FitResult fit;
  fit.coeff.assign(k, 0.0);

  // pivoted elimination in long double; bail out to the minimum-norm
  // pseudo-inverse when a pivot collapses (degenerate span)
  std::vector<long double> a = gram;
  std::vector<long double> b = rhs;
  std::vector<int> col_of(k);
  for (int i = 0; i < k; ++i) col_of[i] = i;
  bool degenerate = false;
  for (int col = 0; col < k && !degenerate; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r)
      if (std::abs(static_cast<double>(a[r * k + col])) >
          std::abs(static_cast<double>(a[piv * k + col])))
        piv = r;
    if (std::abs(static_cast<double>(a[piv * k + col])) < 1e-13) {
      degenerate = true;
      break;
    }
    if (piv != col) {
      for (int j = 0; j < k; ++j) std::swap(a[piv * k + j], a[col * k + j]);
      std::swap(b[piv], b[col]);
    }
    for (int r = col + 1; r < k; ++r) {
      const long double f = a[r * k + col] / a[col * k + col];
      for (int j = col; j < k; ++j) a[r * k + j] -= f * a[col * k + j];
      b[r] -= f * b[col];
    }
  }
  if (!degenerate) {
    std::vector<long double> x(k, 0.0L);
    for (int i = k - 1; i >= 0; --i) {
      long double s = b[i];
      for (int j = i + 1; j < k; ++j) s -= a[i * k + j] * x[j];
      x[i] = s / a[i * k + i];
    }
    for (int i = 0; i < k; ++i) fit.coeff[i] = static_cast<double>(x[i]);
  } else {
    Mat gd(k, k);
    std::vector<double> rd(k);
    for (int i = 0; i < k; ++i) {
      rd[i] = static_cast<double>(rhs[i]);
      for (int j = 0; j < k; ++j) gd(i, j) = static_cast<double>(gram[i * k + j]);
    }
    fit.coeff = solve_gram_min_norm(gd, rd);
  }
  for (int i = 0; i < k; ++i)
    if (scale[i] > 0.0) fit.coeff[i] /= scale[i];
  fit.names.reserve(k);
  for (const auto& b2 : basis) fit.names.push_back(b2.name);

  std::vector<double> combo(len, 0.0);
  for (int i = 0; i < k; ++i)
    for (size_t idx = 0; idx < len; ++idx) combo[idx] += fit.coeff[i] * basis[i].data[idx];
  fit.residual = rel_residual(target, combo);
  fit.exact = fit.residual <= tol;
  return fit;
}

}  // namespace curvlab
