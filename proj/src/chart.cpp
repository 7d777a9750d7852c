#include "curvlab/chart.hpp"

#include <cmath>
#include <stdexcept>

namespace curvlab {

namespace {

using json = nlohmann::json;
using TS = TaylorScalar;

TaylorMatrix zero_matrix(int n) {
  return TaylorMatrix(n, std::vector<TS>(n, TS::constant(n, 0.0)));
}

// Round sphere S^dim(radius) in hyperspherical coordinates, written into
// the block starting at `offset` of an n-dimensional chart. The metric of
// coordinate k is radius^2 prod_{j<k} sin^2(theta_j).
void sphere_block(TaylorMatrix& g, const std::vector<TS>& x, int offset, int dim, double radius) {
  const int n = static_cast<int>(x.size());
  TS factor = TS::constant(n, radius * radius);
  for (int k = 0; k < dim; ++k) {
    g[offset + k][offset + k] = factor;
    if (k + 1 < dim) {
      const TS s = sin(x[offset + k]);
      factor = factor * s * s;
    }
  }
}

bool sphere_guard(const std::vector<double>& x, int offset, int dim) {
  for (int k = 0; k + 1 < dim; ++k)
    if (std::abs(std::sin(x[offset + k])) < 1e-8) return false;
  return true;
}

Chart make_flat(const json& p) {
  const int n = p.value("n", 4);
  const int sig = p.value("signature", 1);
  if (n < 2 || n > kMaxDimension || sig < 0 || sig > n)
    throw std::invalid_argument("flat: bad dimension/signature");
  Chart c;
  c.n = n;
  c.metric_fn = [n, sig](const std::vector<TS>&) {
    TaylorMatrix g = zero_matrix(n);
    for (int i = 0; i < n; ++i) g[i][i] = TS::constant(n, i < sig ? -1.0 : 1.0);
    return g;
  };
  c.domain_guard = [](const std::vector<double>&) { return true; };
  return c;
}

Chart make_space_form(const json& p) {
  const int n = p.value("n", 4);
  const double cc = p.at("c").get<double>();
  if (n < 2 || n > kMaxDimension) throw std::invalid_argument("space_form: bad dimension");
  Chart c;
  c.n = n;
  // conformal model g = delta / (1 + (c/4) |x|^2)^2, constant curvature c
  c.metric_fn = [n, cc](const std::vector<TS>& x) {
    TS r2 = TS::constant(n, 0.0);
    for (const TS& xi : x) r2 += xi * xi;
    const TS denom = 1.0 + (cc / 4.0) * r2;
    const TS conf = 1.0 / (denom * denom);
    TaylorMatrix g = zero_matrix(n);
    for (int i = 0; i < n; ++i) g[i][i] = conf;
    return g;
  };
  c.domain_guard = [n, cc](const std::vector<double>& x) {
    double r2 = 0.0;
    for (double xi : x) r2 += xi * xi;
    return std::abs(1.0 + (cc / 4.0) * r2) > 1e-8;
  };
  return c;
}

Chart make_sphere(const json& p) {
  const int dim = p.at("dim").get<int>();
  const double radius = p.at("radius").get<double>();
  if (dim < 2 || dim > kMaxDimension) throw std::invalid_argument("sphere: bad dimension");
  if (radius <= 0.0) throw std::invalid_argument("sphere: radius must be positive");
  Chart c;
  c.n = dim;
  c.metric_fn = [dim, radius](const std::vector<TS>& x) {
    TaylorMatrix g = zero_matrix(dim);
    sphere_block(g, x, 0, dim, radius);
    return g;
  };
  c.domain_guard = [dim](const std::vector<double>& x) { return sphere_guard(x, 0, dim); };
  return c;
}

Chart make_product_spheres(const json& p) {
  const int dp = p.at("p").get<int>();
  const int dq = p.at("q").get<int>();
  const double r1 = p.at("r1").get<double>();
  const double r2 = p.at("r2").get<double>();
  if (dp < 1 || dq < 1 || dp + dq > kMaxDimension)
    throw std::invalid_argument("product_spheres: bad dimensions");
  if (r1 <= 0.0 || r2 <= 0.0) throw std::invalid_argument("product_spheres: radii must be positive");
  const int n = dp + dq;
  Chart c;
  c.n = n;
  c.metric_fn = [dp, dq, r1, r2](const std::vector<TS>& x) {
    TaylorMatrix g = zero_matrix(static_cast<int>(x.size()));
    sphere_block(g, x, 0, dp, r1);
    sphere_block(g, x, dp, dq, r2);
    return g;
  };
  c.domain_guard = [dp, dq](const std::vector<double>& x) {
    return sphere_guard(x, 0, dp) && sphere_guard(x, dp, dq);
  };
  return c;
}

Chart make_rn_ds(const json& p) {
  const double M = p.at("M").get<double>();
  const double Q = p.at("Q").get<double>();
  const double lambda = p.value("Lambda", 0.0);
  if (M == 0.0 || Q == 0.0) throw std::invalid_argument("rn_ds: M and Q must be non-zero");
  Chart c;
  c.n = 4;
  // ds^2 = -h dt^2 + h^-1 dr^2 + r^2 (dtheta^2 + sin^2 theta dphi^2),
  // h(r) = 1 - 2M/r + Q^2/r^2 - Lambda r^2 / 3; coords (t, r, theta, phi)
  c.metric_fn = [M, Q, lambda](const std::vector<TS>& x) {
    const TS& r = x[1];
    const TS& theta = x[2];
    const TS h = 1.0 - 2.0 * M / r + (Q * Q) / (r * r) - (lambda / 3.0) * r * r;
    TaylorMatrix g = zero_matrix(4);
    g[0][0] = -h;
    g[1][1] = 1.0 / h;
    g[2][2] = r * r;
    const TS st = sin(theta);
    g[3][3] = r * r * st * st;
    return g;
  };
  c.domain_guard = [M, Q, lambda](const std::vector<double>& x) {
    const double r = x[1];
    if (r <= 0.0) return false;
    const double h = 1.0 - 2.0 * M / r + Q * Q / (r * r) - lambda / 3.0 * r * r;
    if (std::abs(h) < 1e-8) return false;  // horizon
    return std::abs(std::sin(x[2])) > 1e-8;  // poles
  };
  return c;
}

Chart make_warped_1d_einstein(const json& p) {
  const int n = p.value("n", 5);
  const double base_sign = p.value("base_sign", -1.0);
  const double a = p.value("a", 1.0);
  const double b = p.value("b", 1.0);
  if (n < 3 || n > kMaxDimension) throw std::invalid_argument("warped_1d_einstein: bad dimension");
  if (base_sign != 1.0 && base_sign != -1.0)
    throw std::invalid_argument("warped_1d_einstein: base_sign must be +-1");
  Chart c;
  c.n = n;
  // ds^2 = base_sign dt^2 + F(t) g_{S^{n-1}(1)}, F(t) = a + b t^2;
  // the unit-sphere fiber is Einstein, so the warped product is
  // quasi-Einstein and Ricci-pseudosymmetric for generic F.
  c.metric_fn = [n, base_sign, a, b](const std::vector<TS>& x) {
    TaylorMatrix g = zero_matrix(n);
    g[0][0] = TS::constant(n, base_sign);
    const TS f = a + b * x[0] * x[0];
    sphere_block(g, x, 1, n - 1, 1.0);
    for (int i = 1; i < n; ++i) g[i][i] = f * g[i][i];
    return g;
  };
  c.domain_guard = [n, a, b](const std::vector<double>& x) {
    if (a + b * x[0] * x[0] <= 1e-8) return false;
    return sphere_guard(x, 1, n - 1);
  };
  return c;
}

}  // namespace

const std::vector<std::string>& chart_kinds() {
  static const std::vector<std::string> kinds = {
      "flat", "space_form", "sphere", "product_spheres", "rn_ds", "warped_1d_einstein"};
  return kinds;
}

Chart build_chart(const std::string& kind, const nlohmann::json& params) {
  Chart c;
  if (kind == "flat")
    c = make_flat(params);
  else if (kind == "space_form")
    c = make_space_form(params);
  else if (kind == "sphere")
    c = make_sphere(params);
  else if (kind == "product_spheres")
    c = make_product_spheres(params);
  else if (kind == "rn_ds")
    c = make_rn_ds(params);
  else if (kind == "warped_1d_einstein")
    c = make_warped_1d_einstein(params);
  else
    throw std::invalid_argument("build_chart: unknown kind '" + kind + "'");
  c.kind = kind;
  c.params = params;
  return c;
}

Mat metric_values(const Chart& chart, const std::vector<double>& x) {
  const int n = chart.n;
  std::vector<TaylorScalar> seeds;
  seeds.reserve(n);
  for (int i = 0; i < n; ++i) seeds.push_back(TaylorScalar::constant(n, x[i]));
  const TaylorMatrix g = chart.metric_fn(seeds);
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = g[i][j].value();
  return out;
}

CurvaturePackage curvature_at(const Chart& chart, const std::vector<double>& x) {
  const int n = chart.n;
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("curvature_at: wrong number of coordinates");
  if (!chart.domain_guard(x)) throw std::domain_error("curvature_at: point outside guarded domain");

  std::vector<TaylorScalar> seeds;
  seeds.reserve(n);
  for (int i = 0; i < n; ++i) seeds.push_back(TaylorScalar::variable(n, i, x[i]));
  const TaylorMatrix gt = chart.metric_fn(seeds);

  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = gt[i][j].value();
  MetricPoint m = MetricPoint::make(g);  // throws if singular at x

  // dg[k](i,j) = d_k g_ij ; ddg[k][l](i,j) = d_k d_l g_ij
  std::vector<Mat> dg(n, Mat(n, n));
  std::vector<std::vector<Mat>> ddg(n, std::vector<Mat>(n, Mat(n, n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        dg[k](i, j) = gt[i][j].grad(k);
        for (int l = 0; l < n; ++l) ddg[k][l](i, j) = gt[i][j].hess(k, l);
      }
    }

  // Gamma^l_ij
  std::vector<Mat> gamma(n, Mat(n, n));  // gamma[l](i,j)
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int a = 0; a < n; ++a)
          s += m.g_inv(l, a) * (dg[i](j, a) + dg[j](i, a) - dg[a](i, j));
        gamma[l](i, j) = 0.5 * s;
      }

  // d_a g^{ls} = -g^{lp} (d_a g_pq) g^{qs}
  std::vector<Mat> dginv(n, Mat(n, n));
  for (int a = 0; a < n; ++a) dginv[a] = -1.0 * (m.g_inv * dg[a] * m.g_inv);

  // d_a Gamma^l_ij
  auto dgamma = [&](int a, int l, int i, int j) {
    double s = 0.0;
    for (int c = 0; c < n; ++c) {
      s += dginv[a](l, c) * (dg[i](j, c) + dg[j](i, c) - dg[c](i, j));
      s += m.g_inv(l, c) * (ddg[a][i](j, c) + ddg[a][j](i, c) - ddg[a][c](i, j));
    }
    return 0.5 * s;
  };

  Ten4 riem(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double rl = 0.0;
          for (int l = 0; l < n; ++l) {
            double term = dgamma(a, l, b, c) - dgamma(b, l, a, c);
            for (int mm = 0; mm < n; ++mm)
              term += gamma[mm](b, c) * gamma[l](a, mm) - gamma[mm](a, c) * gamma[l](b, mm);
            rl += g(l, d) * term;
          }
          riem.at(a, b, c, d) = rl;
        }
    }

  if (n == 2) {
    CurvaturePackage pkg;
    pkg.m = m;
    pkg.R = riem;
    pkg.S = ricci(riem, m);
    pkg.kappa = metric_trace(pkg.S, m);
    pkg.C = Ten4(2);  // no Weyl part below dimension 3
    return pkg;
  }
  return weyl_decompose(riem, m);
}

}  // namespace curvlab
