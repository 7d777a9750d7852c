#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "curvlab/chart.hpp"

using namespace curvlab;
using json = nlohmann::json;

TEST_CASE("taylor scalar matches hand-coded derivatives of a polynomial") {
  // f(x,y) = 3 x^2 y + 2 x y - y^3 + 5
  const double x = 0.7, y = -1.3;
  TaylorScalar tx = TaylorScalar::variable(2, 0, x);
  TaylorScalar ty = TaylorScalar::variable(2, 1, y);
  TaylorScalar f = 3.0 * tx * tx * ty + 2.0 * tx * ty - pow(ty, 3) + 5.0;
  CHECK(f.value() == doctest::Approx(3 * x * x * y + 2 * x * y - y * y * y + 5).epsilon(1e-15));
  CHECK(f.grad(0) == doctest::Approx(6 * x * y + 2 * y).epsilon(1e-15));
  CHECK(f.grad(1) == doctest::Approx(3 * x * x + 2 * x - 3 * y * y).epsilon(1e-15));
  CHECK(f.hess(0, 0) == doctest::Approx(6 * y).epsilon(1e-15));
  CHECK(f.hess(0, 1) == doctest::Approx(6 * x + 2).epsilon(1e-15));
  CHECK(f.hess(1, 0) == doctest::Approx(6 * x + 2).epsilon(1e-15));
  CHECK(f.hess(1, 1) == doctest::Approx(-6 * y).epsilon(1e-15));
}

TEST_CASE("taylor scalar transcendental chain rules") {
  const double x = 0.4;
  TaylorScalar tx = TaylorScalar::variable(1, 0, x);
  TaylorScalar f = sin(tx) * exp(tx) / sqrt(1.0 + tx * tx);
  // d/dx checked against an independent analytic expansion
  const double s = std::sin(x), c = std::cos(x), e = std::exp(x);
  const double w = std::sqrt(1 + x * x);
  const double fv = s * e / w;
  const double fp = e * (s + c) / w - s * e * x / (w * w * w);
  CHECK(f.value() == doctest::Approx(fv).epsilon(1e-14));
  CHECK(f.grad(0) == doctest::Approx(fp).epsilon(1e-13));
  // second derivative via high-accuracy central difference of fp's formula
  auto fprime = [](double t) {
    const double ss = std::sin(t), cc = std::cos(t), ee = std::exp(t);
    const double ww = std::sqrt(1 + t * t);
    return ee * (ss + cc) / ww - ss * ee * t / (ww * ww * ww);
  };
  const double h = 1e-6;
  const double fpp = (fprime(x + h) - fprime(x - h)) / (2 * h);
  CHECK(f.hess(0, 0) == doctest::Approx(fpp).epsilon(1e-7));
}

TEST_CASE("finite differences of the metric match AD first partials") {
  struct Probe {
    Chart chart;
    std::vector<double> x;
  };
  std::vector<Probe> probes;
  probes.push_back({build_chart("space_form", json{{"n", 4}, {"c", 1.0}}), {0.1, -0.2, 0.3, 0.05}});
  probes.push_back({build_chart("sphere", json{{"dim", 3}, {"radius", 2.0}}), {1.0, 0.8, 0.5}});
  probes.push_back({build_chart("rn_ds", json{{"M", 1.0}, {"Q", 0.5}, {"Lambda", 0.01}}),
                    {0.0, 3.0, 1.0, 0.0}});
  probes.push_back({build_chart("product_spheres", json{{"p", 2}, {"r1", 1.0}, {"q", 2}, {"r2", 1.0}}),
                    {1.0, 0.8, 1.1, 0.9}});
  probes.push_back({build_chart("warped_1d_einstein",
                                json{{"n", 5}, {"base_sign", -1.0}, {"a", 1.0}, {"b", 1.0}}),
                    {0.7, 1.0, 0.9, 1.1, 0.4}});

  for (const auto& probe : probes) {
    const int n = probe.chart.n;
    std::vector<TaylorScalar> seeds;
    for (int i = 0; i < n; ++i) seeds.push_back(TaylorScalar::variable(n, i, probe.x[i]));
    const TaylorMatrix g = probe.chart.metric_fn(seeds);
    const double h = 1e-5;
    for (int k = 0; k < n; ++k) {
      std::vector<double> xp = probe.x, xm = probe.x;
      xp[k] += h;
      xm[k] -= h;
      const Mat gp = metric_values(probe.chart, xp);
      const Mat gm = metric_values(probe.chart, xm);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const double fd = (gp(i, j) - gm(i, j)) / (2 * h);
          const double ad = g[i][j].grad(k);
          CHECK(std::abs(fd - ad) <= 1e-6 * std::max(1.0, std::abs(ad)));
        }
    }
  }
}

TEST_CASE("flat chart has vanishing curvature") {
  Chart c = build_chart("flat", json{{"n", 4}, {"signature", 1}});
  CurvaturePackage pkg = curvature_at(c, {0.3, -1.0, 2.0, 0.7});
  CHECK(frobenius(pkg.R.flat()) < 1e-12);
  CHECK(frobenius(pkg.S.flat()) < 1e-12);
  CHECK(pkg.kappa == doctest::Approx(0.0));
  CHECK(pkg.m.signature == 1);
}

TEST_CASE("space form charts reproduce R = c G") {
  for (double cc : {1.0, -1.0}) {
    Chart c = build_chart("space_form", json{{"n", 4}, {"c", cc}});
    CurvaturePackage pkg = curvature_at(c, {0.1, -0.2, 0.3, 0.05});
    Ten4 expected = scaled(cc, big_g(pkg.m));
    CHECK(rel_residual(pkg.R.flat(), expected.flat()) < 1e-8);
    CHECK(frobenius(pkg.C.flat()) / std::max(1.0, frobenius(pkg.R.flat())) < 1e-8);
    CHECK(pkg.kappa == doctest::Approx(cc * 12.0).epsilon(1e-9));
    ValidatorReport rep;
    CHECK(is_generalized_curvature(pkg.R, 1e-8, &rep));
  }
}

TEST_CASE("unit 2-sphere has scalar curvature 2") {
  Chart c = build_chart("sphere", json{{"dim", 2}, {"radius", 1.0}});
  CurvaturePackage pkg = curvature_at(c, {1.0, 0.5});
  CHECK(pkg.kappa == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("S2 x S2 chart is einstein with nonzero weyl") {
  Chart c = build_chart("product_spheres", json{{"p", 2}, {"r1", 1.0}, {"q", 2}, {"r2", 1.0}});
  CurvaturePackage pkg = curvature_at(c, {1.0, 0.8, 1.1, 0.9});
  CHECK(rel_residual(pkg.S.flat(), sym2_of_metric(pkg.m).flat()) < 1e-9);
  CHECK(frobenius(pkg.C.flat()) > 1e-3);
}

TEST_CASE("clifford torus chart is semisymmetric") {
  Chart c = build_chart("product_spheres", json{{"p", 2},
                                                {"r1", std::sqrt(2.0 / 5.0)},
                                                {"q", 3},
                                                {"r2", std::sqrt(3.0 / 5.0)}});
  CurvaturePackage pkg = curvature_at(c, {1.0, 0.8, 1.1, 0.9, 0.7});
  ValidatorReport rep;
  CHECK(is_generalized_curvature(pkg.R, 1e-8, &rep));
  Ten6 rr = curvature_action(pkg.R, pkg.R, pkg.m);
  Ten6 rc = curvature_action(pkg.R, pkg.C, pkg.m);
  CHECK(rel_residual(rr.flat(), Ten6(5).flat()) < 1e-8);
  CHECK(rel_residual(rc.flat(), Ten6(5).flat()) < 1e-8);
  CHECK(pkg.kappa == doctest::Approx(15.0).epsilon(1e-9));
}

TEST_CASE("rn_ds chart guards and consistency") {
  Chart extremal = build_chart("rn_ds", json{{"M", 1.0}, {"Q", 1.0}});
  CHECK_THROWS_AS(curvature_at(extremal, {0.0, 1.0, 1.0, 0.0}), std::domain_error);  // horizon

  Chart c = build_chart("rn_ds", json{{"M", 1.0}, {"Q", 1.0}, {"Lambda", 0.01}});
  CHECK_THROWS_AS(curvature_at(c, {0.0, 3.0, 0.0, 0.0}), std::domain_error);  // at the pole
  CHECK_THROWS(build_chart("rn_ds", json{{"M", 0.0}, {"Q", 1.0}}));

  CurvaturePackage pkg = curvature_at(c, {0.0, 3.0, 1.0, 0.0});
  ValidatorReport rep;
  CHECK(is_generalized_curvature(pkg.R, 1e-8, &rep));
  CHECK(prop22_residual(pkg) < 1e-9);
}

TEST_CASE("warped product with einstein fiber is quasi-einstein") {
  Chart c = build_chart("warped_1d_einstein", json{{"n", 5}, {"base_sign", -1.0}, {"a", 1.0}, {"b", 1.0}});
  CurvaturePackage pkg = curvature_at(c, {0.7, 1.0, 0.9, 1.1, 0.4});
  // fiber-direction Ricci eigenvalue has multiplicity n-1
  const double alpha = pkg.S(2, 2) / pkg.m.g(2, 2);
  Sym2 dev = lincomb(1.0, pkg.S, -alpha, sym2_of_metric(pkg.m));
  CHECK(numeric_rank(dev, 1e-7) == 1);
}

TEST_CASE("unknown chart kind throws") {
  CHECK_THROWS_AS(build_chart("torus", json::object()), std::invalid_argument);
}
