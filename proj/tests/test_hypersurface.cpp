#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "curvlab/condition.hpp"
#include "curvlab/hypersurface.hpp"

using namespace curvlab;

namespace {

HypersurfaceData hyper(std::vector<double> diag, double eps = 1.0, double ktilde = 0.0,
                       bool minkowski = false) {
  HypersurfaceData h;
  const int n = static_cast<int>(diag.size());
  h.m = minkowski ? MetricPoint::minkowski(n) : MetricPoint::euclidean(n);
  h.H = Sym2::from_diag(diag);
  h.epsilon = eps;
  h.kappa_tilde = ktilde;
  return h;
}

Sym2 random_sym2(int n, uint64_t seed) {
  SplitMix64 rng(seed);
  Sym2 s(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) s.set(i, j, rng.next_double(-1.0, 1.0));
  return s;
}

}  // namespace

TEST_CASE("gauss package: umbilical slice is a space form") {
  const int n = 5;
  const double lam = 0.7;
  HypersurfaceData h = hyper(std::vector<double>(n, lam));
  CurvaturePackage pkg = gauss_package(h);
  CHECK(rel_residual(pkg.R.flat(), scaled(lam * lam, big_g(h.m)).flat()) < 1e-14);
  CHECK(rel_residual(pkg.S.flat(), scaled((n - 1.0) * lam * lam, sym2_of_metric(h.m)).flat()) <
        1e-14);
  CHECK(frobenius(pkg.C.flat()) < 1e-13);
  CHECK(pkg.ambient->epsilon == 1.0);
}

TEST_CASE("gauss package: rank-2 instance diag(2,3,0,0,0)") {
  HypersurfaceData h = hyper({2, 3, 0, 0, 0});
  CurvaturePackage pkg = gauss_package(h);
  Sym2 expected = Sym2::from_diag({6, 6, 0, 0, 0});
  CHECK(rel_residual(pkg.S.flat(), expected.flat()) < 1e-14);
  CHECK(pkg.kappa == doctest::Approx(12.0));
  AuditReport rep = gauss_audit(h, pkg);
  CHECK(rep.pass());
}

TEST_CASE("gauss package: three-curvature instance diag(1,1,-1,-1,0)") {
  HypersurfaceData h = hyper({1, 1, -1, -1, 0});
  CurvaturePackage pkg = gauss_package(h);
  Sym2 expected = Sym2::from_diag({-1, -1, -1, -1, 0});
  CHECK(rel_residual(pkg.S.flat(), expected.flat()) < 1e-14);
  CHECK(pkg.kappa == doctest::Approx(-4.0));
  // H^3 = -(kappa/(n-1)) H = H
  Sym2 h3 = metric_power(h.H, h.m, 3);
  CHECK(rel_residual(h3.flat(), scaled(-pkg.kappa / 4.0, h.H).flat()) < 1e-14);
}

TEST_CASE("gauss self-consistency over random hypersurface data") {
  int count = 0;
  for (int n : {4, 5, 6})
    for (double eps : {1.0, -1.0})
      for (double kt : {-6.0, 0.0, 30.0})
        for (int rep = 0; rep < 4; ++rep) {
          HypersurfaceData h;
          h.m = (rep % 2 == 0) ? MetricPoint::euclidean(n) : MetricPoint::minkowski(n);
          h.H = random_sym2(n, 9000 + 100 * n + 10 * rep + (eps > 0) + (kt > 0 ? 2 : 0));
          h.epsilon = eps;
          h.kappa_tilde = kt;
          CurvaturePackage pkg = gauss_package(h);
          AuditReport ga = gauss_audit(h, pkg);
          CHECK(ga.pass());
          AuditReport ea = eq900ab_audit(h, pkg);
          CHECK(ea.pass());
          ++count;
        }
  CHECK(count == 72);
}

TEST_CASE("detect_UH branches") {
  {  // two eigenvalues: H^2 = 3H - 2g
    UHReport rep = detect_UH(hyper({2, 1, 1, 1, 1}));
    CHECK_FALSE(rep.in_UH);
    CHECK(rep.alpha == doctest::Approx(3.0));
    CHECK(rep.beta == doctest::Approx(-2.0));
  }
  {  // three distinct eigenvalues
    UHReport rep = detect_UH(hyper({2, 3, 0, 0, 0}));
    CHECK(rep.in_UH);
  }
  {  // umbilical: degenerate fit, exact with the minimal-norm solution
    UHReport rep = detect_UH(hyper({1, 1, 1, 1, 1}));
    CHECK_FALSE(rep.in_UH);
    CHECK(rep.residual < 1e-12);
    CHECK(rep.alpha + rep.beta == doctest::Approx(1.0));  // any solution has alpha + beta = 1
  }
}

TEST_CASE("fit_cubic frozen values") {
  {  // rank-2: psi = -6 = (tr H^2 - (tr H)^2)/2, rho = 0
    CubicFit fit = fit_cubic(hyper({2, 3, 0, 0, 0}));
    CHECK(fit.in_UH);
    CHECK(fit.residual < 1e-12);
    CHECK(fit.psi == doctest::Approx(-6.0));
    CHECK(fit.rho == doctest::Approx(0.0).epsilon(1e-12));
  }
  {  // three-curvature: H^3 = H, so (psi, rho) = (1, 0)
    CubicFit fit = fit_cubic(hyper({1, 1, -1, -1, 0}));
    CHECK(fit.psi == doctest::Approx(1.0));
    CHECK(fit.rho == doctest::Approx(0.0).epsilon(1e-12));
  }
  {  // the nonzero-rho family: eigenvalues {t, b, -b}, here t=2, b=1;
    // psi = -kappa/(n-1) = 1 and rho = kappa tr(H)/(n-1) = -2
    HypersurfaceData h = hyper({2, 1, 1, -1, -1});
    CubicFit fit = fit_cubic(h);
    CurvaturePackage pkg = gauss_package(h);
    CHECK(pkg.kappa == doctest::Approx(-4.0));
    CHECK(fit.in_UH);
    CHECK(fit.residual < 1e-12);
    CHECK(fit.psi == doctest::Approx(-pkg.kappa / 4.0));
    CHECK(fit.rho == doctest::Approx(pkg.kappa * 2.0 / 4.0));
    CHECK(fit.rho_rel > 1e-3);  // genuinely nonzero rho
  }
}

TEST_CASE("ricci_class: einstein, quasi-einstein, generic") {
  const int n = 5;
  MetricPoint m = MetricPoint::euclidean(n);
  {  // space form
    CurvaturePackage pkg = weyl_decompose(scaled(2.0, big_g(m)), m);
    RicciClass rc = ricci_class(pkg);
    CHECK(rc.einstein);
    CHECK_FALSE(rc.quasi_einstein);
    CHECK(rc.alpha == doctest::Approx(pkg.kappa / n));
  }
  {  // three-curvature: quasi-einstein with alpha = kappa/(n-1) = -1
    CurvaturePackage pkg = gauss_package(hyper({1, 1, -1, -1, 0}));
    RicciClass rc = ricci_class(pkg);
    CHECK_FALSE(rc.einstein);
    CHECK(rc.quasi_einstein);
    CHECK(rc.alpha == doctest::Approx(-1.0));
    CHECK(rc.rank_dev == 1);
  }
  {  // rank-2: S has eigenvalue multiplicities (2,3), neither class
    CurvaturePackage pkg = gauss_package(hyper({2, 3, 0, 0, 0}));
    RicciClass rc = ricci_class(pkg);
    CHECK_FALSE(rc.einstein);
    CHECK_FALSE(rc.quasi_einstein);
  }
}

TEST_CASE("prop41 on the rank-2 instance") {
  HypersurfaceData h = hyper({2, 3, 0, 0, 0});
  CurvaturePackage pkg = gauss_package(h);
  CubicFit fit = fit_cubic(h);
  AuditReport rep = prop41_audit(h, pkg, fit, 1e-10);
  REQUIRE(rep.premise == Premise::holds);
  CHECK(rep.pass());
  // alpha1 = (kappa/4 + psi)/3 = (3 - 6)/3 = -1, alpha2 = 0
  for (const auto& [k, v] : rep.constants) {
    if (k == "alpha1") CHECK(v == doctest::Approx(-1.0));
    if (k == "alpha2") CHECK(v == doctest::Approx(0.0));
  }
  // spec example: R.C = Q(S,R) (both vanish) and C.R = (2/3) Q(S,R) - Q(g,R)
  const Ten6 rc = curvature_action(pkg.R, pkg.C, pkg.m);
  const Ten6 qsr = tachibana(pkg.S, pkg.R);
  CHECK(rel_residual(rc.flat(), qsr.flat()) < 1e-12);
  const Ten6 cr = curvature_action(pkg.C, pkg.R, pkg.m);
  Ten6 rhs = lincomb(2.0 / 3.0, qsr, -1.0, tachibana(sym2_of_metric(pkg.m), pkg.R));
  CHECK(rel_residual(cr.flat(), rhs.flat()) < 1e-12);
}

TEST_CASE("prop41 on remark 2.5(iii)(b) relations") {
  HypersurfaceData h = hyper({1, 1, -1, -1, 0});
  CurvaturePackage pkg = gauss_package(h);
  CubicFit fit = fit_cubic(h);
  AuditReport rep = prop41_audit(h, pkg, fit, 1e-10);
  REQUIRE(rep.premise == Premise::holds);
  CHECK(rep.pass());
  // R.C = Q(S,C), C.R = ((n-3)/(n-2)) Q(S,C), (n-2)(R.C - C.R) = Q(S,C)
  const Ten6 rc = curvature_action(pkg.R, pkg.C, pkg.m);
  const Ten6 cr = curvature_action(pkg.C, pkg.R, pkg.m);
  const Ten6 qsc = tachibana(pkg.S, pkg.C);
  CHECK(rel_residual(rc.flat(), qsc.flat()) < 1e-10);
  CHECK(rel_residual(cr.flat(), scaled(2.0 / 3.0, qsc).flat()) < 1e-10);
  CHECK(rel_residual(scaled(3.0, lincomb(1.0, rc, -1.0, cr)).flat(), qsc.flat()) < 1e-10);
  // R.S = 0: Ricci-semisymmetric
  const Ten4 rs = curvature_action(pkg.R, pkg.S, pkg.m);
  CHECK(frobenius(rs.flat()) < 1e-12);
}

TEST_CASE("prop41 premise fails off U_H") {
  HypersurfaceData h = hyper({1, 1, 1, 1, 1});
  CurvaturePackage pkg = gauss_package(h);
  CubicFit fit = fit_cubic(h);
  AuditReport rep = prop41_audit(h, pkg, fit, 1e-10);
  CHECK(rep.premise != Premise::holds);
  CHECK(rep.pass());  // vacuous
}

TEST_CASE("prop42 on the rank-2 instance, including part (ii)") {
  HypersurfaceData h = hyper({2, 3, 0, 0, 0});
  CurvaturePackage pkg = gauss_package(h);
  CubicFit fit = fit_cubic(h);
  AuditReport rep = prop42_audit(h, pkg, fit, 1e-10);
  REQUIRE(rep.premise == Premise::holds);
  CHECK(rep.pass());
  bool saw_beta1 = false;
  for (const auto& [k, v] : rep.constants) {
    if (k == "alpha3") CHECK(v == doctest::Approx(-6.0));
    if (k == "lambda") CHECK(v == doctest::Approx(0.0));
    if (k == "beta1") {
      CHECK(v == doctest::Approx(6.0));  // = -alpha3
      saw_beta1 = true;
    }
  }
  CHECK(saw_beta1);
}

TEST_CASE("prop42 on a nonzero kappa_tilde rank-2 instance") {
  HypersurfaceData h = hyper({2, 3, 0, 0, 0}, 1.0, 30.0);
  CurvaturePackage pkg = gauss_package(h);
  CubicFit fit = fit_cubic(h);
  AuditReport rep = prop42_audit(h, pkg, fit, 1e-10);
  REQUIRE(rep.premise == Premise::holds);
  CHECK(rep.pass());
  AuditReport rep41 = prop41_audit(h, pkg, fit, 1e-10);
  REQUIRE(rep41.premise == Premise::holds);
  CHECK(rep41.pass());
}

TEST_CASE("example 4.9(iii): S^3 relation and rho != 0") {
  HypersurfaceData h = hyper({2, 1, 1, -1, -1});
  CurvaturePackage pkg = gauss_package(h);
  CubicFit fit = fit_cubic(h);

  // frozen oracle: S = diag(0,1,1,-3,-3), S^3 = -2 S^2 + 3 S
  CHECK(rel_residual(pkg.S.flat(), Sym2::from_diag({0, 1, 1, -3, -3}).flat()) < 1e-14);
  const Sym2 s2 = metric_power(pkg.S, pkg.m, 2);
  const Sym2 s3 = metric_power(pkg.S, pkg.m, 3);
  CHECK(rel_residual(s3.flat(), lincomb(-2.0, s2, 3.0, pkg.S).flat()) < 1e-13);
  // paper's coefficients: 2 kappa/(n-1) and tr(S^3)/kappa - 2 tr(S^2)/(n-1)
  const double tr_s2 = metric_trace(s2, pkg.m);
  const double tr_s3 = metric_trace(s3, pkg.m);
  CHECK(2.0 * pkg.kappa / 4.0 == doctest::Approx(-2.0));
  CHECK(tr_s3 / pkg.kappa - 2.0 * tr_s2 / 4.0 == doctest::Approx(3.0));

  AuditReport rep42 = prop42_audit(h, pkg, fit, 1e-10);
  REQUIRE(rep42.premise == Premise::holds);
  CHECK(rep42.pass());
}

TEST_CASE("prop43v: DS4aa instances satisfy R.S = c Q(g,S)") {
  for (auto diag : {std::vector<double>{1, 1, -1, -1, 0}, std::vector<double>{2, 3, 0, 0, 0}}) {
    HypersurfaceData h = hyper(diag);
    CurvaturePackage pkg = gauss_package(h);
    CubicFit fit = fit_cubic(h);
    AuditReport rep = prop43v_audit(h, pkg, fit, 1e-10);
    REQUIRE(rep.premise == Premise::holds);
    CHECK(rep.pass());
  }
  {  // nonzero rho: premise fails
    HypersurfaceData h = hyper({2, 1, 1, -1, -1});
    AuditReport rep = prop43v_audit(h, gauss_package(h), fit_cubic(h), 1e-10);
    CHECK(rep.premise == Premise::failed);
  }
}

TEST_CASE("prop47 identities") {
  {  // (i) holds on any hypersurface, including random ones
    HypersurfaceData h;
    h.m = MetricPoint::minkowski(5);
    h.H = random_sym2(5, 4242);
    h.epsilon = -1.0;
    h.kappa_tilde = -6.0;
    CurvaturePackage pkg = gauss_package(h);
    AuditReport rep = prop47_audit(h, pkg, fit_cubic(h), 1e-9);
    REQUIRE(rep.premise == Premise::holds);
    bool found = false;
    for (const auto& [k, v] : rep.residuals)
      if (k == "02identity01hyper") {
        CHECK(v < 1e-9);
        found = true;
      }
    CHECK(found);
  }
  {  // rank-2 reduced form at n=5: C.C = (2/3) R.C + ((kappa/4 + psi)/3) Q(g,C)
    HypersurfaceData h = hyper({2, 3, 0, 0, 0});
    CurvaturePackage pkg = gauss_package(h);
    CubicFit fit = fit_cubic(h);
    AuditReport rep = prop47_audit(h, pkg, fit, 1e-10);
    CHECK(rep.pass());
    const Ten6 cc = curvature_action(pkg.C, pkg.C, pkg.m);
    const Ten6 rc = curvature_action(pkg.R, pkg.C, pkg.m);
    const Ten6 qgc = tachibana(sym2_of_metric(pkg.m), pkg.C);
    const double coef = (pkg.kappa / 4.0 + fit.psi) / 3.0;
    CHECK(rel_residual(cc.flat(), lincomb(2.0 / 3.0, rc, coef, qgc).flat()) < 1e-10);
  }
  {  // example 4.9(iii): C.C = ((n-3)/(n-2)) R.C, i.e. (DZ024)
    HypersurfaceData h = hyper({2, 1, 1, -1, -1});
    CurvaturePackage pkg = gauss_package(h);
    AuditReport rep = prop47_audit(h, pkg, fit_cubic(h), 1e-10);
    CHECK(rep.pass());
    const Ten6 cc = curvature_action(pkg.C, pkg.C, pkg.m);
    const Ten6 rc = curvature_action(pkg.R, pkg.C, pkg.m);
    CHECK(rel_residual(cc.flat(), scaled(2.0 / 3.0, rc).flat()) < 1e-10);
  }
}

TEST_CASE("thm48 on the three-curvature instance: consistent negative case") {
  HypersurfaceData h = hyper({1, 1, -1, -1, 0});
  CurvaturePackage pkg = gauss_package(h);
  CubicFit fit = fit_cubic(h);
  AuditReport rep = thm48_audit(h, pkg, fit, 1e-9);
  REQUIRE(rep.premise == Premise::holds);
  CHECK(rep.pass());
  double qqee08a = -1.0, a_norm = -1.0, star = -1.0, alpha = 0.0;
  for (const auto& [k, v] : rep.constants) {
    if (k == "qqee08a") qqee08a = v;
    if (k == "A_norm") a_norm = v;
    if (k == "star_residual") star = v;
    if (k == "alpha") alpha = v;
  }
  CHECK(alpha == doctest::Approx(-1.0));
  CHECK(qqee08a == 0.0);      // kappa/4 = -1 differs from kappa_tilde/6 = 0
  CHECK(a_norm > 1e-4);       // A does not vanish
  CHECK(star > 1e-4);         // and condition (*) fails, consistently
}

TEST_CASE("thm48 premise handling") {
  {  // tr-balanced instance: (qqee08)(a) flag fires but not quasi-einstein
    HypersurfaceData h = hyper({1, 1, -0.5, 0, 0});
    CurvaturePackage pkg = gauss_package(h);
    CHECK(pkg.kappa == doctest::Approx(0.0));  // (tr H)^2 = tr H^2
    CubicFit fit = fit_cubic(h);
    AuditReport rep = thm48_audit(h, pkg, fit, 1e-9);
    CHECK(rep.premise == Premise::failed);
    CHECK(rep.constants.front().first == "qqee08a");
    CHECK(rep.constants.front().second == 1.0);
    // the (*) <-> (qqee08)(b) equivalence still holds by direct evaluation
    const double star = condition_star_residual(pkg);
    const Sym2 dev = lincomb(1.0, pkg.S, -pkg.kappa / 5.0, sym2_of_metric(pkg.m));
    const double bnorm = frobenius(tachibana(dev, pkg.C).flat());
    CHECK((star <= 1e-9) == (bnorm <= 1e-9));
  }
  {  // umbilical: not applicable
    HypersurfaceData h = hyper({1, 1, 1, 1, 1});
    AuditReport rep = thm48_audit(h, gauss_package(h), fit_cubic(h), 1e-9);
    CHECK(rep.premise == Premise::not_applicable);
  }
}

TEST_CASE("thm3x two-eigenvalue branch: diag(2,1,1,1,1)") {
  HypersurfaceData h = hyper({2, 1, 1, 1, 1});
  CurvaturePackage pkg = gauss_package(h);
  AuditReport rep = thm3x_audit(h, pkg, 1e-10);
  REQUIRE(rep.premise == Premise::holds);
  CHECK(rep.pass());
  for (const auto& [k, v] : rep.constants) {
    if (k == "L_thm31") CHECK(v == doctest::Approx(2.0));
    if (k == "phi") CHECK(v == doctest::Approx(1.0 / 9.0));
    if (k == "mu") CHECK(v == doctest::Approx(-2.0 / 9.0));
    if (k == "eta") CHECK(v == doctest::Approx(4.0 / 9.0));
  }
  // explicit: R.R = 2 Q(g,R)
  const Ten6 rr = curvature_action(pkg.R, pkg.R, pkg.m);
  const Ten6 qgr = tachibana(sym2_of_metric(pkg.m), pkg.R);
  CHECK(rel_residual(rr.flat(), scaled(2.0, qgr).flat()) < 1e-12);
}

TEST_CASE("thm3x rank-2 branch: phi sign resolution") {
  HypersurfaceData h = hyper({2, 3, 0, 0, 0});
  CurvaturePackage pkg = gauss_package(h);
  AuditReport rep = thm3x_audit(h, pkg, 1e-10);
  REQUIRE(rep.premise == Premise::holds);
  CHECK(rep.pass());
  double phi_printed = 0.0, phi_roter = 0.0;
  for (const auto& [k, v] : rep.constants) {
    if (k == "phi_printed") phi_printed = v;
    if (k == "phi_roter") phi_roter = v;
  }
  CHECK(phi_printed == doctest::Approx(-1.0 / 6.0));
  CHECK(phi_roter == doctest::Approx(1.0 / 6.0));
  // spec example: C.R = (2/(12 phi_printed)) Q(g,R) = -Q(g,R)
  const Ten6 cr = curvature_action(pkg.C, pkg.R, pkg.m);
  const Ten6 qgr = tachibana(sym2_of_metric(pkg.m), pkg.R);
  CHECK(rel_residual(cr.flat(), scaled(-1.0, qgr).flat()) < 1e-12);
}

TEST_CASE("thm3x rank-2 branch with ambient curvature") {
  HypersurfaceData h = hyper({2, 3, 0, 0, 0}, 1.0, 30.0);
  CurvaturePackage pkg = gauss_package(h);
  AuditReport rep = thm3x_audit(h, pkg, 1e-9);
  REQUIRE(rep.premise == Premise::holds);
  CHECK(rep.pass());
}

TEST_CASE("thm3x lorentzian two-eigenvalue instance") {
  HypersurfaceData h = hyper({0.5, 1, 1, 1, 1}, 1.0, 0.0, true);
  CurvaturePackage pkg = gauss_package(h);
  AuditReport rep = thm3x_audit(h, pkg, 1e-9);
  REQUIRE(rep.premise == Premise::holds);
  CHECK(rep.pass());
}

TEST_CASE("thm3x premise fails for rank >= 3 U_H instances") {
  HypersurfaceData h = hyper({2, 1, 1, -1, -1});
  AuditReport rep = thm3x_audit(h, gauss_package(h), 1e-9);
  CHECK(rep.premise == Premise::failed);
  CHECK(rep.pass());
}

TEST_CASE("remark 3.7(ii): rank(H - a g) <= 1 forces conformal flatness") {
  HypersurfaceData h = hyper({3, 2, 2, 2, 2});  // H - 2g has rank 1
  CurvaturePackage pkg = gauss_package(h);
  CHECK(frobenius(pkg.C.flat()) / std::max(1.0, frobenius(pkg.R.flat())) < 1e-9);

  // fuzz the quasi-umbilical family H = a g + b v (x) v over signatures
  SplitMix64 rng(808);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 4 + rep % 3;
    HypersurfaceData q;
    q.m = rep % 2 ? MetricPoint::minkowski(n) : MetricPoint::euclidean(n);
    const double a = rng.next_double(-1.5, 1.5);
    const double b = rng.next_double(0.2, 2.0);
    std::vector<double> v(n);
    for (double& x : v) x = rng.next_double(-1.0, 1.0);
    Sym2 H(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) H.set(i, j, a * q.m.g(i, j) + b * v[i] * v[j]);
    q.H = H;
    q.epsilon = rep % 2 ? -1.0 : 1.0;
    q.kappa_tilde = rng.next_double(-6.0, 30.0);
    CurvaturePackage pq = gauss_package(q);
    CHECK(frobenius(pq.C.flat()) / std::max(1.0, frobenius(pq.R.flat())) < 1e-9);
  }
}

TEST_CASE("gauss contraction property: 200 random H per (n, eps, ktilde)") {
  double worst = 0.0;
  for (int n : {4, 5, 6})
    for (double eps : {1.0, -1.0})
      for (double kt : {-6.0, 0.0, 30.0}) {
        for (int rep = 0; rep < 200; ++rep) {
          HypersurfaceData h;
          h.m = rep % 2 ? MetricPoint::minkowski(n) : MetricPoint::euclidean(n);
          h.H = random_sym2(n, 500000 + 10000 * n + 2000 * (eps > 0) +
                                   100 * static_cast<int>(kt + 7) + rep);
          h.epsilon = eps;
          h.kappa_tilde = kt;
          CurvaturePackage pkg = gauss_package(h);
          const Sym2 h2 = metric_power(h.H, h.m, 2);
          const double tr_h = metric_trace(h.H, h.m);
          Sym2 s_closed = lincomb(eps * tr_h, h.H, -eps, h2);
          s_closed = lincomb(1.0, s_closed, (n - 1.0) * h.c(), sym2_of_metric(h.m));
          worst = std::max(worst, rel_residual(pkg.S.flat(), s_closed.flat()));
        }
      }
  CHECK(worst < 1e-10);
}
