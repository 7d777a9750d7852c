#include "curvlab/condition.hpp"

#include <cmath>

namespace curvlab {

namespace {

double scalar_residual(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs) + std::abs(rhs));
}

bool in_US(const CurvaturePackage& pkg, double tol) {
  const Sym2 g = sym2_of_metric(pkg.m);
  return rel_residual(pkg.S.flat(), scaled(pkg.kappa / pkg.m.n, g).flat()) > tol;
}

bool in_UC(const CurvaturePackage& pkg, double tol) {
  if (pkg.m.n < 4) return false;
  return frobenius(pkg.C.flat()) / std::max(1.0, frobenius(pkg.R.flat())) > tol;
}

bool in_UR(const CurvaturePackage& pkg, double tol) {
  const int n = pkg.m.n;
  const Ten4 G = big_g(pkg.m);
  return rel_residual(pkg.R.flat(), scaled(pkg.kappa / ((n - 1.0) * n), G).flat()) > tol;
}

}  // namespace

RoterFit fit_roter(const CurvaturePackage& pkg, double tol) {
  const int n = pkg.m.n;
  RoterFit rf;
  if (n < 4 || !in_US(pkg, tol) || !in_UC(pkg, tol)) return rf;  // not applicable
  rf.applicable = true;

  const Sym2 g = sym2_of_metric(pkg.m);
  const Ten4 ss = scaled(0.5, kn_product(pkg.S, pkg.S));
  const Ten4 gs = kn_product(g, pkg.S);
  const Ten4 gg = big_g(pkg.m);
  FitResult fit = fit_span(pkg.R.flat(),
                           {{"phi", ss.flat()}, {"mu", gs.flat()}, {"eta", gg.flat()}}, tol);
  rf.phi = fit.coeff[0];
  rf.mu = fit.coeff[1];
  rf.eta = fit.coeff[2];
  rf.residual = fit.residual;
  rf.exact = fit.exact;
  if (rf.exact && std::abs(rf.phi) > 1e-12) {
    rf.has_derived = true;
    const double kappa = pkg.kappa;
    rf.alpha1 = kappa + ((n - 2.0) * rf.mu - 1.0) / rf.phi;
    rf.alpha2 = (rf.mu * kappa + (n - 1.0) * rf.eta) / rf.phi;
    rf.L_R = ((n - 2.0) * (rf.mu * rf.mu - rf.phi * rf.eta) - rf.mu) / rf.phi;
    rf.L = rf.L_R + rf.mu / rf.phi;
    rf.L_C = rf.L_R + (kappa / (n - 1.0) - rf.alpha1) / (n - 2.0);
  }
  return rf;
}

double condition_star_residual(const CurvaturePackage& pkg) {
  const int n = pkg.m.n;
  if (n < 4) throw std::invalid_argument("condition_star_residual: requires n >= 4");
  const Sym2 g = sym2_of_metric(pkg.m);
  const Ten6 cr = curvature_action(pkg.C, pkg.R, pkg.m);
  const Ten6 rc = curvature_action(pkg.R, pkg.C, pkg.m);
  const Ten6 lhs = lincomb(1.0, cr, -1.0, rc);
  const Ten6 rhs =
      lincomb(1.0, tachibana(pkg.S, pkg.C), -pkg.kappa / (n - 1.0), tachibana(g, pkg.C));
  return rel_residual(lhs.flat(), rhs.flat());
}

ClassificationReport classify(const CurvaturePackage& pkg, double tol) {
  const int n = pkg.m.n;
  ClassificationReport cls;
  cls.in_US = in_US(pkg, tol);
  cls.in_UC = in_UC(pkg, tol);
  cls.in_UR = in_UR(pkg, tol);
  cls.u_consistent = ((cls.in_US || cls.in_UC) == cls.in_UR);

  const RicciClass rc = ricci_class(pkg, 1e-7, tol);
  cls.einstein = rc.einstein;
  cls.quasi_einstein = rc.quasi_einstein;
  cls.has_alpha = rc.has_alpha;
  cls.alpha = rc.alpha;
  cls.rank_S_dev = rc.rank_dev;

  const Sym2 g = sym2_of_metric(pkg.m);
  const Ten6 rr = curvature_action(pkg.R, pkg.R, pkg.m);
  const Ten6 qgr = tachibana(g, pkg.R);
  const Ten4 rs = curvature_action(pkg.R, pkg.S, pkg.m);
  const Ten4 qgs = tachibana(g, pkg.S);

  cls.pseudo = fit_span(rr.flat(), {{"L_R", qgr.flat()}}, tol);
  cls.ricci_pseudo = fit_span(rs.flat(), {{"L_S", qgs.flat()}}, tol);
  const Ten6 rc6 = curvature_action(pkg.R, pkg.C, pkg.m);
  const Ten6 cr6 = curvature_action(pkg.C, pkg.R, pkg.m);
  const Ten6 cc6 = curvature_action(pkg.C, pkg.C, pkg.m);
  const Ten6 qgc = tachibana(g, pkg.C);
  const Ten6 qsc = tachibana(pkg.S, pkg.C);
  cls.weyl_pseudo = fit_span(rc6.flat(), {{"L1", qgc.flat()}}, tol);
  cls.pseudo_weyl = fit_span(cc6.flat(), {{"L_C", qgc.flat()}}, tol);
  const Ten6 gen = lincomb(1.0, rr, -1.0, tachibana(pkg.S, pkg.R));
  cls.genpseudo = fit_span(gen.flat(), {{"L", qgc.flat()}}, tol);
  const Ten6 diff = lincomb(1.0, rc6, -1.0, cr6);
  cls.cond01 = fit_span(diff.flat(), {{"L1", qsc.flat()}, {"L2", qgc.flat()}}, tol);
  cls.roter = fit_roter(pkg, tol);
  if (n >= 4) cls.star_residual = condition_star_residual(pkg);
  return cls;
}

AuditReport universal_audit(const CurvaturePackage& pkg, double tol) {
  const int n = pkg.m.n;
  AuditReport rep;
  rep.name = "universal";
  rep.tol = tol;
  rep.premise = Premise::holds;

  ValidatorReport vr;
  is_generalized_curvature(pkg.R, tol, &vr);
  rep.check("validator_R", vr.worst());
  rep.check("ricci_consistent", rel_residual(ricci(pkg.R, pkg.m).flat(), pkg.S.flat()));
  rep.check("kappa_consistent", scalar_residual(metric_trace(pkg.S, pkg.m), pkg.kappa));

  const Sym2 g = sym2_of_metric(pkg.m);
  rep.check("lemma21_cyclic_QgR", cyclic_sum_residual(tachibana(g, pkg.R)));

  if (n >= 4) {
    ValidatorReport vc;
    is_generalized_curvature(pkg.C, tol, &vc);
    rep.check("validator_C", vc.worst());
    rep.check("weyl_trace_free",
              frobenius(ricci(pkg.C, pkg.m).flat()) / std::max(1.0, frobenius(pkg.C.flat())));
    rep.check("prop22", prop22_residual(pkg));
    rep.check("lemma21_cyclic_QSC", cyclic_sum_residual(tachibana(pkg.S, pkg.C)));

    // (eqn2.1srsr)
    const Ten6 qsc = tachibana(pkg.S, pkg.C);
    const Ten6 qsr = tachibana(pkg.S, pkg.R);
    Ten6 rhs = lincomb(1.0, qsr, 1.0 / (n - 2.0),
                       tachibana(g, scaled(0.5, kn_product(pkg.S, pkg.S))));
    rhs = lincomb(1.0, rhs, -pkg.kappa / ((n - 2.0) * (n - 1.0)), tachibana(g, kn_product(g, pkg.S)));
    rep.check("eqn21srsr", rel_residual(qsc.flat(), rhs.flat()));
  }
  return rep;
}

AuditReport thm23_audit(const CurvaturePackage& pkg, const ClassificationReport& cls, double tol) {
  const int n = pkg.m.n;
  AuditReport rep;
  rep.name = "thm23";
  rep.tol = tol;
  if (n < 4 || !cls.einstein) {
    rep.premise = Premise::not_applicable;
    return rep;
  }
  rep.premise = Premise::holds;
  rep.check("star", cls.star_residual);

  if (cls.in_UR && cls.pseudo.exact) {  // part (ii)
    const double lr = cls.pseudo.coeff[0];
    rep.constant("L_R", lr);
    const Sym2 g = sym2_of_metric(pkg.m);
    const Ten6 rr = curvature_action(pkg.R, pkg.R, pkg.m);
    const Ten6 rc = curvature_action(pkg.R, pkg.C, pkg.m);
    const Ten6 cr = curvature_action(pkg.C, pkg.R, pkg.m);
    const Ten6 cc = curvature_action(pkg.C, pkg.C, pkg.m);
    const Ten6 qgc = tachibana(g, pkg.C);
    const Ten6 qsr = tachibana(pkg.S, pkg.R);
    const Ten6 qsc = tachibana(pkg.S, pkg.C);
    rep.check("thm23ii_RR",
              rel_residual(rr.flat(), lincomb(1.0, qsr, lr - pkg.kappa / n, qgc).flat()));
    rep.check("thm23ii_CC",
              rel_residual(cc.flat(), scaled(lr - pkg.kappa / ((n - 1.0) * n), qgc).flat()));
    const Ten6 sum = lincomb(1.0, rc, 1.0, cr);
    rep.check("thm23ii_sum",
              rel_residual(sum.flat(),
                           lincomb(1.0, qsc, 2.0 * lr - pkg.kappa / (n - 1.0), qgc).flat()));
  } else {
    rep.note("not pseudosymmetric on U_R; part (ii) skipped");
  }
  return rep;
}

AuditReport thm24_audit(const CurvaturePackage& pkg, const ClassificationReport& cls, double tol) {
  const int n = pkg.m.n;
  AuditReport rep;
  rep.name = "thm24";
  rep.tol = tol;
  const RoterFit& rf = cls.roter;
  if (!rf.applicable || !rf.exact || !rf.has_derived) {
    rep.premise = rf.applicable && !rf.exact ? Premise::failed : Premise::not_applicable;
    return rep;
  }
  rep.premise = Premise::holds;
  rep.constant("phi", rf.phi);
  rep.constant("mu", rf.mu);
  rep.constant("eta", rf.eta);
  rep.constant("alpha1", rf.alpha1);
  rep.constant("alpha2", rf.alpha2);
  rep.constant("L_R", rf.L_R);
  rep.constant("L", rf.L);
  rep.constant("L_C", rf.L_C);

  const Sym2 g = sym2_of_metric(pkg.m);
  const Sym2 s2 = metric_power(pkg.S, pkg.m, 2);
  rep.check("S2_closed_form",
            rel_residual(s2.flat(), lincomb(rf.alpha1, pkg.S, rf.alpha2, g).flat()));

  const Ten6 rr = curvature_action(pkg.R, pkg.R, pkg.m);
  const Ten6 rc = curvature_action(pkg.R, pkg.C, pkg.m);
  const Ten6 cr = curvature_action(pkg.C, pkg.R, pkg.m);
  const Ten6 cc = curvature_action(pkg.C, pkg.C, pkg.m);
  const Ten6 qgr = tachibana(g, pkg.R);
  const Ten6 qgc = tachibana(g, pkg.C);
  const Ten6 qsr = tachibana(pkg.S, pkg.R);
  const Ten6 qsc = tachibana(pkg.S, pkg.C);
  const Ten6 qsg = tachibana(pkg.S, big_g(pkg.m));
  const Ten4 rs = curvature_action(pkg.R, pkg.S, pkg.m);
  const Ten4 csym = curvature_action(pkg.C, pkg.S, pkg.m);
  const Ten4 qgs = tachibana(g, pkg.S);

  rep.check("RC_LR", rel_residual(rc.flat(), scaled(rf.L_R, qgc).flat()));
  rep.check("RR_LR", rel_residual(rr.flat(), scaled(rf.L_R, qgr).flat()));
  rep.check("RS_LR", rel_residual(rs.flat(), scaled(rf.L_R, qgs).flat()));
  rep.check("RR_QSR_L", rel_residual(rr.flat(), lincomb(1.0, qsr, rf.L, qgc).flat()));
  rep.check("CC_LC", rel_residual(cc.flat(), scaled(rf.L_C, qgc).flat()));
  rep.check("CR_LC", rel_residual(cr.flat(), scaled(rf.L_C, qgr).flat()));
  rep.check("CS_LC", rel_residual(csym.flat(), scaled(rf.L_C, qgs).flat()));

  const Ten6 diff = lincomb(1.0, rc, -1.0, cr);
  {  // first expansion of R.C - C.R (through Q(S,R))
    const double c1 = ((n - 1.0) * rf.mu - 1.0) / ((n - 2.0) * rf.phi) + pkg.kappa / (n - 1.0);
    const double c2 =
        (rf.mu * ((n - 1.0) * rf.mu - 1.0) - (n - 1.0) * rf.phi * rf.eta) / ((n - 2.0) * rf.phi);
    Ten6 rhs = lincomb(1.0 / (n - 2.0), qsr, c1, qgr);
    rhs = lincomb(1.0, rhs, c2, qsg);
    rep.check("diff_expansion_a", rel_residual(diff.flat(), rhs.flat()));
  }
  {  // second expansion (through Q(g,R) and Q(S,G) only)
    const double c1 = (rf.mu - 1.0 / (n - 2.0)) / rf.phi + pkg.kappa / (n - 1.0);
    const double c2 = rf.mu / rf.phi * (rf.mu - 1.0 / (n - 2.0)) - rf.eta;
    const Ten6 rhs = lincomb(c1, qgr, c2, qsg);
    rep.check("diff_expansion_b", rel_residual(diff.flat(), rhs.flat()));
  }
  rep.check("star", cls.star_residual);
  {  // (ii) sum rule
    const Ten6 sum = lincomb(1.0, rc, 1.0, cr);
    const double coef = rf.L + rf.L_C - 1.0 / ((n - 2.0) * rf.phi);
    rep.check("sum_rule", rel_residual(sum.flat(), lincomb(1.0, qsc, coef, qgc).flat()));
  }
  return rep;
}

AuditReport pseudo_bis_audit(const CurvaturePackage& pkg, const ClassificationReport& cls,
                             double tol) {
  const int n = pkg.m.n;
  AuditReport rep;
  rep.name = "pseudo_bis";
  rep.tol = tol;
  if (!cls.in_UR) {
    rep.premise = Premise::not_applicable;
    return rep;
  }
  if (!cls.pseudo.exact) {
    rep.premise = Premise::failed;
    return rep;
  }
  rep.premise = Premise::holds;
  const double lr = cls.pseudo.coeff[0];
  rep.constant("L_R", lr);
  const Sym2 g = sym2_of_metric(pkg.m);
  const Ten4 rs = curvature_action(pkg.R, pkg.S, pkg.m);
  rep.check("RS", rel_residual(rs.flat(), scaled(lr, tachibana(g, pkg.S)).flat()));
  if (n >= 4) {
    const Ten6 rc = curvature_action(pkg.R, pkg.C, pkg.m);
    rep.check("RC", rel_residual(rc.flat(), scaled(lr, tachibana(g, pkg.C)).flat()));
  }
  return rep;
}

AuditReport remark25ii_audit(const CurvaturePackage& pkg, const ClassificationReport& cls,
                             double tol) {
  const int n = pkg.m.n;
  AuditReport rep;
  rep.name = "remark25ii";
  rep.tol = tol;
  if (n < 4 || !cls.quasi_einstein) {
    rep.premise = Premise::not_applicable;
    return rep;
  }
  rep.premise = Premise::holds;
  const Sym2 g = sym2_of_metric(pkg.m);
  const Ten6 qsr = tachibana(pkg.S, pkg.R);
  Ten6 rhs = lincomb(1.0, tachibana(pkg.S, pkg.C),
                     -(cls.alpha - pkg.kappa / (n - 1.0)) / (n - 2.0),
                     tachibana(g, kn_product(g, pkg.S)));
  rep.check("eqn21trtrtr", rel_residual(qsr.flat(), rhs.flat()));
  rep.constant("alpha", cls.alpha);
  return rep;
}

AuditReport thm44_45_audit(const HypersurfaceData& h, const CurvaturePackage& pkg,
                           const CubicFit& fit, double tol) {
  const int n = h.m.n;
  AuditReport rep;
  rep.name = "thm44_45";
  rep.tol = tol;
  if (n < 4 || !fit.in_UH) {
    rep.premise = Premise::not_applicable;
    return rep;
  }
  if (fit.residual > 1e-8) {
    rep.premise = Premise::failed;
    return rep;
  }

  const Sym2 g = sym2_of_metric(pkg.m);
  const Sym2 s2 = metric_power(pkg.S, pkg.m, 2);
  const Ten4 ss = kn_product(pkg.S, pkg.S);
  const Ten4 gs = kn_product(g, pkg.S);
  const Ten4 gs2 = kn_product(g, s2);
  const Ten6 qsr = tachibana(pkg.S, pkg.R);

  // Thm 4.6 hypothesis: Q(S,R) = Q(g,T) with T in the span the theorems
  // use; Q(g, g^g) = 0, so the G direction is omitted.
  FitResult hyp = fit_span(qsr.flat(),
                           {{"t_R", tachibana(g, pkg.R).flat()},
                            {"t_gs", tachibana(g, gs).flat()},
                            {"t_gs2", tachibana(g, gs2).flat()},
                            {"t_ss", tachibana(g, ss).flat()}},
                           1e-9);
  rep.constant("hypothesis_residual", hyp.residual);
  if (!hyp.exact) {
    rep.premise = Premise::failed;
    rep.note("Q(S,R) not a Tachibana tensor Q(g,T) over the candidate span");
    return rep;
  }
  rep.premise = Premise::holds;
  rep.note("lambda G terms indeterminate (annihilated by Q(g,.)); identities checked modulo G");

  const double ct = h.c();
  const double eps_psi = h.epsilon * fit.psi;
  const double kappa = pkg.kappa;

  const Ten6 rr = curvature_action(pkg.R, pkg.R, pkg.m);
  const Ten6 rc = curvature_action(pkg.R, pkg.C, pkg.m);
  const Ten6 cr = curvature_action(pkg.C, pkg.R, pkg.m);
  const Ten6 cc = curvature_action(pkg.C, pkg.C, pkg.m);

  {  // B1 (against R.R)
    Ten4 b = scaled(kappa + eps_psi - (n - 1.0) * (n - 1.0) * ct, pkg.R);
    b = lincomb(1.0, b, -0.5, ss);
    b = lincomb(1.0, b, 1.0, gs2);
    b = lincomb(1.0, b, eps_psi - (n - 1.0) * ct, gs);
    b = scaled(1.0 / (n - 1.0), b);
    rep.check("thm44_B1", rel_residual(rr.flat(), tachibana(g, b).flat()));
  }
  {  // B2 (against R.C)
    Ten4 b = scaled(kappa + eps_psi - (n - 1.0) * (n - 1.0) * ct, pkg.R);
    b = lincomb(1.0, b, -1.0 / (n - 2.0), gs2);
    b = lincomb(1.0, b, -0.5, ss);
    b = lincomb(1.0, b, -(eps_psi - (n - 1.0) * (n - 1.0) * ct) / (n - 2.0), gs);
    b = scaled(1.0 / (n - 1.0), b);
    rep.check("thm44_B2", rel_residual(rc.flat(), tachibana(g, b).flat()));
  }
  {  // B3 (against C.R)
    Ten4 b = scaled(kappa / (n - 1.0) + 2.0 * eps_psi / (n - 1.0) - h.kappa_tilde / (n + 1.0),
                    pkg.R);
    Ten4 tail = lincomb(eps_psi - (n - 1.0) * ct, gs, -0.5, ss);
    tail = lincomb(1.0, tail, 1.0, gs2);
    b = lincomb(1.0, b, (n - 3.0) / ((n - 2.0) * (n - 1.0)), tail);
    rep.check("thm44_B3", rel_residual(cr.flat(), tachibana(g, b).flat()));
  }
  {  // B4 (against R.C - C.R)
    Ten4 b = scaled(-eps_psi / (n - 1.0) + ct, pkg.R);
    b = lincomb(1.0, b, -eps_psi / (n - 1.0) + 2.0 * ct, gs);
    b = lincomb(1.0, b, -1.0 / (n - 1.0), gs2);
    b = lincomb(1.0, b, -0.5 / ((n - 2.0) * (n - 1.0)), ss);
    const Ten6 diff = lincomb(1.0, rc, -1.0, cr);
    rep.check("thm44_B4", rel_residual(diff.flat(), tachibana(g, b).flat()));
  }
  {  // B5 of Thm 4.5 (against C.C), built on C
    Ten4 b = scaled(kappa / (n - 1.0) + 2.0 * eps_psi / (n - 1.0) - h.kappa_tilde / (n + 1.0),
                    pkg.C);
    Ten4 tail = lincomb((n - 2.0) / 2.0, ss, -kappa, gs);
    tail = lincomb(1.0, tail, 1.0, gs2);
    b = lincomb(1.0, b, -(n - 3.0) / ((n - 2.0) * (n - 2.0) * (n - 1.0)), tail);
    rep.check("thm45_B", rel_residual(cc.flat(), tachibana(g, b).flat()));
  }
  return rep;
}

AuditReport thm5x_audit(const HypersurfaceData& h, const CurvaturePackage& pkg, const CubicFit& fit,
                        const ClassificationReport& cls, double tol) {
  const int n = h.m.n;
  AuditReport rep;
  rep.name = "thm5x";
  rep.tol = tol;
  if (n < 4 || !fit.in_UH) {
    rep.premise = Premise::not_applicable;
    return rep;
  }
  if (!cls.cond01.exact) {
    rep.premise = Premise::failed;
    return rep;
  }
  if (cls.einstein) {
    rep.premise = Premise::not_applicable;  // Thm 5.x live on U_S
    return rep;
  }
  rep.premise = Premise::holds;
  rep.constant("L1", cls.cond01.coeff[0]);
  rep.constant("L2", cls.cond01.coeff[1]);

  // (cond01) on U_H forces (DS4); checked as a conclusion of its own
  rep.check("ds4_follows", fit.residual);

  const double ct = h.c();
  const Sym2 g = sym2_of_metric(pkg.m);

  if (cls.quasi_einstein) {  // Thm 5.1
    rep.check("ds4aa_rho_zero", fit.rho_rel);
    rep.check("qqee02", scalar_residual(cls.alpha, pkg.kappa / (n - 1.0) - ct));
    const Ten6 rc = curvature_action(pkg.R, pkg.C, pkg.m);
    const Ten6 cr = curvature_action(pkg.C, pkg.R, pkg.m);
    const Ten6 lhs = scaled(n - 2.0, lincomb(1.0, rc, -1.0, cr));
    const Ten6 rhs =
        lincomb(1.0, tachibana(pkg.S, pkg.C), -ct, tachibana(g, pkg.C));
    rep.check("quasi321", rel_residual(lhs.flat(), rhs.flat()));
  } else {  // Thms 5.2/5.3: rank(S - alpha g) > 1 for every alpha
    rep.check("star", cls.star_residual);
    const Sym2 s2 = metric_power(pkg.S, pkg.m, 2);
    const double eps_psi = h.epsilon * fit.psi;
    Ten4 t = scaled(eps_psi + pkg.kappa - (n - 1.0) * ct, pkg.R);
    t = lincomb(1.0, t, eps_psi - 2.0 * (n - 1.0) * ct, kn_product(g, pkg.S));
    t = lincomb(1.0, t, 1.0, kn_product(g, s2));
    t = lincomb(1.0, t, -0.5, kn_product(pkg.S, pkg.S));
    const Ten6 lhs = scaled(n - 1.0, tachibana(pkg.S, pkg.R));
    rep.check("cond02uuu", rel_residual(lhs.flat(), tachibana(g, t).flat()));
  }
  return rep;
}

}  // namespace curvlab
