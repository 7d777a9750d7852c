#ifndef CURVLAB_CONDITION_HPP
#define CURVLAB_CONDITION_HPP

#include "curvlab/fitting.hpp"
#include "curvlab/hypersurface.hpp"
#include "curvlab/report.hpp"

// Classification of the pseudosymmetry-type conditions, the Roter
// decomposition, and the audits of the preliminary and section-5 theorems.

namespace curvlab {

// Least squares of R over {S^S/2, g^S, g^g/2}. On an exact fit with
// phi != 0 the derived scalars obey the closed forms and feed the
// pseudosymmetry checks.
struct RoterFit {
  bool applicable = false;  // needs U_S and U_C membership
  double phi = 0.0, mu = 0.0, eta = 0.0;
  double residual = 0.0;
  bool exact = false;
  bool has_derived = false;
  double alpha1 = 0.0, alpha2 = 0.0, L_R = 0.0, L = 0.0, L_C = 0.0;
};

RoterFit fit_roter(const CurvaturePackage& pkg, double tol = 1e-8);

// Residual of condition (*): C.R - R.C = Q(S,C) - kappa/(n-1) Q(g,C).
double condition_star_residual(const CurvaturePackage& pkg);

struct ClassificationReport {
  bool in_US = false, in_UC = false, in_UR = false;
  bool u_consistent = true;  // (U_S or U_C) == U_R, reported only
  bool einstein = false;
  bool quasi_einstein = false;
  bool has_alpha = false;
  double alpha = 0.0;
  int rank_S_dev = -1;  // rank(S - alpha g) for the fitted alpha

  // Fits are always computed; the in_U* flags say where each condition is
  // meaningfully posed (off them the fit is 0 = 0 and coefficients are
  // minimal-norm).
  FitResult pseudo;        // R.R = L_R Q(g,R)        [U_R]
  FitResult ricci_pseudo;  // R.S = L_S Q(g,S)        [U_S]
  FitResult weyl_pseudo;   // R.C = L1 Q(g,C)         [U_C]
  FitResult pseudo_weyl;   // C.C = L_C Q(g,C)        [U_C]
  FitResult genpseudo;     // R.R - Q(S,R) = L Q(g,C) [U_C]
  FitResult cond01;        // R.C - C.R over {Q(S,C), Q(g,C)}
  RoterFit roter;
  double star_residual = -1.0;  // condition (*) residual, n >= 4
};

ClassificationReport classify(const CurvaturePackage& pkg, double tol = 1e-8);

// Universal algebraic identities holding on every package: validator,
// Weyl trace-freeness, the Prop 2.2 identity, the Lemma 2.1(i) cyclic
// sums, and the Q(S,C) expansion (eqn2.1srsr).
AuditReport universal_audit(const CurvaturePackage& pkg, double tol = 1e-10);

// Einstein manifolds: condition (*), plus the three Thm 2.3(ii)
// identities when the package is also pseudosymmetric on U_R.
AuditReport thm23_audit(const CurvaturePackage& pkg, const ClassificationReport& cls, double tol = 1e-10);

// Roter manifolds: every Thm 2.4 closed form and identity, including
// both printed expansions of R.C - C.R and the (ii) sum rule.
AuditReport thm24_audit(const CurvaturePackage& pkg, const ClassificationReport& cls, double tol = 1e-8);

// (pseudo) implies (Weyl-pseudo-bis): R.S and R.C proportional with the
// same L_R.
AuditReport pseudo_bis_audit(const CurvaturePackage& pkg, const ClassificationReport& cls,
                             double tol = 1e-8);

// Quasi-Einstein identity (eqn2.1trtrtr) of Remark 2.5(ii).
AuditReport remark25ii_audit(const CurvaturePackage& pkg, const ClassificationReport& cls,
                             double tol = 1e-8);

// Thms 4.4/4.5/4.6: when Q(S,R) = Q(g,T) is solvable over the candidate
// span, each of the five action tensors equals Q(g, B_i) with the paper's
// B_i; verified modulo the G direction (lambda is annihilated by Q(g,.)).
AuditReport thm44_45_audit(const HypersurfaceData& h, const CurvaturePackage& pkg,
                           const CubicFit& fit, double tol = 1e-8);

// Thms 5.1-5.3 on hypersurfaces satisfying (cond01).
AuditReport thm5x_audit(const HypersurfaceData& h, const CurvaturePackage& pkg, const CubicFit& fit,
                        const ClassificationReport& cls, double tol = 1e-8);

}  // namespace curvlab

#endif
