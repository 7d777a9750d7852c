#ifndef CURVLAB_HYPERSURFACE_HPP
#define CURVLAB_HYPERSURFACE_HPP

#include "curvlab/curvature.hpp"
#include "curvlab/fitting.hpp"
#include "curvlab/report.hpp"

// Intrinsic curvature of a hypersurface in a space form from its second
// fundamental tensor via the Gauss equation
//   R = (eps/2) H^H + kappa_tilde/(n(n+1)) G,
// plus the audits of the hypersurface identities.

namespace curvlab {

struct HypersurfaceData {
  MetricPoint m;       // induced metric
  Sym2 H;              // second fundamental tensor
  double epsilon = 1;  // normal sign, +-1, an input (never inferred)
  double kappa_tilde = 0.0;

  // space-form constant of the ambient
  double c() const { return kappa_tilde / (m.n * (m.n + 1.0)); }
};

// Membership in U_H: H^2 outside span{H, g}. When the fit is exact the
// coefficients of H^2 = alpha H + beta g are returned (minimal-norm on
// umbilical degeneracies).
struct UHReport {
  bool in_UH = false;
  double residual = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

// Least-squares coefficients of H^3 = tr(H) H^2 + psi H + rho g, plus the
// general cubic H^3 = phi H^2 + psi H + rho g. Off U_H the coefficients
// are non-unique (minimal-norm values, flagged via in_UH).
struct CubicFit {
  double psi = 0.0;
  double rho = 0.0;
  double residual = 0.0;
  bool in_UH = false;
  double phi_gen = 0.0, psi_gen = 0.0, rho_gen = 0.0, residual_gen = 0.0;

  // |rho| relative to the scale of H^3; used for the (DS4aa) premise.
  double rho_rel = 0.0;
};

CurvaturePackage gauss_package(const HypersurfaceData& h);
UHReport detect_UH(const HypersurfaceData& h, double tol = 1e-8);
CubicFit fit_cubic(const HypersurfaceData& h, double tol = 1e-8);

// Spectral Einstein/quasi-Einstein detector: eigenvalues of g^-1 S
// clustered with relative gap `gap`; alpha is the eigenvalue of
// multiplicity >= n-1 when one exists. Einstein means S - alpha g
// vanishes; quasi-Einstein means rank(S - alpha g) = 1 (which also covers
// the non-diagonalizable null case, where the whole spectrum collapses
// to alpha but S != alpha g).
struct RicciClass {
  bool has_alpha = false;
  double alpha = 0.0;
  bool einstein = false;
  bool quasi_einstein = false;
  int rank_dev = -1;  // rank(S - alpha g) when has_alpha
};
RicciClass ricci_class(const CurvaturePackage& pkg, double gap = 1e-7, double tol = 1e-8);

// Audits. Each returns a premise/residual report; `tol` is the
// conclusion tolerance from the acceptance criteria.
AuditReport gauss_audit(const HypersurfaceData& h, const CurvaturePackage& pkg, double tol = 1e-10);
AuditReport eq900ab_audit(const HypersurfaceData& h, const CurvaturePackage& pkg, double tol = 1e-9);
AuditReport prop41_audit(const HypersurfaceData& h, const CurvaturePackage& pkg, const CubicFit& fit,
                         double tol = 1e-9);
AuditReport prop42_audit(const HypersurfaceData& h, const CurvaturePackage& pkg, const CubicFit& fit,
                         double tol = 1e-9);
AuditReport prop43v_audit(const HypersurfaceData& h, const CurvaturePackage& pkg, const CubicFit& fit,
                          double tol = 1e-9);
AuditReport prop47_audit(const HypersurfaceData& h, const CurvaturePackage& pkg, const CubicFit& fit,
                         double tol = 1e-9);
AuditReport thm48_audit(const HypersurfaceData& h, const CurvaturePackage& pkg, const CubicFit& fit,
                        double tol = 1e-9);
AuditReport thm3x_audit(const HypersurfaceData& h, const CurvaturePackage& pkg, double tol = 1e-8);

}  // namespace curvlab

#endif
