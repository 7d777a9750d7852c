#ifndef CURVLAB_CURVATURE_HPP
#define CURVLAB_CURVATURE_HPP

#include <cstdint>
#include <optional>

#include "curvlab/kernels.hpp"
#include "curvlab/tensor.hpp"

// Curvature-level operators: Ricci/Weyl extraction, the derivation
// action B.T, the Tachibana tensor Q(A,T), and the universal algebraic
// identities they satisfy.

namespace curvlab {

// Ambient constants carried by packages produced from a hypersurface or
// space-form context (space-form constant c = kappa_tilde / (n(n+1))).
struct AmbientData {
  double epsilon = 1.0;      // +1 or -1
  double kappa_tilde = 0.0;  // ambient scalar curvature
};

struct CurvaturePackage {
  MetricPoint m;
  Ten4 R;
  Sym2 S;          // S_ij = g^{ha} R_{aijh}
  double kappa = 0.0;
  Ten4 C;          // C = R - g^S/(n-2) + kappa G/((n-2)(n-1)); zero when n < 3
  std::optional<AmbientData> ambient;
};

// Ricci contraction S_ij = g^{ha} R_{aijh}. The sign is pinned by the
// golden test: R = +G on the unit round sphere gives kappa = n(n-1) > 0.
Sym2 ricci(const Ten4& r, const MetricPoint& m);

// Scalar curvature of a (0,4) tensor: g^{ij} g^{ha} T_{aijh}.
double scalar_of(const Ten4& t, const MetricPoint& m);

// Splits R into the full package. Requires n >= 3 (the Weyl formula has
// an n-2 denominator); n >= 4 for C to be meaningful.
CurvaturePackage weyl_decompose(const Ten4& r, const MetricPoint& m);

// B.T with B validated as a generalized curvature tensor. A validator
// failure is reported through `validator_warning` (when non-null), never
// thrown: the action is well-defined for any B.
Ten6 curvature_action(const Ten4& b, const Ten4& t, const MetricPoint& m,
                      bool* validator_warning = nullptr);
Ten4 curvature_action(const Ten4& b, const Sym2& t, const MetricPoint& m,
                      bool* validator_warning = nullptr);

// Relative norm of the cyclic sum of a (0,6) tensor over its three index
// pairs (12)(34)(56). Vanishes for every Tachibana tensor Q(A,T) with T
// a generalized curvature tensor (Lemma 2.1 (i)).
double cyclic_sum_residual(const Ten6& q6);

// Q(g,T) vanishes iff T is the G-multiple with T's own scalar curvature:
// both sides are evaluated and must agree.
struct QgKernelResult {
  bool q_vanishes = false;
  bool is_g_multiple = false;
  double q_norm_rel = 0.0;     // |Q(g,T)| / max(1, |T|)
  double g_dist_rel = 0.0;     // |T - kappa(T) G/((n-1)n)| / max(1, |T|)
};
QgKernelResult qg_kernel_test(const Ten4& t, const MetricPoint& m, double tol = 1e-10);

// Residual of the universal identity
//   R.C + C.R = R.R + C.C - Q(g, -kappa/(n-1) g^S + g^S^2) / (n-2)^2.
double prop22_residual(const CurvaturePackage& pkg);

// Sum of `terms` products A_i ^ B_i with entries drawn uniformly from
// [-1,1]; deterministic for a fixed seed (own generator, not the
// platform-dependent std distributions).
Ten4 random_algebraic_curvature(uint64_t seed, int n, int terms);

// Deterministic uniform double in [lo, hi] used by the fuzz harnesses.
class SplitMix64 {
public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t next_u64();
  double next_double(double lo, double hi);

private:
  uint64_t state_;
};

}  // namespace curvlab

#endif
