#ifndef CURVLAB_KERNELS_HPP
#define CURVLAB_KERNELS_HPP

#include "curvlab/tensor.hpp"

// Contraction kernels behind the curvature derivation B.T and the
// Tachibana tensor Q(A,T). These are the hot inner loops of the fuzz
// suites, so each comes in an OpenMP flavor (the default) and a serial
// reference used by the tests and the benchmark. Both flavors compute
// every output entry with the same summation order, so results are
// bit-identical.
//
// Component conventions (endomorphism acting through the last two slots):
//   (B.T)(X1..Xk, X, Y) = -sum_m T(X1, .., Bop(X,Y)X_m, .., Xk)
// with Bop the endomorphism of B, raising the 4th slot with g^-1, and
//   Q(A,T)(X1..Xk, X, Y) = -sum_m T(X1, .., (X wedge_A Y)X_m, .., Xk),
//   (X wedge_A Y)Z = A(Y,Z) X - A(X,Z) Y.

namespace curvlab {

// B with its 4th slot raised: Bup[p][q][a][l] = B_{pqas} g^{sl}.
Ten4 raise_last_slot(const Ten4& b, const MetricPoint& m);

// B.T for (0,4) T -> (0,6); OpenMP over the output block.
Ten6 action_on_ten4(const Ten4& b_raised, const Ten4& t);
Ten6 action_on_ten4_serial(const Ten4& b_raised, const Ten4& t);

// B.T for (0,2) T -> (0,4).
Ten4 action_on_sym2(const Ten4& b_raised, const Sym2& t);
Ten4 action_on_sym2_serial(const Ten4& b_raised, const Sym2& t);

// Q(A,T) for (0,4) T -> (0,6).
Ten6 tachibana(const Sym2& a, const Ten4& t);
Ten6 tachibana_serial(const Sym2& a, const Ten4& t);

// Q(A,T) for (0,2) T -> (0,4).
Ten4 tachibana(const Sym2& a, const Sym2& t);
Ten4 tachibana_serial(const Sym2& a, const Sym2& t);

}  // namespace curvlab

#endif
