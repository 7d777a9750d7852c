#ifndef CURVLAB_FITTING_HPP
#define CURVLAB_FITTING_HPP

#include <span>
#include <string>
#include <vector>

#include "curvlab/tensor.hpp"

// Generic least-squares engine behind every "these tensors are linearly
// dependent" condition. Fits use normal equations on Gram matrices of
// size <= 5 with a pseudo-inverse solve, minimal-norm on degeneracy.

namespace curvlab {

struct FitResult {
  std::vector<std::string> names;
  std::vector<double> coeff;
  double residual = 0.0;  // rel_residual(target, fitted combination)
  bool exact = false;     // residual <= tol

  double operator[](const std::string& name) const;
};

struct NamedSpan {
  std::string name;
  std::span<const double> data;
};

// Least-squares coefficients of `target` over `basis` (all flattened to a
// common valence by the caller). Degenerate Gram matrices fall back to the
// minimum-norm solution.
FitResult fit_span(std::span<const double> target, const std::vector<NamedSpan>& basis, double tol);

}  // namespace curvlab

#endif
