#ifndef CURVLAB_CHART_HPP
#define CURVLAB_CHART_HPP

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvlab/curvature.hpp"
#include "curvlab/taylor.hpp"

// Coordinate charts: a metric as a function of coordinates, evaluable over
// second-order Taylor scalars, plus a domain guard. The chart library is a
// closed set of built-in families keyed by the gallery config; there is no
// user expression language.

namespace curvlab {

using TaylorMatrix = std::vector<std::vector<TaylorScalar>>;

struct Chart {
  int n = 0;
  std::string kind;
  nlohmann::json params;
  std::function<TaylorMatrix(const std::vector<TaylorScalar>&)> metric_fn;
  std::function<bool(const std::vector<double>&)> domain_guard;
};

// Known kinds: "flat" {n, signature}, "space_form" {n, c},
// "sphere" {dim, radius}, "product_spheres" {p, r1, q, r2},
// "rn_ds" {M, Q, Lambda}, "warped_1d_einstein" {n, base_sign, a, b}.
// Throws std::invalid_argument for unknown kinds or invalid parameters.
Chart build_chart(const std::string& kind, const nlohmann::json& params);

const std::vector<std::string>& chart_kinds();

// Metric values at a point (no derivatives), for finite-difference checks.
Mat metric_values(const Chart& chart, const std::vector<double>& x);

// Evaluate the curvature of the chart metric at x through the coordinate
// formulas Gamma^l_ij = (1/2) g^{ls} (d_i g_js + d_j g_is - d_s g_ij) and
// R_abcd = g_ld (d_a Gamma^l_bc - d_b Gamma^l_ac + Gamma.Gamma terms).
// Throws std::domain_error outside the guarded domain.
CurvaturePackage curvature_at(const Chart& chart, const std::vector<double>& x);

}  // namespace curvlab

#endif
