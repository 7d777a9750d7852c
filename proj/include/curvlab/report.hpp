#ifndef CURVLAB_REPORT_HPP
#define CURVLAB_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

// Theorem audits are premise => conclusion checks. A failed or
// inapplicable premise makes the audit vacuously true; the only failing
// outcome is premise-true with a conclusion residual above tolerance.

namespace curvlab {

enum class Premise { holds, failed, not_applicable };

inline const char* premise_name(Premise p) {
  switch (p) {
    case Premise::holds: return "holds";
    case Premise::failed: return "failed";
    default: return "n/a";
  }
}

struct AuditReport {
  std::string name;
  Premise premise = Premise::not_applicable;
  double tol = 1e-8;
  std::vector<std::pair<std::string, double>> residuals;
  std::vector<std::pair<std::string, double>> constants;
  std::vector<std::string> failed_checks;
  std::vector<std::string> notes;

  // Record a conclusion residual; counts as failed when above tol.
  void check(const std::string& key, double residual) {
    residuals.emplace_back(key, residual);
    if (!(residual <= tol)) failed_checks.push_back(key);
  }
  // Record a boolean conclusion.
  void flag(const std::string& key, bool ok) {
    constants.emplace_back(key, ok ? 1.0 : 0.0);
    if (!ok) failed_checks.push_back(key);
  }
  void constant(const std::string& key, double v) { constants.emplace_back(key, v); }
  void note(const std::string& text) { notes.push_back(text); }

  bool pass() const { return premise != Premise::holds || failed_checks.empty(); }
};

}  // namespace curvlab

#endif
