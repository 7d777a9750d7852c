#ifndef CURVLAB_GALLERY_HPP
#define CURVLAB_GALLERY_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "curvlab/condition.hpp"

// Gallery driver: loads a JSON config of cases (charts, hypersurfaces,
// algebraic fuzz blocks), runs every requested audit on each, and emits a
// machine-readable report. A case fails only on a premise-true /
// conclusion-false audit; premise-failed is vacuous truth.

namespace curvlab {

struct GalleryOptions {
  int workers = 1;
  bool strict = false;        // errored cases fail the run
  bool no_meta = false;       // drop timings (byte-stable reports)
  uint64_t seed = 1;          // base seed for algebraic cases without one
  double tol = 0.0;           // >0 overrides the shared fit tolerance
};

struct GalleryResult {
  nlohmann::json report;
  int exit_code = 0;  // 0 ok, 1 audit failure (or errored with strict), 2 config error
};

// Audit names recognized in a case's "checks" list. `default_audits`
// is what "all" expands to; star_holds is the opt-in negative control
// asserting condition (*) as premise-true.
const std::vector<std::string>& default_audits();
bool is_known_audit(const std::string& name);

// The built-in default gallery (also committed at gallery/default.json).
nlohmann::json default_gallery();

// Validates and runs a parsed config.
GalleryResult run_gallery(const nlohmann::json& config, const GalleryOptions& options);

// Loads the config from a file path ("" means the built-in gallery).
GalleryResult run_gallery_file(const std::string& config_path, const GalleryOptions& options);

// Renders the per-audit residual table as CSV.
std::string report_to_csv(const nlohmann::json& report);

}  // namespace curvlab

#endif
