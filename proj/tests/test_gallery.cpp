#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>

#include "curvlab/gallery.hpp"

using namespace curvlab;
using json = nlohmann::json;

TEST_CASE("default gallery passes with exit code 0") {
  GalleryOptions opt;
  opt.no_meta = true;
  GalleryResult res = run_gallery(default_gallery(), opt);
  CHECK(res.exit_code == 0);
  CHECK(res.report["summary"]["failed_cases"] == 0);
  CHECK(res.report["summary"]["errored_cases"] == 0);
  CHECK(res.report["summary"]["pass"] == true);
}

TEST_CASE("report is deterministic and worker-count independent") {
  GalleryOptions opt1;
  opt1.no_meta = true;
  opt1.workers = 1;
  GalleryOptions opt4 = opt1;
  opt4.workers = 4;

  const std::string run1 = run_gallery(default_gallery(), opt1).report.dump();
  const std::string run1b = run_gallery(default_gallery(), opt1).report.dump();
  const std::string run4 = run_gallery(default_gallery(), opt4).report.dump();
  CHECK(run1 == run1b);  // byte-identical rerun
  CHECK(run1 == run4);   // parallel equivalence
}

TEST_CASE("committed default.json matches the built-in gallery") {
  std::ifstream in(std::string(CURVLAB_SOURCE_DIR) + "/gallery/default.json");
  REQUIRE(in.good());
  json committed;
  in >> committed;
  CHECK(committed == default_gallery());
}

TEST_CASE("corrupted config: asserting condition (*) where it fails") {
  json config = json{{"cases", json::array({json{
      {"name", "three_curvature_5"},
      {"source", json{{"type", "hypersurface"},
                      {"g", "identity"},
                      {"H", json::array({1, 1, -1, -1, 0})},
                      {"epsilon", 1},
                      {"kappa_tilde", 0}}},
      {"checks", json::array({"star_holds"})}}})}};
  GalleryOptions opt;
  opt.no_meta = true;
  GalleryResult res = run_gallery(config, opt);
  CHECK(res.exit_code == 1);
  const json& failing = res.report["summary"]["failing_audits"];
  REQUIRE(failing.size() == 1);
  CHECK(failing[0] == "three_curvature_5/star_holds");
  // the named audit carries the offending residual
  const json& audit = res.report["cases"][0]["audits"][0];
  CHECK(audit["premise"] == "holds");
  CHECK(audit["residuals"]["star"].get<double>() > 1e-4);
}

TEST_CASE("empty case list is a clean pass") {
  GalleryOptions opt;
  opt.no_meta = true;
  GalleryResult res = run_gallery(json{{"cases", json::array()}}, opt);
  CHECK(res.exit_code == 0);
  CHECK(res.report["summary"]["total_cases"] == 0);
}

TEST_CASE("config errors exit with code 2") {
  GalleryOptions opt;
  {  // unknown chart kind
    json config = json{{"cases", json::array({json{
        {"name", "x"},
        {"source",
         json{{"type", "chart"}, {"kind", "torus"}, {"points", json::array({json::array({0})})}}}}})}};
    CHECK(run_gallery(config, opt).exit_code == 2);
  }
  {  // unknown check name
    json config = json{{"cases", json::array({json{
        {"name", "x"},
        {"source", json{{"type", "hypersurface"}, {"H", json::array({1, 1, 1, 1, 1})}}},
        {"checks", json::array({"thm99"})}}})}};
    CHECK(run_gallery(config, opt).exit_code == 2);
  }
  {  // duplicate names
    json c = json{{"name", "x"},
                  {"source", json{{"type", "hypersurface"}, {"H", json::array({1, 1, 1, 1, 1})}}}};
    json config = json{{"cases", json::array({c, c})}};
    CHECK(run_gallery(config, opt).exit_code == 2);
  }
  {  // unreadable / malformed file path
    CHECK(run_gallery_file("/nonexistent/config.json", opt).exit_code == 2);
  }
}

TEST_CASE("domain guard violations mark the case errored") {
  json config = json{{"cases", json::array({json{
      {"name", "horizon"},
      {"source", json{{"type", "chart"},
                      {"kind", "rn_ds"},
                      {"params", json{{"M", 1.0}, {"Q", 1.0}}},
                      {"points", json::array({json::array({0.0, 1.0, 1.0, 0.0})})}}}}})}};
  GalleryOptions opt;
  opt.no_meta = true;
  GalleryResult res = run_gallery(config, opt);
  CHECK(res.exit_code == 0);  // errored is not failed
  CHECK(res.report["cases"][0]["status"] == "errored");
  opt.strict = true;
  CHECK(run_gallery(config, opt).exit_code == 1);
}

TEST_CASE("every default audit fires with premise holds somewhere in the gallery") {
  GalleryOptions opt;
  opt.no_meta = true;
  GalleryResult res = run_gallery(default_gallery(), opt);
  std::set<std::string> fired;
  for (const json& c : res.report["cases"]) {
    if (!c.contains("audits")) continue;
    for (const json& a : c["audits"])
      if (a["premise"] == "holds") fired.insert(a["name"].get<std::string>());
  }
  for (const std::string& name : default_audits()) {
    INFO("audit: " << name);
    CHECK(fired.count(name) == 1);
  }
}

TEST_CASE("csv format emits one row per residual and constant") {
  json config = json{{"cases", json::array({json{
      {"name", "rank2_h"},
      {"source", json{{"type", "hypersurface"}, {"H", json::array({2, 3, 0, 0, 0})}}},
      {"checks", json::array({"gauss"})}}})}};
  GalleryOptions opt;
  opt.no_meta = true;
  GalleryResult res = run_gallery(config, opt);
  const std::string csv = report_to_csv(res.report);
  CHECK(csv.find("case,audit,premise,kind,key,value") == 0);
  CHECK(csv.find("rank2_h,gauss,holds,residual,ricci_contraction,") != std::string::npos);
  CHECK(csv.find("rank2_h,gauss,holds,constant,kappa,") != std::string::npos);
}

TEST_CASE("multi-point chart cases report one evaluation per point") {
  json config = json{{"cases", json::array({json{
      {"name", "rn_two_points"},
      {"source", json{{"type", "chart"},
                      {"kind", "rn_ds"},
                      {"params", json{{"M", 1.0}, {"Q", 0.5}, {"Lambda", 0.01}}},
                      {"points", json::array({json::array({0.0, 3.0, 1.0, 0.0}),
                                              json::array({0.0, 5.0, 0.7, 0.0})})}}},
      {"checks", json::array({"universal", "thm24"})}}})}};
  GalleryOptions opt;
  opt.no_meta = true;
  GalleryResult res = run_gallery(config, opt);
  CHECK(res.exit_code == 0);
  const json& c = res.report["cases"][0];
  REQUIRE(c.contains("evaluations"));
  CHECK(c["evaluations"].size() == 2);
  for (const json& ev : c["evaluations"]) {
    CHECK(ev["classification"]["roter"]["exact"] == true);
    for (const json& a : ev["audits"])
      if (a["name"] == "thm24") CHECK(a["pass"] == true);
  }
  CHECK(report_to_csv(res.report).rfind("case,audit", 0) == 0);  // no crash on this shape
}

TEST_CASE("algebraic single-package case reports a classification") {
  json config = json{{"cases", json::array({json{
      {"name", "alg1"},
      {"source",
       json{{"type", "algebraic"}, {"seed", 7}, {"terms", 2}, {"n", 4}, {"signature", 1}}}}})}};
  GalleryOptions opt;
  opt.no_meta = true;
  GalleryResult res = run_gallery(config, opt);
  CHECK(res.exit_code == 0);
  CHECK(res.report["cases"][0].contains("classification"));
  // deterministic: same seed, same report
  CHECK(run_gallery(config, opt).report.dump() == res.report.dump());
}
