#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "curvlab/chart.hpp"
#include "curvlab/gallery.hpp"

using curvlab::GalleryOptions;
using curvlab::GalleryResult;
using json = nlohmann::json;

namespace {

int cmd_verify(const std::string& config, const std::string& out_path, const std::string& format,
               const GalleryOptions& options) {
  GalleryResult result = curvlab::run_gallery_file(config, options);
  if (result.exit_code == 2) {
    std::cerr << result.report.dump(2) << "\n";
    return 2;
  }
  std::string text =
      format == "csv" ? curvlab::report_to_csv(result.report) : result.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  return result.exit_code;
}

int cmd_classify(const std::string& config, const std::string& case_name,
                 const GalleryOptions& options) {
  json gallery;
  if (config.empty()) {
    gallery = curvlab::default_gallery();
  } else {
    std::ifstream in(config);
    if (!in) {
      std::cerr << "cannot open config file: " << config << "\n";
      return 2;
    }
    try {
      in >> gallery;
    } catch (const std::exception& err) {
      std::cerr << "config parse error: " << err.what() << "\n";
      return 2;
    }
  }
  json filtered = json{{"cases", json::array()}};
  for (const json& c : gallery["cases"])
    if (c.value("name", "") == case_name) filtered["cases"].push_back(c);
  if (filtered["cases"].empty()) {
    std::cerr << "unknown case '" << case_name << "'\n";
    return 2;
  }
  GalleryResult result = curvlab::run_gallery(filtered, options);
  if (result.exit_code == 2) {
    std::cerr << result.report.dump(2) << "\n";
    return 2;
  }
  std::cout << result.report["cases"][0].dump(2) << "\n";
  return result.exit_code;
}

int cmd_list() {
  json out;
  out["chart_kinds"] = curvlab::chart_kinds();
  out["audits"] = curvlab::default_audits();
  out["negative_controls"] = json::array({"star_holds"});
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvlab: pointwise curvature laboratory and identity auditor"};
  app.require_subcommand(1);

  GalleryOptions options;
  std::string config, out_path, case_name;
  std::string format = "json";

  CLI::App* verify = app.add_subcommand("verify", "run the gallery audits and emit a report");
  verify->add_option("--config", config, "gallery config path (default: built-in gallery)");
  verify->add_option("--out", out_path, "write the report here instead of stdout");
  verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--workers", options.workers, "worker threads across cases");
  verify->add_flag("--strict", options.strict, "errored cases fail the run");
  verify->add_option("--seed", options.seed, "base seed for algebraic cases");
  verify->add_option("--tol", options.tol, "override the shared fit tolerance");
  verify->add_flag("--no-meta", options.no_meta, "omit timings (byte-stable output)");

  CLI::App* classify = app.add_subcommand("classify", "classify a single gallery case");
  classify->add_option("--case", case_name, "case name")->required();
  classify->add_option("--config", config, "gallery config path (default: built-in gallery)");
  classify->add_option("--tol", options.tol, "override the shared fit tolerance");

  CLI::App* list = app.add_subcommand("list", "list audits and chart kinds");

  CLI11_PARSE(app, argc, argv);

  if (verify->parsed()) return cmd_verify(config, out_path, format, options);
  if (classify->parsed()) return cmd_classify(config, case_name, options);
  if (list->parsed()) return cmd_list();
  return 2;
}
