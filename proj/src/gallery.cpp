#include "curvlab/gallery.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "curvlab/chart.hpp"

namespace curvlab {

namespace {

using json = nlohmann::json;

struct AuditSpec {
  const char* name;
  double tol;
  bool hypersurface_only;
  bool in_all;
};

// Registry of audits reachable from a config. star_holds is the opt-in
// negative control (premise asserted true), never part of "all".
const std::vector<AuditSpec>& audit_registry() {
  static const std::vector<AuditSpec> reg = {
      {"universal", 1e-10, false, true},   {"thm23", 1e-10, false, true},
      {"thm24", 1e-8, false, true},        {"pseudo_bis", 1e-8, false, true},
      {"remark25ii", 1e-8, false, true},   {"gauss", 1e-10, true, true},
      {"eq900ab", 1e-9, true, true},       {"thm3x", 1e-8, true, true},
      {"prop41", 1e-9, true, true},        {"prop42", 1e-9, true, true},
      {"prop43v", 1e-9, true, true},       {"prop47", 1e-9, true, true},
      {"thm48", 1e-9, true, true},         {"thm44_45", 1e-8, true, true},
      {"thm5x", 1e-8, true, true},         {"star_holds", 1e-8, false, false},
  };
  return reg;
}

const AuditSpec* find_audit(const std::string& name) {
  for (const auto& a : audit_registry())
    if (name == a.name) return &a;
  return nullptr;
}

MetricPoint parse_metric(const json& spec, int dim_hint) {
  if (spec.is_string()) {
    const std::string s = spec.get<std::string>();
    if (s == "identity") return MetricPoint::euclidean(dim_hint);
    if (s == "minkowski") return MetricPoint::minkowski(dim_hint);
    throw std::invalid_argument("unknown metric keyword '" + s + "'");
  }
  const auto rows = spec.get<std::vector<std::vector<double>>>();
  const int n = static_cast<int>(rows.size());
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rows[i][j];
  return MetricPoint::make(g);
}

Sym2 parse_h(const json& spec) {
  if (spec.is_object()) {  // {"values": [...], "mults": [...]}
    const auto values = spec.at("values").get<std::vector<double>>();
    const auto mults = spec.at("mults").get<std::vector<int>>();
    std::vector<double> diag;
    for (size_t i = 0; i < values.size(); ++i)
      for (int k = 0; k < mults[i]; ++k) diag.push_back(values[i]);
    return Sym2::from_diag(diag);
  }
  if (spec.is_array() && !spec.empty() && spec[0].is_array()) {
    const auto rows = spec.get<std::vector<std::vector<double>>>();
    const int n = static_cast<int>(rows.size());
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
    return Sym2::from_matrix(m, 1e-12);
  }
  return Sym2::from_diag(spec.get<std::vector<double>>());
}

json fit_to_json(const FitResult& fit) {
  json coeffs = json::object();
  for (size_t i = 0; i < fit.names.size(); ++i) coeffs[fit.names[i]] = fit.coeff[i];
  return json{{"coefficients", coeffs}, {"residual", fit.residual}, {"exact", fit.exact}};
}

json classification_to_json(const ClassificationReport& cls) {
  json j;
  j["einstein"] = cls.einstein;
  j["quasi_einstein"] = cls.quasi_einstein;
  if (cls.has_alpha) j["alpha"] = cls.alpha;
  j["rank_S_dev"] = cls.rank_S_dev;
  j["in_US"] = cls.in_US;
  j["in_UC"] = cls.in_UC;
  j["in_UR"] = cls.in_UR;
  j["u_sets_consistent"] = cls.u_consistent;
  j["pseudosymmetric"] = fit_to_json(cls.pseudo);
  j["ricci_pseudosymmetric"] = fit_to_json(cls.ricci_pseudo);
  j["weyl_pseudosymmetric"] = fit_to_json(cls.weyl_pseudo);
  j["pseudosymmetric_weyl"] = fit_to_json(cls.pseudo_weyl);
  j["genpseudo01"] = fit_to_json(cls.genpseudo);
  j["cond01"] = fit_to_json(cls.cond01);
  json roter;
  roter["applicable"] = cls.roter.applicable;
  if (cls.roter.applicable) {
    roter["phi"] = cls.roter.phi;
    roter["mu"] = cls.roter.mu;
    roter["eta"] = cls.roter.eta;
    roter["residual"] = cls.roter.residual;
    roter["exact"] = cls.roter.exact;
    if (cls.roter.has_derived) {
      roter["alpha1"] = cls.roter.alpha1;
      roter["alpha2"] = cls.roter.alpha2;
      roter["L_R"] = cls.roter.L_R;
      roter["L"] = cls.roter.L;
      roter["L_C"] = cls.roter.L_C;
    }
  }
  j["roter"] = roter;
  if (cls.star_residual >= 0.0) j["condition_star_residual"] = cls.star_residual;
  return j;
}

json audit_to_json(const AuditReport& rep) {
  json j;
  j["name"] = rep.name;
  j["premise"] = premise_name(rep.premise);
  json res = json::object();
  for (const auto& [k, v] : rep.residuals) res[k] = v;
  j["residuals"] = res;
  json cst = json::object();
  for (const auto& [k, v] : rep.constants) cst[k] = v;
  j["constants"] = cst;
  j["tol"] = rep.tol;
  j["pass"] = rep.pass();
  if (!rep.failed_checks.empty()) j["failed_checks"] = rep.failed_checks;
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

AuditReport star_holds_audit(const CurvaturePackage& pkg, const ClassificationReport& cls,
                             double tol) {
  AuditReport rep;
  rep.name = "star_holds";
  rep.tol = tol;
  if (pkg.m.n < 4) {
    rep.premise = Premise::not_applicable;
    return rep;
  }
  rep.premise = Premise::holds;  // asserted by the config
  rep.check("star", cls.star_residual);
  return rep;
}

struct CaseInput {
  std::string name;
  json source;
  std::vector<std::string> checks;
  json tol_overrides;
  bool is_chart = false;
};

double audit_tol(const CaseInput& input, const AuditSpec& spec, const GalleryOptions& options) {
  double tol = spec.tol;
  if (input.is_chart) tol = std::max(tol, 1e-8);  // AD-derived tensors
  if (options.tol > 0.0) tol = std::max(tol, options.tol);
  if (input.tol_overrides.contains(spec.name)) tol = input.tol_overrides[spec.name].get<double>();
  return tol;
}

// Runs every requested audit on one package (with hypersurface data when
// the case provides it).
json run_audits(const CaseInput& input, const CurvaturePackage& pkg,
                const HypersurfaceData* hyper, const GalleryOptions& options, bool* any_fail) {
  const double fit_tol = options.tol > 0.0 ? options.tol : 1e-8;
  const ClassificationReport cls = classify(pkg, fit_tol);

  CubicFit fit;
  if (hyper) fit = fit_cubic(*hyper, fit_tol);

  json audits = json::array();
  for (const std::string& name : input.checks) {
    const AuditSpec* spec = find_audit(name);
    const double tol = audit_tol(input, *spec, options);
    AuditReport rep;
    if (spec->hypersurface_only && !hyper) {
      rep.name = name;
      rep.tol = tol;
      rep.premise = Premise::not_applicable;
      rep.note("chart/algebraic case: no second fundamental tensor");
    } else if (name == "universal") {
      rep = universal_audit(pkg, tol);
    } else if (name == "thm23") {
      rep = thm23_audit(pkg, cls, tol);
    } else if (name == "thm24") {
      rep = thm24_audit(pkg, cls, tol);
    } else if (name == "pseudo_bis") {
      rep = pseudo_bis_audit(pkg, cls, tol);
    } else if (name == "remark25ii") {
      rep = remark25ii_audit(pkg, cls, tol);
    } else if (name == "star_holds") {
      rep = star_holds_audit(pkg, cls, tol);
    } else if (name == "gauss") {
      rep = gauss_audit(*hyper, pkg, tol);
    } else if (name == "eq900ab") {
      rep = eq900ab_audit(*hyper, pkg, tol);
    } else if (name == "thm3x") {
      rep = thm3x_audit(*hyper, pkg, tol);
    } else if (name == "prop41") {
      rep = prop41_audit(*hyper, pkg, fit, tol);
    } else if (name == "prop42") {
      rep = prop42_audit(*hyper, pkg, fit, tol);
    } else if (name == "prop43v") {
      rep = prop43v_audit(*hyper, pkg, fit, tol);
    } else if (name == "prop47") {
      rep = prop47_audit(*hyper, pkg, fit, tol);
    } else if (name == "thm48") {
      rep = thm48_audit(*hyper, pkg, fit, tol);
    } else if (name == "thm44_45") {
      rep = thm44_45_audit(*hyper, pkg, fit, tol);
    } else if (name == "thm5x") {
      rep = thm5x_audit(*hyper, pkg, fit, cls, tol);
    }
    if (!rep.pass()) *any_fail = true;
    audits.push_back(audit_to_json(rep));
  }

  json out;
  out["classification"] = classification_to_json(cls);
  out["audits"] = audits;
  return out;
}

json run_case(const CaseInput& input, const GalleryOptions& options) {
  json out;
  out["name"] = input.name;
  bool any_fail = false;
  try {
    const json& src = input.source;
    const std::string type = src.at("type").get<std::string>();
    if (type == "chart") {
      Chart chart = build_chart(src.at("kind").get<std::string>(), src.value("params", json::object()));
      const auto points = src.at("points").get<std::vector<std::vector<double>>>();
      json evals = json::array();
      for (const auto& x : points) {
        CurvaturePackage pkg = curvature_at(chart, x);
        json ev = run_audits(input, pkg, nullptr, options, &any_fail);
        ev["point"] = x;
        evals.push_back(std::move(ev));
      }
      if (evals.size() == 1) {
        out["classification"] = evals[0]["classification"];
        out["audits"] = evals[0]["audits"];
        out["point"] = evals[0]["point"];
      } else {
        out["evaluations"] = evals;
      }
    } else if (type == "hypersurface") {
      HypersurfaceData h;
      h.H = parse_h(src.at("H"));
      h.m = parse_metric(src.value("g", json("identity")), h.H.n);
      h.epsilon = src.value("epsilon", 1.0);
      if (h.epsilon != 1.0 && h.epsilon != -1.0)
        throw std::invalid_argument("epsilon must be +-1");
      h.kappa_tilde = src.value("kappa_tilde", 0.0);
      CurvaturePackage pkg = gauss_package(h);
      json ev = run_audits(input, pkg, &h, options, &any_fail);
      out["classification"] = ev["classification"];
      out["audits"] = ev["audits"];
    } else if (type == "algebraic") {
      const int count = src.value("count", 1);
      const uint64_t seed = src.value("seed", options.seed);
      const int terms = src.value("terms", 3);
      if (count == 1) {
        const int n = src.value("n", 5);
        const int sig = src.value("signature", 0);
        MetricPoint m = sig == 0 ? MetricPoint::euclidean(n) : MetricPoint::minkowski(n);
        CurvaturePackage pkg = weyl_decompose(random_algebraic_curvature(seed, n, terms), m);
        json ev = run_audits(input, pkg, nullptr, options, &any_fail);
        out["classification"] = ev["classification"];
        out["audits"] = ev["audits"];
      } else {
        // fuzz block: aggregate the universal identities over the whole
        // block, cycling dimensions 4..6 and both signatures
        json worst = json::object();
        for (int i = 0; i < count; ++i) {
          const int n = 4 + i % 3;
          const int sig = (i / 3) % 2;
          MetricPoint m = sig == 0 ? MetricPoint::euclidean(n) : MetricPoint::minkowski(n);
          CurvaturePackage pkg = weyl_decompose(random_algebraic_curvature(seed + i, n, terms), m);
          AuditReport rep = universal_audit(pkg, input.is_chart ? 1e-8 : 1e-10);
          if (!rep.pass()) any_fail = true;
          for (const auto& [k, v] : rep.residuals) {
            const double prev = worst.value(k, 0.0);
            worst[k] = std::max(prev, v);
          }
        }
        out["audits"] = json::array({json{{"name", "universal"},
                                          {"premise", "holds"},
                                          {"residuals", worst},
                                          {"constants", json{{"count", count}}},
                                          {"tol", 1e-10},
                                          {"pass", !any_fail}}});
      }
    }
    out["status"] = any_fail ? "failed" : "ok";
  } catch (const std::exception& err) {
    out["status"] = "errored";
    out["error"] = err.what();
  }
  return out;
}

std::vector<CaseInput> validate_config(const json& config) {
  std::vector<CaseInput> inputs;
  if (!config.is_object() || !config.contains("cases") || !config["cases"].is_array())
    throw std::invalid_argument("config must contain a 'cases' array");
  std::vector<std::string> seen;
  for (const json& c : config["cases"]) {
    CaseInput in;
    in.name = c.at("name").get<std::string>();
    for (const auto& s : seen)
      if (s == in.name) throw std::invalid_argument("duplicate case name '" + in.name + "'");
    seen.push_back(in.name);
    in.source = c.at("source");
    const std::string type = in.source.at("type").get<std::string>();
    if (type == "chart") {
      in.is_chart = true;
      // construct now so unknown kinds and bad params are config errors
      build_chart(in.source.at("kind").get<std::string>(),
                  in.source.value("params", json::object()));
      if (!in.source.contains("points")) throw std::invalid_argument("chart case needs points");
    } else if (type != "hypersurface" && type != "algebraic") {
      throw std::invalid_argument("unknown source type '" + type + "'");
    }
    json checks = c.value("checks", json::array({"all"}));
    for (const json& chk : checks) {
      const std::string name = chk.get<std::string>();
      if (name == "all") {
        for (const auto& a : audit_registry())
          if (a.in_all) in.checks.push_back(a.name);
      } else if (is_known_audit(name)) {
        in.checks.push_back(name);
      } else {
        throw std::invalid_argument("unknown check '" + name + "'");
      }
    }
    in.tol_overrides = c.value("tol_overrides", json::object());
    inputs.push_back(std::move(in));
  }
  return inputs;
}

std::string iso_now() {
  const std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

}  // namespace

const std::vector<std::string>& default_audits() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& a : audit_registry())
      if (a.in_all) v.push_back(a.name);
    return v;
  }();
  return names;
}

bool is_known_audit(const std::string& name) { return find_audit(name) != nullptr; }

nlohmann::json default_gallery() {
  json cases = json::array();
  auto chart_case = [](const std::string& name, const std::string& kind, json params,
                       std::vector<double> point) {
    return json{{"name", name},
                {"source", json{{"type", "chart"},
                                {"kind", kind},
                                {"params", std::move(params)},
                                {"points", json::array({point})}}}};
  };
  auto hyper_case = [](const std::string& name, json h, double eps, double ktilde,
                       const std::string& g = "identity") {
    return json{{"name", name},
                {"source", json{{"type", "hypersurface"},
                                {"g", g},
                                {"H", std::move(h)},
                                {"epsilon", eps},
                                {"kappa_tilde", ktilde}}}};
  };

  cases.push_back(chart_case("flat_minkowski", "flat", json{{"n", 4}, {"signature", 1}},
                             {0.3, -1.0, 2.0, 0.7}));
  cases.push_back(
      chart_case("space_form_pos", "space_form", json{{"n", 4}, {"c", 1.0}}, {0.1, -0.2, 0.3, 0.05}));
  cases.push_back(
      chart_case("space_form_neg", "space_form", json{{"n", 4}, {"c", -1.0}}, {0.1, -0.2, 0.3, 0.05}));
  cases.push_back(chart_case("s2xs2_einstein", "product_spheres",
                             json{{"p", 2}, {"r1", 1.0}, {"q", 2}, {"r2", 1.0}},
                             {1.0, 0.8, 1.1, 0.9}));
  cases.push_back(chart_case("clifford_5_2", "product_spheres",
                             json{{"p", 2},
                                  {"r1", std::sqrt(2.0 / 5.0)},
                                  {"q", 3},
                                  {"r2", std::sqrt(3.0 / 5.0)}},
                             {1.0, 0.8, 1.1, 0.9, 0.7}));
  cases.push_back(chart_case("clifford_7_2", "product_spheres",
                             json{{"p", 2},
                                  {"r1", std::sqrt(2.0 / 7.0)},
                                  {"q", 5},
                                  {"r2", std::sqrt(5.0 / 7.0)}},
                             {1.0, 0.8, 1.1, 0.9, 0.7, 1.2, 0.6}));
  cases.push_back(chart_case("clifford_7_3", "product_spheres",
                             json{{"p", 3},
                                  {"r1", std::sqrt(3.0 / 7.0)},
                                  {"q", 4},
                                  {"r2", std::sqrt(4.0 / 7.0)}},
                             {1.0, 0.8, 1.1, 0.9, 0.7, 1.2, 0.6}));
  for (auto [tag, lambda] : {std::pair{"rn", 0.0}, {"rn_ds", 0.01}, {"rn_ads", -0.01}}) {
    cases.push_back(chart_case(std::string(tag) + "_r3", "rn_ds",
                               json{{"M", 1.0}, {"Q", 0.5}, {"Lambda", lambda}},
                               {0.0, 3.0, 1.0, 0.0}));
    cases.push_back(chart_case(std::string(tag) + "_r5", "rn_ds",
                               json{{"M", 1.0}, {"Q", 0.5}, {"Lambda", lambda}},
                               {0.0, 5.0, 0.7, 0.0}));
  }
  cases.push_back(chart_case("warped_grw", "warped_1d_einstein",
                             json{{"n", 5}, {"base_sign", -1.0}, {"a", 1.0}, {"b", 1.0}},
                             {0.7, 1.0, 0.9, 1.1, 0.4}));

  cases.push_back(hyper_case("two_eigenvalue_h", json::array({2, 1, 1, 1, 1}), 1.0, 0.0));
  cases.push_back(
      hyper_case("two_eig_lorentz", json::array({0.5, 1, 1, 1, 1}), 1.0, 0.0, "minkowski"));
  cases.push_back(hyper_case("rank2_h", json::array({2, 3, 0, 0, 0}), 1.0, 0.0));
  cases.push_back(hyper_case("rank2_h_ambient", json::array({2, 3, 0, 0, 0}), 1.0, 30.0));
  cases.push_back(hyper_case("three_curvature_5", json::array({1, 1, -1, -1, 0}), 1.0, 0.0));
  cases.push_back(hyper_case("example_49iii", json::array({2, 1, 1, -1, -1}), 1.0, 0.0));
  cases.push_back(hyper_case("tr_balanced_h", json::array({1, 1, -0.5, 0, 0}), 1.0, 0.0));
  cases.push_back(hyper_case(
      "clifford_5_2_hyper",
      json{{"values", json::array({std::sqrt(3.0 / 2.0), -std::sqrt(2.0 / 3.0)})},
           {"mults", json::array({2, 3})}},
      1.0, 30.0));

  cases.push_back(json{{"name", "fuzz_block"},
                       {"source", json{{"type", "algebraic"},
                                       {"seed", 20240501},
                                       {"terms", 3},
                                       {"count", 50}}}});
  return json{{"cases", cases}};
}

GalleryResult run_gallery(const json& config, const GalleryOptions& options) {
  GalleryResult result;
  std::vector<CaseInput> inputs;
  try {
    inputs = validate_config(config);
  } catch (const std::exception& err) {
    result.report = json{{"error", err.what()}};
    result.exit_code = 2;
    return result;
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<json> case_reports(inputs.size());
  std::vector<double> case_ms(inputs.size(), 0.0);
  const int workers = std::max(1, options.workers);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= inputs.size()) break;
      const auto c0 = std::chrono::steady_clock::now();
      case_reports[i] = run_case(inputs[i], options);
      case_ms[i] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - c0)
                       .count();
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  int failed = 0, errored = 0;
  json failing = json::array();
  json cases = json::array();
  for (size_t i = 0; i < inputs.size(); ++i) {
    json& cr = case_reports[i];
    if (!options.no_meta) cr["wall_ms"] = case_ms[i];
    const std::string status = cr["status"];
    if (status == "failed") {
      ++failed;
      for (const json& a : cr["audits"])
        if (!a["pass"].get<bool>())
          failing.push_back(inputs[i].name + "/" + a["name"].get<std::string>());
    }
    if (status == "errored") ++errored;
    cases.push_back(std::move(cr));
  }

  result.report["cases"] = cases;
  json summary;
  summary["total_cases"] = inputs.size();
  summary["failed_cases"] = failed;
  summary["errored_cases"] = errored;
  summary["failing_audits"] = failing;
  summary["pass"] = (failed == 0) && (!options.strict || errored == 0);
  result.report["summary"] = summary;
  if (!options.no_meta) {
    result.report["meta"] = json{
        {"generated_at", iso_now()},
        {"workers", workers},
        {"wall_ms_total",
         std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count()}};
  }
  result.exit_code = failed > 0 ? 1 : (options.strict && errored > 0 ? 1 : 0);
  return result;
}

GalleryResult run_gallery_file(const std::string& config_path, const GalleryOptions& options) {
  if (config_path.empty()) return run_gallery(default_gallery(), options);
  std::ifstream in(config_path);
  if (!in) {
    GalleryResult r;
    r.report = json{{"error", "cannot open config file: " + config_path}};
    r.exit_code = 2;
    return r;
  }
  json config;
  try {
    in >> config;
  } catch (const std::exception& err) {
    GalleryResult r;
    r.report = json{{"error", std::string("config parse error: ") + err.what()}};
    r.exit_code = 2;
    return r;
  }
  return run_gallery(config, options);
}

std::string report_to_csv(const json& report) {
  std::ostringstream out;
  out << "case,audit,premise,kind,key,value\n";
  if (!report.contains("cases")) return out.str();
  for (const json& c : report["cases"]) {
    if (!c.contains("audits")) continue;
    const std::string name = c["name"];
    for (const json& a : c["audits"]) {
      const std::string audit = a["name"];
      const std::string premise = a["premise"];
      for (auto it = a["residuals"].begin(); it != a["residuals"].end(); ++it)
        out << name << ',' << audit << ',' << premise << ",residual," << it.key() << ','
            << it.value().dump() << '\n';
      for (auto it = a["constants"].begin(); it != a["constants"].end(); ++it)
        out << name << ',' << audit << ',' << premise << ",constant," << it.key() << ','
            << it.value().dump() << '\n';
    }
  }
  return out.str();
}

}  // namespace curvlab
