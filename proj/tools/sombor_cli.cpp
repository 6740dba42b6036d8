#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sombor/connectivity.hpp"
#include "sombor/extremal.hpp"
#include "sombor/graph.hpp"
#include "sombor/graph6.hpp"
#include "sombor/invariants.hpp"
#include "sombor/qspr.hpp"
#include "sombor/transforms.hpp"

using nlohmann::json;
using namespace sombor;

namespace {

struct GraphInput {
  std::string graph6;
  std::string file;
  std::string family;
  int n = 0;
  int k = 1;
  int m = 2;

  void add_options(CLI::App* cmd) {
    auto* g6 = cmd->add_option("--graph6", graph6, "graph6 string");
    auto* f = cmd->add_option("--file", file, "edge-list CSV file (u,v per line)");
    auto* fam = cmd->add_option("--family", family,
                                "named family: path|star|cycle|complete|knk|acid")
                    ->check(CLI::IsMember(
                        {"path", "star", "cycle", "complete", "knk", "acid"}));
    cmd->add_option("--n", n, "order for --family");
    cmd->add_option("--k", k, "k parameter for --family knk");
    cmd->add_option("--m", m, "carbon count for --family acid");
    g6->excludes(f)->excludes(fam);
    f->excludes(fam);
  }

  Graph resolve() const {
    if (!graph6.empty()) return parse_graph6(graph6);
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::runtime_error("cannot open " + file);
      std::stringstream buffer;
      buffer << in.rdbuf();
      return parse_edge_csv(buffer.str());
    }
    if (family == "path") return path(n);
    if (family == "star") return star(n);
    if (family == "cycle") return cycle(n);
    if (family == "complete") return complete(n);
    if (family == "knk") return k_n_k(n, k);
    if (family == "acid") return acid_graph(m);
    throw CLI::ValidationError("input", "one of --graph6/--file/--family required");
  }
};

std::string fmt(double value, int precision) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(precision) << value;
  return out.str();
}

json certificate_json(const CutCertificate& cert) {
  json j;
  j["kind"] = cert.kind == CutCertificate::Kind::vertex ? "vertex" : "edge";
  if (cert.kind == CutCertificate::Kind::vertex) {
    j["members"] = cert.vertices;
  } else {
    json edges = json::array();
    for (auto [u, v] : cert.edges) edges.push_back({u, v});
    j["members"] = edges;
  }
  j["separated"] = {cert.separated.first, cert.separated.second};
  return j;
}

json model_json(const RegressionModel& m, int precision) {
  return json{{"slope", m.slope},
              {"intercept", m.intercept},
              {"r_squared", m.r_squared},
              {"r_squared_adj", m.r_squared_adj},
              {"rmse", m.rmse},
              {"rmse_population", m.rmse_population},
              {"equation", fmt(m.slope, precision) + "*SO + " +
                               fmt(m.intercept, precision)}};
}

constexpr const char* kSchemaVersion = "1";

int default_threads() {
  if (const char* env = std::getenv("SOMBOR_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sombor index laboratory: exact graph invariants, "
               "connectivity-class extrema, and QSPR regression"};
  app.require_subcommand(1);
  int precision = 6;
  app.add_option("--precision", precision, "decimal places for printed floats")
      ->capture_default_str();

  // so
  auto* so_cmd = app.add_subcommand("so", "compute a degree-based index");
  GraphInput so_input;
  so_input.add_options(so_cmd);
  std::string index_name = "sombor";
  bool so_json = false;
  so_cmd->add_option("--index", index_name,
                     "sombor|first_zagreb|second_zagreb|randic|harmonic|abc");
  so_cmd->add_flag("--json", so_json, "emit the full per-edge report as JSON");

  // kappa
  auto* kappa_cmd =
      app.add_subcommand("kappa", "vertex and edge connectivity with cuts");
  GraphInput kappa_input;
  std::string kappa_positional;
  kappa_cmd->add_option("g6", kappa_positional, "graph6 string");
  kappa_input.add_options(kappa_cmd);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "emit a named graph as graph6");
  GraphInput gen_input;
  gen_input.add_options(gen_cmd);
  bool gen_csv = false;
  gen_cmd->add_flag("--csv", gen_csv, "emit edge-list CSV instead");

  // extremal
  auto* ext_cmd = app.add_subcommand(
      "extremal", "exhaustive extremal search in a connectivity class");
  int ext_n = 6, ext_k = 2, ext_threads = default_threads();
  std::string ext_mode = "vertex", ext_objective = "max";
  bool ext_json = false;
  ext_cmd->add_option("--n", ext_n, "order (<= 7)")->required();
  ext_cmd->add_option("--k", ext_k, "connectivity bound")->required();
  ext_cmd->add_option("--mode", ext_mode, "vertex|edge")
      ->check(CLI::IsMember({"vertex", "edge"}));
  ext_cmd->add_option("--objective", ext_objective, "max|min")
      ->check(CLI::IsMember({"max", "min"}));
  ext_cmd->add_option("--threads", ext_threads, "scan worker count");
  ext_cmd->add_flag("--json", ext_json);

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "run every extremal claim at desk scale");
  int verify_nmax = 6, verify_threads = default_threads();
  bool verify_json = false;
  verify_cmd->add_option("--nmax", verify_nmax, "largest order (<= 7)");
  verify_cmd->add_option("--threads", verify_threads, "scan worker count");
  verify_cmd->add_flag("--json", verify_json);

  // counterexample
  auto* cex_cmd = app.add_subcommand(
      "counterexample", "search the two-hub family for switch reversals");
  int cex_dmin = 2, cex_dmax = 12;
  cex_cmd->add_option("--dmin", cex_dmin, "minimum hub degree (>= 2)");
  cex_cmd->add_option("--dmax", cex_dmax, "maximum hub degree");

  // qspr
  auto* qspr_cmd =
      app.add_subcommand("qspr", "fit the four property regressions");
  std::string qspr_dataset;
  bool qspr_json = false, qspr_check = false, qspr_compare = false;
  qspr_cmd->add_option("--dataset", qspr_dataset,
                       "CSV file (default: bundled 19-acid table)");
  qspr_cmd->add_flag("--json", qspr_json);
  qspr_cmd->add_flag("--check", qspr_check,
                     "exit nonzero unless the published table reproduces");
  qspr_cmd->add_flag("--compare", qspr_compare,
                     "also fit the comparison index set");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*so_cmd) {
      Graph g = so_input.resolve();
      const EdgeFunction* fn = nullptr;
      EdgeFunction so_fn = sombor_edge_function();
      if (index_name == "sombor") fn = &so_fn;
      for (const auto& cand : comparison_indices())
        if (cand.name == index_name) fn = &cand;
      if (!fn) {
        std::cerr << "unknown index: " << index_name << "\n";
        return 2;
      }
      IndexReport report = index_with(g, *fn);
      if (so_json) {
        json j = json::parse(to_json(report));
        j["schema_version"] = kSchemaVersion;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << fmt(report.total, precision) << "\n";
      }
    } else if (*kappa_cmd) {
      Graph g = !kappa_positional.empty() ? parse_graph6(kappa_positional)
                                          : kappa_input.resolve();
      auto vres = vertex_connectivity(g);
      auto eres = edge_connectivity(g);
      json j{{"schema_version", kSchemaVersion},
             {"kappa", vres.value},
             {"kappa_prime", eres.value}};
      j["vertex_cut"] =
          vres.cut ? certificate_json(*vres.cut) : json{{"complete", true}};
      j["edge_cut"] =
          eres.cut ? certificate_json(*eres.cut) : json(nullptr);
      std::cout << j.dump() << "\n";
    } else if (*gen_cmd) {
      Graph g = gen_input.resolve();
      std::cout << (gen_csv ? write_edge_csv(g) : write_graph6(g) + "\n");
    } else if (*ext_cmd) {
      ExtremalReport r = extremal_in_class(
          ext_n, ext_k,
          ext_mode == "vertex" ? ClassMode::vertex : ClassMode::edge,
          ext_objective == "max" ? Objective::max : Objective::min,
          ext_threads);
      if (ext_json) {
        json j{{"schema_version", kSchemaVersion},
               {"n", r.n},
               {"k", r.k},
               {"mode", ext_mode},
               {"objective", ext_objective},
               {"best_value", r.best_value},
               {"argbest", r.argbest},
               {"theorem_value", r.theorem_value},
               {"agrees", r.agrees}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << ext_objective << " SO over " << ext_mode << " class (n="
                  << r.n << ", k=" << r.k
                  << "): " << fmt(r.best_value, precision) << "\n"
                  << "closed form: " << fmt(r.theorem_value, precision)
                  << (r.agrees ? "  [agrees]" : "  [DISAGREES]") << "\n";
        for (const auto& g6 : r.argbest) std::cout << "optimum: " << g6 << "\n";
      }
      return r.agrees ? 0 : 1;
    } else if (*verify_cmd) {
      VerifySummary summary = verify_all_theorems(verify_nmax, verify_threads);
      if (verify_json) {
        json rows = json::array();
        for (const auto& c : summary.checks)
          rows.push_back({{"claim", c.claim},
                          {"pass", c.pass},
                          {"margin", c.margin},
                          {"detail", c.detail}});
        std::cout << json{{"schema_version", kSchemaVersion},
                          {"checks", rows},
                          {"all_pass", summary.all_pass()}}
                         .dump()
                  << "\n";
      } else {
        for (const auto& c : summary.checks)
          std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.claim
                    << "  (margin " << fmt(c.margin, precision) << "; "
                    << c.detail << ")\n";
        std::cout << (summary.all_pass() ? "all claims PASS"
                                         : "some claims FAIL")
                  << "\n";
      }
      return summary.all_pass() ? 0 : 1;
    } else if (*cex_cmd) {
      auto found = alpha_switch_search(cex_dmin, cex_dmax);
      json rows = json::array();
      for (const auto& c : found)
        rows.push_back({{"hub_x_degree", c.hub_x_degree},
                        {"hub_y_degree", c.hub_y_degree},
                        {"so_gamma", c.so_gamma},
                        {"so_gamma_alpha", c.so_gamma_alpha},
                        {"gamma", c.gamma_g6},
                        {"gamma_alpha", c.gamma_alpha_g6}});
      std::cout << json{{"schema_version", kSchemaVersion},
                        {"counterexamples", rows}}
                       .dump()
                << "\n";
    } else if (*qspr_cmd) {
      Dataset ds = qspr_dataset.empty() ? bundled_dataset()
                                        : load_dataset(qspr_dataset);
      QsprFit fit = fit_all(ds, qspr_compare);
      bool ok = true;
      if (qspr_check) {
        auto rel_ok = [](double got, double expect, double tol) {
          return std::abs(got - expect) / std::abs(expect) < tol;
        };
        ok = rel_ok(fit.dhc.slope, 229.7, 5e-3) &&
             rel_ok(fit.dhc.intercept, -1263, 5e-3) &&
             rel_ok(fit.dhf.slope, 10.65, 5e-3) &&
             rel_ok(fit.dhf.intercept, 369.2, 5e-3) &&
             rel_ok(fit.dhsub.slope, 1.212, 5e-3) &&
             rel_ok(fit.dhsub.intercept, 36.41, 5e-3) &&
             rel_ok(fit.dhvap.slope, 2.559, 5e-3) &&
             rel_ok(fit.dhvap.intercept, 21.83, 5e-3) &&
             std::abs(fit.dhc.r_squared - 0.99998) < 1e-4 &&
             std::abs(fit.dhf.r_squared - 0.99737) < 1e-4 &&
             std::abs(fit.dhsub.r_squared - 0.99745) < 1e-4 &&
             std::abs(fit.dhvap.r_squared_adj - 0.99355) < 1e-4 &&
             rel_ok(fit.dhc.rmse, 17.987, 0.01) &&
             rel_ok(fit.dhf.rmse, 8.9567, 0.01) &&
             rel_ok(fit.dhsub.rmse, 1.0034, 0.01) &&
             rel_ok(fit.dhvap.rmse, 3.2771, 0.01);
      }
      if (qspr_json) {
        json points = json::array();
        for (const auto& row : ds.rows)
          points.push_back({{"compound", row.compound},
                            {"so", row.so},
                            {"dhc", row.dhc},
                            {"dhc_pred", fit.dhc.predict(row.so)},
                            {"dhf", row.dhf},
                            {"dhf_pred", fit.dhf.predict(row.so)},
                            {"dhsub", row.dhsub},
                            {"dhsub_pred", fit.dhsub.predict(row.so)},
                            {"dhvap", row.dhvap},
                            {"dhvap_pred", fit.dhvap.predict(row.so)}});
        json j{{"schema_version", kSchemaVersion},
               {"models",
                {{"dhc", model_json(fit.dhc, precision)},
                 {"dhf", model_json(fit.dhf, precision)},
                 {"dhsub", model_json(fit.dhsub, precision)},
                 {"dhvap", model_json(fit.dhvap, precision)}}},
               {"points", points}};
        if (qspr_compare) {
          json cmp = json::object();
          for (const auto& [name, r2s] : fit.comparison)
            cmp[name] = {{"dhc_r2", r2s[0]},
                         {"dhf_r2", r2s[1]},
                         {"dhsub_r2", r2s[2]},
                         {"dhvap_r2", r2s[3]}};
          j["comparison"] = cmp;
        }
        if (qspr_check) j["check"] = ok ? "pass" : "fail";
        std::cout << j.dump() << "\n";
      } else {
        auto line = [&](const char* name, const RegressionModel& m) {
          std::cout << name << " = " << fmt(m.slope, precision) << "*SO + "
                    << fmt(m.intercept, precision)
                    << "   R2=" << fmt(m.r_squared, precision)
                    << "   RMSE=" << fmt(m.rmse, precision) << "\n";
        };
        line("dHc", fit.dhc);
        line("dHf", fit.dhf);
        line("dHsub", fit.dhsub);
        line("dHvap", fit.dhvap);
        if (qspr_compare)
          for (const auto& [name, r2s] : fit.comparison)
            std::cout << name << " R2: " << fmt(r2s[0], precision) << " "
                      << fmt(r2s[1], precision) << " " << fmt(r2s[2], precision)
                      << " " << fmt(r2s[3], precision) << "\n";
        if (qspr_check)
          std::cout << (ok ? "check: pass" : "check: fail") << "\n";
      }
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
