// Command-line front end over the shared-library C interface.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclotome.h"

namespace {

struct CommonFlags {
  bool conditions_only = false;
  bool force = false;
  bool no_timings = false;
  int threads = 1;
  std::string cache_dir;
  std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& fl, bool with_conditions = true) {
  if (with_conditions) {
    cmd->add_flag("--conditions-only", fl.conditions_only,
                  "check hypotheses only, do not materialize the field");
    cmd->add_flag("--force", fl.force, "materialize even if a hypothesis fails");
  }
  cmd->add_flag("--no-timings", fl.no_timings, "omit timings from the report");
  cmd->add_option("--threads", fl.threads, "worker threads for the O(q) sweeps");
  cmd->add_option("--cache-dir", fl.cache_dir,
                  "field table cache directory (default: $CYCLOTOME_CACHE_DIR)");
  cmd->add_option("-o,--out", fl.out, "write the JSON report to this file");
}

cy_options make_options(const CommonFlags& fl, bool include_periods = false) {
  cy_options opt{};
  opt.conditions_only = fl.conditions_only;
  opt.force = fl.force;
  opt.threads = fl.threads;
  opt.no_timings = fl.no_timings;
  opt.include_periods = include_periods;
  opt.cache_dir = fl.cache_dir.empty() ? nullptr : fl.cache_dir.c_str();
  return opt;
}

int emit(int status, char* json, const std::string& out) {
  if (json) {
    if (out.empty()) {
      std::cout << json << "\n";
    } else {
      std::ofstream os(out);
      if (!os) {
        std::cerr << "cannot open " << out << "\n";
        cy_string_free(json);
        return CY_USAGE_ERROR;
      }
      os << json << "\n";
    }
    cy_string_free(json);
  }
  if (status == CY_USAGE_ERROR) std::cerr << "error: " << cy_last_error() << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of cyclotomic strongly regular graphs, "
               "difference sets, and index-2 Gauss sum closed forms"};
  app.require_subcommand(1);

  std::string env_cache;
  if (const char* e = std::getenv("CYCLOTOME_CACHE_DIR")) env_cache = e;

  uint64_t p = 0, p1 = 0, p2 = 0, m = 1, n = 1, bound = 0;
  std::string kind, format = "json", path, periods_out;

  CommonFlags fl;
  fl.cache_dir = env_cache;

  auto* va = app.add_subcommand("verify-a", "strongly regular Cayley graph, N = p1^m p2^n");
  va->add_option("-p", p, "characteristic")->required();
  va->add_option("--p1", p1)->required();
  va->add_option("--p2", p2)->required();
  va->add_option("-m", m);
  va->add_option("-n", n);
  add_common(va, fl);

  auto* vb = app.add_subcommand("verify-b",
                                "skew Hadamard difference set / Paley PDS, N = 2 p1^m");
  vb->add_option("-p", p)->required();
  vb->add_option("--p1", p1)->required();
  vb->add_option("-m", m);
  add_common(vb, fl);

  auto* sc = app.add_subcommand("scan", "enumerate parameter seeds up to a bound");
  sc->add_option("kind", kind, "A or B")->required();
  sc->add_option("--bound", bound)->required();
  sc->add_option("-o,--out", fl.out);

  auto* ga = app.add_subcommand("gauss", "closed-form Gauss sum cross-check");
  ga->add_option("-p", p)->required();
  ga->add_option("--p1", p1)->required();
  ga->add_option("--p2", p2, "omit for the 2 p1^m family");
  ga->add_option("-m", m);
  ga->add_option("-n", n);
  ga->add_option("--periods-out", periods_out, "also write the period table JSON here");
  add_common(ga, fl, false);

  auto* sh = app.add_subcommand("scheme", "association scheme verification");
  sh->add_option("-p", p)->required();
  sh->add_option("--p1", p1)->required();
  sh->add_option("--p2", p2)->required();
  sh->add_option("-m", m);
  sh->add_option("-n", n);
  add_common(sh, fl, false);

  auto* ex = app.add_subcommand("export", "write the Cayley graph to a file");
  ex->add_option("-p", p)->required();
  ex->add_option("--p1", p1)->required();
  ex->add_option("--p2", p2, "omit for the 2 p1^m family");
  ex->add_option("-m", m);
  ex->add_option("-n", n);
  ex->add_option("--format", format, "graph6, edges, or json");
  ex->add_option("--path", path, "output file")->required();
  add_common(ex, fl, false);

  CLI11_PARSE(app, argc, argv);

  char* json = nullptr;
  if (va->parsed()) {
    cy_options opt = make_options(fl);
    int status = cy_verify_a(p, p1, p2, m, n, &opt, &json);
    return emit(status, json, fl.out);
  }
  if (vb->parsed()) {
    cy_options opt = make_options(fl);
    int status = cy_verify_b(p, p1, m, &opt, &json);
    return emit(status, json, fl.out);
  }
  if (sc->parsed()) {
    if (kind != "A" && kind != "B") {
      std::cerr << "scan kind must be A or B\n";
      return CY_USAGE_ERROR;
    }
    int status = cy_scan(kind[0], bound, &json);
    return emit(status, json, fl.out);
  }
  if (ga->parsed()) {
    cy_options opt = make_options(fl, !periods_out.empty());
    int status = cy_gauss(p, p1, p2, m, n, &opt, &json);
    if (json && !periods_out.empty()) {
      // split the period table into its own file and drop it from the report
      auto doc = nlohmann::ordered_json::parse(json, nullptr, false);
      if (!doc.is_discarded() && doc.contains("period_table")) {
        std::ofstream os(periods_out);
        if (os) os << doc["period_table"].dump(2) << "\n";
        doc.erase("period_table");
        std::string slim = doc.dump(2);
        cy_string_free(json);
        json = (char*)std::malloc(slim.size() + 1);
        if (json) std::memcpy(json, slim.c_str(), slim.size() + 1);
      }
    }
    return emit(status, json, fl.out);
  }
  if (sh->parsed()) {
    cy_options opt = make_options(fl);
    int status = cy_scheme(p, p1, p2, m, n, &opt, &json);
    return emit(status, json, fl.out);
  }
  if (ex->parsed()) {
    cy_options opt = make_options(fl);
    int status =
        cy_export_graph(p, p1, p2, m, n, format.c_str(), path.c_str(), &opt, &json);
    return emit(status, json, fl.out);
  }
  return CY_USAGE_ERROR;
}
