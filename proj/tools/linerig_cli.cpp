#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "linerig/analyze.hpp"
#include "linerig/catalog.hpp"
#include "linerig/error.hpp"
#include "linerig/polyverify.hpp"
#include "linerig/reports.hpp"
#include "linerig/serialize.hpp"

using namespace linerig;

namespace {

constexpr int kExitError = 3;

struct InputOptions {
  std::string catalog;
  std::string graph_file;
  std::string realization_file;
  std::string coords;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--catalog", in.catalog, "named graph, e.g. B_n:4 or prism");
  cmd->add_option("--graph", in.graph_file, "graph JSON file");
  cmd->add_option("--realization", in.realization_file, "realization JSON file");
  cmd->add_option("--coords", in.coords, "comma-separated exact 1-D coordinates, e.g. 0,2,1,3");
}

Json read_json(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error("cannot open " + path);
  try {
    return Json::parse(file);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
}

Graph load_graph(const InputOptions& in) {
  if (in.catalog.empty() == in.graph_file.empty()) throw Error("give exactly one of --catalog and --graph");
  return in.catalog.empty() ? graph_from_json(read_json(in.graph_file)) : catalog_from_spec(in.catalog);
}

std::optional<Realization> load_realization(const InputOptions& in) {
  if (!in.realization_file.empty() && !in.coords.empty()) throw Error("give at most one of --realization and --coords");
  if (!in.realization_file.empty()) return realization_from_json(read_json(in.realization_file));
  if (in.coords.empty()) return std::nullopt;
  std::vector<Rational> xs;
  std::stringstream ss(in.coords);
  std::string item;
  while (std::getline(ss, item, ',')) xs.push_back(parse_rational(item));
  return Realization::exact_line(std::move(xs));
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LINERIG_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error("LINERIG_SEED is not an unsigned integer");
    }
  }
  return 1;
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw Error("cannot write " + out_path);
  file << j.dump(2) << '\n';
}

int exit_code(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::ur: return 0;
    case VerdictKind::not_ur: return 1;
    case VerdictKind::undecided: return 2;
  }
  return kExitError;
}

std::string describe(const RefutationReason& r) {
  return std::visit(
      [](const auto& x) -> std::string {
        using R = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<R, EdgeBoundReason>) {
          return std::string("edge bound (") + to_string(x.rule) + ") on " + std::to_string(x.vertices) +
                 " vertices, " + std::to_string(x.edges) + " edges";
        } else if constexpr (std::is_same_v<R, PeelChainReason>) {
          return std::to_string(x.removed.size()) + " degree-2 vertices peeled, then " + to_string(x.base.rule);
        } else if constexpr (std::is_same_v<R, SeparatorReason>) {
          return "independent separator of size " + std::to_string(x.separator.size());
        } else {
          return "flex witness in dimension " + std::to_string(x.dim) + " after " + std::to_string(x.restarts_used) +
                 " restarts, gap " + std::to_string(x.witness.gap);
        }
      },
      r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal rigidity of frameworks on the line"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_path;
  bool json = false;

  // analyze
  InputOptions analyze_in;
  AnalyzeConfig config;
  auto* analyze_cmd = app.add_subcommand("analyze", "decide UR: certificate, refutation or undecided");
  add_input_options(analyze_cmd, analyze_in);
  analyze_cmd->add_option("--seed", seed, "random seed (default: LINERIG_SEED or 1)")->each([&](const std::string&) {
    seed_given = true;
  });
  analyze_cmd->add_option("--dims", config.dims, "flex-search dimensions")->delimiter(',');
  analyze_cmd->add_option("--restarts", config.restarts, "flex-search restarts per dimension");
  analyze_cmd->add_option("--realizations", config.realizations, "sampled realizations in graph mode");
  analyze_cmd->add_flag("--json", json, "print the verdict as JSON");
  analyze_cmd->add_option("--out", out_path, "write the verdict JSON to a file");

  // certify
  InputOptions certify_in;
  std::string certificate_file;
  auto* certify_cmd = app.add_subcommand("certify", "search for (or verify) a UR certificate");
  add_input_options(certify_cmd, certify_in);
  certify_cmd->add_option("--verify", certificate_file, "certificate JSON to verify instead of searching");
  certify_cmd->add_option("--out", out_path, "write the certificate JSON to a file");

  // refute
  InputOptions refute_in;
  bool use_separator = false;
  std::string witness_file;
  FlexConfig flex;
  auto* refute_cmd = app.add_subcommand("refute", "search for a non-UR reason");
  add_input_options(refute_cmd, refute_in);
  refute_cmd->add_option("--seed", seed, "random seed")->each([&](const std::string&) { seed_given = true; });
  refute_cmd->add_option("--dims", flex.dims, "flex-search dimensions")->delimiter(',');
  refute_cmd->add_option("--restarts", flex.restarts, "flex-search restarts per dimension");
  refute_cmd->add_flag("--separator", use_separator, "build a quasi-injective separator witness");
  refute_cmd->add_option("--verify", witness_file, "reason JSON to verify instead of searching");
  refute_cmd->add_option("--out", out_path, "write the reason JSON to a file");

  // verify-polynomial
  auto* poly_cmd = app.add_subcommand("verify-polynomial", "compare the derived and transcribed polynomials");
  poly_cmd->add_flag("--json", json, "also print both polynomials as JSON");

  // counterexamples
  int realizations = 100;
  auto* counter_cmd = app.add_subcommand("counterexamples", "reproduce the two counterexamples");
  counter_cmd->add_option("--realizations", realizations, "random injective realizations to certify");
  counter_cmd->add_option("--seed", seed, "first seed")->each([&](const std::string&) { seed_given = true; });
  counter_cmd->add_flag("--json", json, "print the report as JSON");

  // sweep
  int sweep_n = 6;
  auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive edge-bound sweep as CSV");
  sweep_cmd->add_option("--n", sweep_n, "vertex count (3..8)");
  sweep_cmd->add_option("--out", out_path, "write the CSV to a file");

  // catalog
  std::string catalog_spec;
  bool list = false;
  auto* catalog_cmd = app.add_subcommand("catalog", "print a named graph as JSON");
  catalog_cmd->add_option("spec", catalog_spec, "name[:params]");
  catalog_cmd->add_flag("--list", list, "list the graph families");

  // stretched-cycle
  InputOptions cycle_in;
  auto* cycle_cmd = app.add_subcommand("stretched-cycle", "find a stretched cycle in a 1-D framework");
  add_input_options(cycle_cmd, cycle_in);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!seed_given) seed = default_seed();

    if (analyze_cmd->parsed()) {
      config.seed = seed;
      const Graph g = load_graph(analyze_in);
      const auto p = load_realization(analyze_in);
      const Verdict v = p ? analyze(Framework(g, *p), config) : analyze(g, config);
      if (!verify_verdict(v, g, p ? &*p : nullptr)) throw Error("internal: verdict payload failed re-verification");
      if (json || !out_path.empty()) emit(verdict_to_json(v), out_path);
      if (!json) {
        std::cout << "verdict: " << to_string(v.kind) << '\n';
        if (v.certificate)
          std::cout << "certificate: " << (v.certificate->mode == CertMode::generic ? "generic" : "realization")
                    << ", covers " << v.certificate->covered.size() << " vertices\n";
        if (v.reason) std::cout << "reason: " << describe(*v.reason) << '\n';
        if (!v.diagnostics.empty()) std::cout << "diagnostics: " << v.diagnostics << '\n';
        std::cout << "seed " << v.budget.seed << ", restarts used " << v.budget.restarts_used << ", "
                  << v.budget.elapsed_ms << " ms\n";
      }
      return exit_code(v.kind);
    }

    if (certify_cmd->parsed()) {
      const Graph g = load_graph(certify_in);
      const auto p = load_realization(certify_in);
      if (!certificate_file.empty()) {
        const Certificate cert = certificate_from_json(read_json(certificate_file));
        const auto check = p ? verify_certificate(cert, Framework(g, *p)) : verify_certificate(cert, g);
        std::cout << (check.ok ? "valid" : "invalid") << (check.ok && check.full ? ", full" : "")
                  << (check.failure.empty() ? "" : ": " + check.failure) << '\n';
        return check.ok && check.full ? 0 : 1;
      }
      const auto cert = p ? search_certificate_realization(Framework(g, *p)) : search_certificate_generic(g);
      if (!cert) {
        std::cout << "no certificate found\n";
        return 1;
      }
      emit(certificate_to_json(*cert), out_path);
      return 0;
    }

    if (refute_cmd->parsed()) {
      const Graph g = load_graph(refute_in);
      const auto p = load_realization(refute_in);
      if (!witness_file.empty()) {
        const bool ok = verify_reason(g, reason_from_json(read_json(witness_file)));
        std::cout << (ok ? "valid" : "invalid") << '\n';
        return ok ? 0 : 1;
      }
      std::optional<RefutationReason> reason;
      flex.seed = seed;
      if (use_separator) {
        const auto s = find_independent_vertex_separator(g);
        if (s.separator) reason = separator_witness(g, *s.separator, seed);
      } else if (p) {
        if (auto r = flex_search(Framework(g, *p), flex)) reason = NumericReason{r->witness, r->restarts_used, r->dim};
      } else if (auto b = edge_bound_refute(g)) {
        reason = *b;
      } else if (auto c = peel_refute(g)) {
        reason = *c;
      } else if (auto r = flex_search(Framework(g, sample_generic_1d(g.num_vertices(), seed)), flex)) {
        reason = NumericReason{r->witness, r->restarts_used, r->dim};
      }
      if (!reason) {
        std::cout << "no refutation found\n";
        return 1;
      }
      emit(reason_to_json(*reason), out_path);
      return 0;
    }

    if (poly_cmd->parsed()) {
      const MultiPoly derived = derive_f();
      const MultiPoly transcribed = paper_f();
      const PolyDiff d = diff(derived, transcribed);
      std::cout << "derived terms: " << derived.term_count() << '\n'
                << "transcribed terms: " << transcribed.term_count() << '\n'
                << "equal: " << (d.empty() ? "yes" : "no") << '\n';
      for (const auto& [e, c] : d.only_left) std::cout << "  only derived: " << c << ' ' << monomial_string(e) << '\n';
      for (const auto& [e, c] : d.only_right)
        std::cout << "  only transcribed: " << c << ' ' << monomial_string(e) << '\n';
      for (const auto& [e, a, b] : d.mismatched)
        std::cout << "  coefficient differs: " << monomial_string(e) << " derived " << a << ", transcribed " << b
                  << '\n';
      if (json) std::cout << Json{{"derived", poly_to_json(derived)}, {"transcribed", poly_to_json(transcribed)}}.dump() << '\n';
      return d.empty() ? 0 : 1;
    }

    if (counter_cmd->parsed()) {
      const CounterexampleReport r = counterexamples(realizations, seed);
      const auto& b = r.burger;
      const auto& a = r.augmented;
      const int cut_size = b.checks.cut ? static_cast<int>(b.checks.cut->cut_edges.size()) : 0;
      Json j = {
          {"B_4",
           {{"certified_ur", b.certificate_verified},
            {"join_k", b.join_k},
            {"independent_edge_cut_size", cut_size},
            {"violates", "no independent edge cut"},
            {"counterexample", b.checks.counterexample}}},
          {"augmented_grotzsch",
           {{"triangle_free", a.triangle_free},
            {"girth", a.girth ? Json(*a.girth) : Json(nullptr)},
            {"realizations", a.realizations},
            {"stretched_cycle_found", a.stretched_cycle_found},
            {"certified", a.certified},
            {"failed_seeds", a.failed_seeds},
            {"violates", "contains a triangle"},
            {"counterexample", a.checks.counterexample}}}};
      if (json) {
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "B_4: generic certificate " << (b.certificate_verified ? "verified" : "missing") << " (join, k="
                  << b.join_k << "); independent edge cut with " << cut_size
                  << " edges -> violates the no-independent-edge-cut condition\n";
        std::cout << "augmented Groetzsch: triangle-free " << (a.triangle_free ? "yes" : "no") << ", girth "
                  << (a.girth ? std::to_string(*a.girth) : "inf") << "; " << a.certified << '/' << a.realizations
                  << " injective realizations certified, stretched cycle in the Groetzsch part " << a.stretched_cycle_found
                  << '/' << a.realizations << " -> violates the triangle condition\n";
      }
      return b.checks.counterexample && a.checks.counterexample ? 0 : 1;
    }

    if (sweep_cmd->parsed()) {
      const SweepReport r = edge_bound_sweep(sweep_n);
      const std::string csv = sweep_csv(r);
      if (out_path.empty()) {
        std::cout << csv;
      } else {
        std::ofstream file(out_path);
        if (!file) throw Error("cannot write " + out_path);
        file << csv;
      }
      std::cerr << r.refuted << '/' << r.graphs << " graphs refuted (" << r.refuted_without_edge_count
                << " without the edge-count rule)\n";
      return r.refuted == r.graphs ? 0 : 1;
    }

    if (catalog_cmd->parsed()) {
      if (list || catalog_spec.empty()) {
        for (const auto& name : catalog_names()) std::cout << name << '\n';
        return 0;
      }
      std::cout << graph_to_json(catalog_from_spec(catalog_spec)).dump(2) << '\n';
      return 0;
    }

    if (cycle_cmd->parsed()) {
      const Graph g = load_graph(cycle_in);
      const auto p = load_realization(cycle_in);
      if (!p) throw Error("stretched-cycle needs --realization or --coords");
      const auto cycle = find_stretched_cycle(Framework(g, *p));
      if (!cycle) {
        std::cout << "none\n";
        return 1;
      }
      for (std::size_t i = 0; i < cycle->size(); ++i) std::cout << (i ? " " : "") << (*cycle)[i];
      std::cout << '\n';
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
