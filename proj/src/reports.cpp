#include "linerig/reports.hpp"

#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "linerig/catalog.hpp"
#include "linerig/error.hpp"
#include "linerig/refute.hpp"

namespace linerig {

namespace {

Graph relabel_canonical(const Graph& g) {
  const auto order = canonical_order(g);
  std::vector<Vertex> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<Vertex>(i);
  Graph out(g.num_vertices());
  for (const auto& [u, v] : g.edges()) out.add_edge(pos[u], pos[v]);
  return out;
}

std::string edge_string(const Graph& g) {
  std::string s;
  for (const auto& [u, v] : g.edges()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(u) + "-" + std::to_string(v);
  }
  return s;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, int max_edges) {
  if (n < 0 || n > 8) throw Error("graph enumeration supports 0 <= n <= 8");
  std::vector<Graph> all;
  std::vector<Graph> level{Graph(n)};
  for (int m = 0; m <= max_edges && !level.empty(); ++m) {
    all.insert(all.end(), level.begin(), level.end());
    if (m == max_edges) break;
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<Graph> next;
    for (const Graph& g : level)
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          Graph h = g;
          h.add_edge(u, v);
          if (seen.insert(canonical_code(h)).second) next.push_back(relabel_canonical(h));
        }
    level = std::move(next);
  }
  return all;
}

Realization sample_injective_integers(int n, int range, std::uint64_t seed) {
  if (2 * range + 1 < n) throw Error("integer range too small for an injective realization");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-range, range);
  std::unordered_set<int> used;
  std::vector<Rational> coords;
  while (static_cast<int>(coords.size()) < n) {
    const int x = pick(rng);
    if (used.insert(x).second) coords.emplace_back(x);
  }
  return Realization::exact_line(std::move(coords));
}

SweepReport edge_bound_sweep(int n) {
  if (n < 3 || n > 8) throw Error("sweep supports 3 <= n <= 8");
  SweepReport report;
  const int max_edges = (3 * n - 1) / 2;  // largest m with 2m < 3n
  for (const Graph& g : enumerate_graphs(n, max_edges)) {
    SweepRow row{n, g.num_edges(), edge_string(g), "not_refuted", ""};
    ++report.graphs;
    if (auto chain = peel_refute(g, PeelOptions{.use_edge_count = false})) {
      row.verdict = "refuted";
      row.rule = std::string("peel:") + to_string(chain->base.rule);
      ++report.refuted;
      ++report.refuted_without_edge_count;
    } else if (auto bound = edge_bound_refute(g)) {
      row.verdict = "refuted";
      row.rule = std::string("edge_bound:") + to_string(bound->rule);
      ++report.refuted;
    }
    report.rows.push_back(std::move(row));
  }
  const Graph k = complete_bipartite_plus_edge(n - 2, 2);
  SweepRow row{n, k.num_edges(), "K_{" + std::to_string(n - 2) + ",2}+e", "no_certificate", "generic_certificate"};
  if (auto cert = search_certificate_generic(k)) {
    const auto check = verify_certificate(*cert, k);
    if (check.ok && check.full) row.verdict = "certified_ur";
  }
  report.rows.push_back(std::move(row));
  return report;
}

std::string sweep_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "n,edges,graph,verdict,rule\n";
  for (const auto& r : report.rows)
    out << r.n << ',' << r.edges << ",\"" << r.graph << "\"," << r.verdict << ',' << r.rule << '\n';
  return out.str();
}

BurgerReport burger_counterexample(int n) {
  BurgerReport r;
  r.graph = burger_graph(n);
  r.certificate = search_certificate_generic(r.graph);
  if (r.certificate) {
    const auto check = verify_certificate(*r.certificate, r.graph);
    r.certificate_verified = check.ok && check.full;
    const CertNode* node = r.certificate->root.get();
    if (const auto* sup = std::get_if<rule::Supergraph>(&node->rule)) node = sup->child.get();
    if (const auto* j = std::get_if<rule::Join>(&node->rule)) r.join_k = static_cast<int>(j->pairs.size());
  }
  r.checks = conjecture1_necessary_checks(r.graph, r.certificate_verified);
  return r;
}

AugmentedGrotzschReport augmented_grotzsch_counterexample(int realizations, std::uint64_t seed) {
  AugmentedGrotzschReport r;
  r.graph = augmented_grotzsch_graph();
  r.triangle_free = !has_triangle(r.graph);
  r.girth = girth(r.graph);
  r.realizations = realizations;

  std::vector<Vertex> core;
  for (Vertex v = 0; v < r.graph.num_vertices(); ++v)
    if (r.graph.label(v).find('\'') == std::string::npos) core.push_back(v);
  const Graph grotzsch = induced_subgraph(r.graph, core);

  for (int i = 0; i < realizations; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    const Realization p = sample_injective_integers(r.graph.num_vertices(), 40, s);
    std::vector<Rational> sub;
    for (Vertex v : core) sub.push_back(p.exact_value(v));
    if (find_stretched_cycle(Framework(grotzsch, Realization::exact_line(std::move(sub)))))
      ++r.stretched_cycle_found;

    const Framework f(r.graph, p);
    bool ok = false;
    if (auto cert = search_certificate_realization(f)) {
      const auto check = verify_certificate(*cert, f);
      ok = check.ok && check.full;
    }
    if (ok)
      ++r.certified;
    else
      r.failed_seeds.push_back(s);
  }
  r.checks = conjecture1_necessary_checks(r.graph, realizations > 0 && r.certified == realizations);
  return r;
}

CounterexampleReport counterexamples(int realizations, std::uint64_t seed) {
  return {burger_counterexample(4), augmented_grotzsch_counterexample(realizations, seed)};
}

}  // namespace linerig
