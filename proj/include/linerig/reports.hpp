#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linerig/certificate.hpp"
#include "linerig/graph.hpp"
#include "linerig/realization.hpp"

namespace linerig {

/// All graphs on n vertices with at most max_edges edges, one per isomorphism
/// class, in canonical labeling. Built level by level by adding one edge and
/// deduplicating canonical codes. Throws Error for n > 8.
std::vector<Graph> enumerate_graphs(int n, int max_edges);

/// Injective exact 1-D realization with distinct integer coordinates drawn from [-range, range].
Realization sample_injective_integers(int n, int range, std::uint64_t seed);

struct SweepRow {
  int n = 0;
  int edges = 0;
  std::string graph;       // "u-v u-v ..." in canonical labeling, or a family name
  std::string verdict;     // refuted | not_refuted | certified_ur | no_certificate
  std::string rule;        // which rule decided the row
};

struct SweepReport {
  std::vector<SweepRow> rows;
  int graphs = 0;
  int refuted = 0;
  int refuted_without_edge_count = 0;
};

/// Every graph on n vertices with |E| < 3n/2 checked against the refuters,
/// followed by the K_{n-2,2}+e row (2n-3 edges).
SweepReport edge_bound_sweep(int n);
std::string sweep_csv(const SweepReport& report);

struct BurgerReport {
  Graph graph;
  std::optional<Certificate> certificate;
  bool certificate_verified = false;
  int join_k = 0;  // matching size of the root join, 0 if the root is not a join
  Conjecture1Report checks;
};

struct AugmentedGrotzschReport {
  Graph graph;
  bool triangle_free = false;
  std::optional<int> girth;
  int realizations = 0;
  int stretched_cycle_found = 0;  // on the Groetzsch subframework
  int certified = 0;              // full 16-vertex certificates that verify
  std::vector<std::uint64_t> failed_seeds;
  Conjecture1Report checks;
};

struct CounterexampleReport {
  BurgerReport burger;
  AugmentedGrotzschReport augmented;
};

BurgerReport burger_counterexample(int n = 4);
AugmentedGrotzschReport augmented_grotzsch_counterexample(int realizations = 100, std::uint64_t seed = 1);
CounterexampleReport counterexamples(int realizations = 100, std::uint64_t seed = 1);

}  // namespace linerig
