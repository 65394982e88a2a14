#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "linerig/catalog.hpp"
#include "linerig/error.hpp"
#include "linerig/reports.hpp"
#include "oracles.hpp"

using namespace linerig;

namespace {

// Isomorphism classes of all labeled graphs on n vertices with at most m edges.
std::size_t brute_force_classes(int n, int m) {
  std::vector<Edge> pairs;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::set<std::vector<bool>> seen;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    if (std::popcount(mask) > m) continue;
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    seen.insert(oracle::brute_canonical(g));
  }
  return seen.size();
}

}  // namespace

TEST_CASE("graph enumeration agrees with brute force") {
  CHECK(enumerate_graphs(4, 6).size() == 11);
  CHECK(enumerate_graphs(4, 6).size() == brute_force_classes(4, 6));
  CHECK(enumerate_graphs(5, 10).size() == brute_force_classes(5, 10));
  CHECK(enumerate_graphs(5, 4).size() == brute_force_classes(5, 4));
  CHECK(enumerate_graphs(1, 0).size() == 1);
  CHECK_THROWS_AS(enumerate_graphs(9, 3), Error);
}

TEST_CASE("six-vertex graphs by edge count") {
  const std::vector<int> expected{1, 1, 2, 5, 9, 15, 21, 24, 24};
  std::vector<int> by_edges(9, 0);
  const auto graphs = enumerate_graphs(6, 8);
  std::set<std::vector<bool>> codes;
  for (const Graph& g : graphs) {
    ++by_edges.at(g.num_edges());
    codes.insert(oracle::brute_canonical(g));
  }
  CHECK(by_edges == expected);
  CHECK(graphs.size() == 102);
  CHECK(codes.size() == graphs.size());
}

TEST_CASE("integer samples are injective and reproducible") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Realization p = sample_injective_integers(16, 40, seed);
    REQUIRE(p.is_exact());
    CHECK(is_injective(p));
    for (const auto& x : p.exact_data()) {
      CHECK(x.get_den() == 1);
      CHECK(abs(x) <= 40);
    }
  }
  CHECK(sample_injective_integers(8, 10, 3) == sample_injective_integers(8, 10, 3));
  CHECK_THROWS_AS(sample_injective_integers(10, 4, 1), Error);
}

TEST_CASE("edge-bound sweep on six vertices") {
  const SweepReport r = edge_bound_sweep(6);
  CHECK(r.graphs == 102);
  CHECK(r.refuted == r.graphs);
  CHECK(r.refuted_without_edge_count == r.graphs);
  REQUIRE(r.rows.size() == 103);
  CHECK(r.rows.back().verdict == "certified_ur");
  CHECK(r.rows.back().edges == 9);
  const std::string csv = sweep_csv(r);
  CHECK(csv.rfind("n,edges,graph,verdict,rule\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 104);
  CHECK_THROWS_AS(edge_bound_sweep(2), Error);
}

TEST_CASE("Burger graph report") {
  const BurgerReport b = burger_counterexample(4);
  CHECK(b.certificate_verified);
  CHECK(b.join_k == 4);
  CHECK(b.checks.counterexample);
  REQUIRE(b.checks.cut);
  CHECK(b.checks.cut->cut_edges.size() == 4);
}

TEST_CASE("augmented Groetzsch report") {
  const AugmentedGrotzschReport a = augmented_grotzsch_counterexample(10, 5);
  CHECK(a.triangle_free);
  CHECK(a.girth == 4);
  CHECK(a.realizations == 10);
  CHECK(a.stretched_cycle_found == 10);
  CHECK(a.certified == 10);
  CHECK(a.failed_seeds.empty());
  CHECK(a.checks.counterexample);
}
