#include <doctest.h>

#include <cmath>
#include <set>

#include "linerig/catalog.hpp"
#include "linerig/error.hpp"
#include "linerig/realization.hpp"
#include "oracles.hpp"

using namespace linerig;

namespace {

Realization ints(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return Realization::exact_line(std::move(v));
}

// The non-stretched four-cycle 0-1-2-3-0 at 0, 2, 1, 3 and a planar fold of it.
Framework square() { return Framework(cycle_graph(4), ints({0, 2, 1, 3})); }
Framework folded_square() {
  const double r3 = std::sqrt(3.0);
  return Framework(cycle_graph(4), Realization::floating(2, {0, 0, 1, r3, 2, r3, 3, 0}));
}

}  // namespace

TEST_CASE("realization storage and validation") {
  const Realization p = Realization::floating(2, {0, 1, 2, 3, 4, 5});
  CHECK(p.num_points() == 3);
  CHECK(p.value(2, 1) == 5);
  CHECK(p.point(1) == std::vector<double>{2, 3});
  CHECK_THROWS_AS(Realization::floating(2, {0, 1, 2}), Error);
  CHECK_THROWS_AS(Realization::floating(0, {}), Error);
  CHECK_THROWS_AS(Realization::floating(1, {NAN}), Error);
  CHECK_THROWS_AS(p.value(3), Error);
  CHECK_THROWS_AS(p.exact_value(0), Error);

  const Realization e = ints({1, -4});
  CHECK(e.squared_distance_exact(0, 1) == 25);
  CHECK(e.compare_axis0(0, 1) == 1);
  CHECK(e.padded(3).dim() == 3);
  CHECK(e.padded(3).exact_value(1, 2) == 0);
  CHECK(e.as_floating().value(1) == -4.0);
  CHECK_THROWS_AS(e.padded(0), Error);
  CHECK_THROWS_AS(Framework(complete_graph(3), e), Error);
}

TEST_CASE("injectivity predicates") {
  const Graph p3 = path_graph(3);
  CHECK(is_injective(ints({0, 1, 2})));
  CHECK_FALSE(is_injective(ints({0, 1, 0})));
  CHECK(is_quasi_injective(Framework(p3, ints({0, 1, 0}))));
  CHECK_FALSE(is_quasi_injective(Framework(p3, ints({0, 0, 1}))));
}

TEST_CASE("generic sampling is deterministic and injective") {
  CHECK(sample_generic_1d(16, 5) == sample_generic_1d(16, 5));
  CHECK_FALSE(sample_generic_1d(16, 5) == sample_generic_1d(16, 6));
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Realization p = sample_generic_1d(16, seed);
    REQUIRE(p.is_exact());
    std::set<Rational> seen(p.exact_data().begin(), p.exact_data().end());
    CHECK(seen.size() == 16);
    for (const auto& x : p.exact_data()) CHECK(abs(x) <= 1);
  }
}

TEST_CASE("equivalence") {
  const Framework f = square();
  CHECK(are_equivalent(f, f, 0.0));
  CHECK(are_equivalent(f, folded_square(), 1e-12));

  const double tol = 1e-9;
  auto moved = f.realization.as_floating().floating_data();
  moved[2] += 2 * tol;
  CHECK_FALSE(are_equivalent(f, Framework(f.graph, Realization::floating_line(moved)), tol));
  CHECK_THROWS_AS(are_equivalent(f, Framework(path_graph(4), f.realization), tol), Error);
}

TEST_CASE("congruence uses every pair") {
  const Framework f = square();
  CHECK(are_congruent(f, Framework(f.graph, ints({0, -2, -1, -3})), 0.0));
  CHECK_FALSE(are_congruent(f, folded_square(), 1e-6));

  const Framework g = folded_square();
  auto shifted = g.realization.floating_data();
  for (std::size_t i = 0; i < shifted.size(); i += 2) {
    shifted[i] += 5.5;
    shifted[i + 1] -= 1.25;
  }
  CHECK(are_congruent(g, Framework(g.graph, Realization::floating(2, shifted)), 1e-12));
  CHECK_THROWS_AS(are_congruent(f, Framework(path_graph(4), f.realization), 1e-6), Error);
}

TEST_CASE("discrepancies report where they happen") {
  const auto d = max_pair_discrepancy(square(), folded_square());
  CHECK(d.pair == Edge{0, 2});  // 1 on the line, sqrt 7 in the plane
  CHECK(d.value == doctest::Approx(std::sqrt(7.0) - 1.0));
  CHECK(max_edge_discrepancy(square(), folded_square()).value < 1e-12);
}

TEST_CASE("congruent implies equivalent") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (int t = 0; t < 300; ++t) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_graph(n, n + 1, rng);
    std::vector<double> a(n * 2), b(n * 2);
    for (auto& x : a) x = noise(rng);
    // b: either a rigid motion of a or a small random perturbation
    const double c = std::cos(0.7 * t), s = std::sin(0.7 * t);
    for (int v = 0; v < n; ++v) {
      b[2 * v] = c * a[2 * v] - s * a[2 * v + 1] + 3.0;
      b[2 * v + 1] = s * a[2 * v] + c * a[2 * v + 1] - 1.0;
      if (t % 2) b[2 * v] += 1e-3 * noise(rng);
    }
    const Framework f1(g, Realization::floating(2, a)), f2(g, Realization::floating(2, b));
    for (double tol : {1e-9, 1e-4, 1e-2})
      if (are_congruent(f1, f2, tol)) CHECK(are_equivalent(f1, f2, tol));
  }
}

TEST_CASE("stretched cycles: examples") {
  const Graph c4 = cycle_graph(4);
  const auto found = find_stretched_cycle(Framework(c4, ints({0, 1, 3, 7})));
  REQUIRE(found);
  CHECK(found->size() == 4);
  CHECK(is_stretched_cycle(Framework(c4, ints({0, 1, 3, 7})), *found));
  CHECK_FALSE(find_stretched_cycle(square()));
  CHECK_FALSE(is_stretched_cycle(square(), {0, 1, 2, 3}));
  CHECK_THROWS_AS(find_stretched_cycle(Framework(c4, ints({0, 1, 1, 7}))), Error);
  CHECK_THROWS_AS(find_stretched_cycle(folded_square()), Error);
}

TEST_CASE("stretched cycle detection agrees with path enumeration") {
  std::mt19937_64 rng(22);
  int positive = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(n, n - 1 + static_cast<int>(rng() % n), rng);
    const auto p = oracle::random_injective(n, rng);
    const Framework f(g, Realization::floating_line(p));
    const auto cycle = find_stretched_cycle(f);
    CHECK(cycle.has_value() == oracle::has_stretched_cycle(g, p));
    if (cycle) {
      ++positive;
      CHECK(is_stretched_cycle(f, *cycle));
    }
    for (const auto& c : shortcut_stretched_cycles(f)) CHECK(is_stretched_cycle(f, c));
    for (const auto& c : enumerate_stretched_cycles(f, 20)) CHECK(is_stretched_cycle(f, c));
  }
  CHECK(positive > 50);
  CHECK(positive < 480);
}

TEST_CASE("every injective realization of the Groetzsch graph has a stretched cycle") {
  const Graph g = grotzsch_graph();
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const auto p = oracle::random_injective(11, rng);
    const auto cycle = find_stretched_cycle(Framework(g, Realization::floating_line(p)));
    REQUIRE(cycle);
    CHECK(oracle::has_stretched_cycle(g, p));
  }
}
