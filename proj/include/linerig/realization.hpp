#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linerig/graph.hpp"
#include "linerig/rational.hpp"

namespace linerig {

enum class Flavor { exact, floating };

/// Placement of the vertices 0..n-1 in R^dim.
///
/// The exact flavor stores rationals and every predicate on it is decided
/// without rounding; the floating flavor stores doubles. Coordinates are
/// flattened row-major (point v occupies [v*dim, (v+1)*dim)).
class Realization {
 public:
  Realization() = default;

  static Realization exact(int dim, std::vector<Rational> flat);
  static Realization floating(int dim, std::vector<double> flat);
  static Realization exact_line(std::vector<Rational> coords) { return exact(1, std::move(coords)); }
  static Realization floating_line(std::vector<double> coords) { return floating(1, std::move(coords)); }

  int dim() const { return dim_; }
  int num_points() const { return num_points_; }
  Flavor flavor() const { return flavor_; }
  bool is_exact() const { return flavor_ == Flavor::exact; }

  /// Coordinate as a double, for either flavor.
  double value(Vertex v, int axis = 0) const;
  /// Exact coordinate; throws for the floating flavor.
  const Rational& exact_value(Vertex v, int axis = 0) const;

  std::vector<double> point(Vertex v) const;
  double distance(Vertex a, Vertex b) const;
  /// Exact squared distance; throws for the floating flavor.
  Rational squared_distance_exact(Vertex a, Vertex b) const;

  /// Sign of p(a) - p(b) on the first axis, computed exactly for the exact flavor.
  int compare_axis0(Vertex a, Vertex b) const;
  bool coincident(Vertex a, Vertex b) const;

  Realization as_floating() const;
  /// Copy with extra zero axes appended.
  Realization padded(int new_dim) const;

  const std::vector<Rational>& exact_data() const { return exact_; }
  const std::vector<double>& floating_data() const { return floating_; }

  bool operator==(const Realization& other) const;

 private:
  void check(Vertex v, int axis) const;

  int dim_ = 1;
  int num_points_ = 0;
  Flavor flavor_ = Flavor::floating;
  std::vector<Rational> exact_;
  std::vector<double> floating_;
};

/// A graph together with a realization of it. Edge lengths are never cached.
struct Framework {
  Graph graph;
  Realization realization;

  Framework() = default;
  Framework(Graph g, Realization p);

  int dim() const { return realization.dim(); }
};

/// All points pairwise distinct.
bool is_injective(const Realization& p);
/// No edge has coincident endpoints.
bool is_quasi_injective(const Framework& f);

/// Exact 1-D realization with pairwise distinct coordinates k / 2^60, k
/// uniform in [-2^60, 2^60]. Deterministic per seed.
Realization sample_generic_1d(int n, std::uint64_t seed);

/// Largest |dist_f1 - dist_f2| over the given pairs and where it occurs.
struct Discrepancy {
  double value = 0.0;
  Edge pair{-1, -1};
};
Discrepancy max_edge_discrepancy(const Framework& f1, const Framework& f2);
Discrepancy max_pair_discrepancy(const Framework& f1, const Framework& f2);

/// Every edge length agrees within tol. With two exact realizations and
/// tol == 0 the comparison is on exact squared lengths.
bool are_equivalent(const Framework& f1, const Framework& f2, double tol);

/// Every pairwise distance agrees within tol; no alignment is attempted.
bool are_congruent(const Framework& f1, const Framework& f2, double tol);

/// A cycle x1..xk (k >= 3) of f with strictly increasing coordinates.
/// Requires an injective 1-D framework.
std::optional<std::vector<Vertex>> find_stretched_cycle(const Framework& f);

/// One stretched cycle per shortcut edge (an edge a->b of the low-to-high
/// orientation that also has a longer directed a ~> b path).
std::vector<std::vector<Vertex>> shortcut_stretched_cycles(const Framework& f);

/// Up to `cap` stretched cycles by depth-first enumeration of monotone paths.
std::vector<std::vector<Vertex>> enumerate_stretched_cycles(const Framework& f, int cap);

/// Checks that `cycle` is a stretched cycle of f.
bool is_stretched_cycle(const Framework& f, const std::vector<Vertex>& cycle);

}  // namespace linerig
