#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace linerig {

using Vertex = int;

/// Unordered vertex pair, stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on the dense vertex set 0..n-1.
///
/// Adjacency lists are kept sorted so that edge iteration (and therefore
/// serialization) is canonical. Labels are optional metadata and take no
/// part in equality.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return num_edges_; }

  /// Adds uv. Returns false if the edge was already present.
  /// Throws on self-loops and out-of-range endpoints.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  int min_degree() const;

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  void set_label(Vertex v, std::string label);
  /// The label of v, or empty when unlabeled.
  const std::string& label(Vertex v) const;
  bool has_labels() const;
  std::optional<Vertex> find_label(std::string_view label) const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
  int num_edges_ = 0;
};

// ---------------------------------------------------------------------------
// Structural queries

std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Components of g after deleting the vertices flagged in `removed`.
std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                      const std::vector<bool>& removed);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

/// Subgraph induced on `keep`; vertex i of the result is keep[i]. Labels carry over.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

bool has_triangle(const Graph& g);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Fixpoint of K4-completion: an edge uv is added whenever u, v are
/// non-adjacent and have two adjacent common neighbours.
Graph k4_completion_closure(const Graph& g);

// ---------------------------------------------------------------------------
// Cuts and separators

/// An edge cut given by one side X; cut_edges are the edges leaving X.
struct EdgeCut {
  std::vector<Vertex> side;
  std::vector<Edge> cut_edges;
};

struct EdgeCutSearch {
  std::optional<EdgeCut> cut;
  /// False when the search budget ran out, so a missing cut is only a heuristic negative.
  bool exhaustive = true;
};

/// True iff X is a nonempty proper subset whose cut edges are pairwise disjoint.
bool is_independent_edge_cut(const Graph& g, std::span<const Vertex> side);

/// Searches for an independent edge cut (a matching cut) by branching on
/// side assignments with unit propagation. On a disconnected graph the
/// component of vertex 0 is returned with an empty cut.
EdgeCutSearch find_independent_edge_cut(const Graph& g, std::int64_t node_budget = 2'000'000);

struct SeparatorSearch {
  std::optional<std::vector<Vertex>> separator;
  bool exhaustive = true;
};

/// True iff S spans no edge and G - S has at least two components.
bool is_independent_separator(const Graph& g, std::span<const Vertex> s);

/// Smallest independent vertex separator, enumerating stable sets by size.
/// Exhaustive for n <= exhaustive_limit; beyond that at most `budget` stable
/// sets are examined and the result is flagged non-exhaustive.
SeparatorSearch find_independent_vertex_separator(const Graph& g, int exhaustive_limit = 16,
                                                  std::int64_t budget = 5'000'000);

// ---------------------------------------------------------------------------
// Constructions

/// Edge reduced attachment of g1 and g2 along g2. `identify` lists
/// (g1-vertex, g2-vertex) pairs. Unidentified g2 vertices receive indices
/// g1.num_vertices(), g1.num_vertices()+1, ... in increasing g2 order.
Graph edge_reduced_attachment(const Graph& g1, const Graph& g2,
                              std::span<const std::pair<Vertex, Vertex>> identify);

struct JoinedGraph {
  Graph graph;
  /// The k connecting edges, in the joined graph's indices.
  std::vector<Edge> matching;
  int k() const { return static_cast<int>(matching.size()); }
};

/// Disjoint union of g and h (h shifted by g.num_vertices()) plus one edge
/// per (g-vertex, h-vertex) pair.
JoinedGraph join(const Graph& g, const Graph& h, std::span<const std::pair<Vertex, Vertex>> pairs);

struct PeelStep {
  Vertex vertex;
  Vertex x;
  Vertex y;
};

struct PeelResult {
  std::vector<PeelStep> steps;  // original indices
  Graph residual;
  std::vector<Vertex> residual_ids;  // residual vertex i is original residual_ids[i]
};

/// Greedily deletes degree-2 vertices, lowest index first, until none is left.
/// No edge is inserted between the deleted vertex's neighbours.
PeelResult degree2_peel(const Graph& g);

// ---------------------------------------------------------------------------
// Isomorphism (small graphs)

/// A labeling-independent code: the adjacency bits under a canonical
/// relabeling found by colour refinement and individualization.
std::vector<std::uint64_t> canonical_code(const Graph& g);

/// Permutation perm with perm[i] = original vertex placed at position i.
std::vector<Vertex> canonical_order(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace linerig
