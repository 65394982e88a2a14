#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "linerig/graph.hpp"
#include "linerig/realization.hpp"

namespace linerig {

/// realization: the certificate speaks about one given 1-D framework.
/// generic: it speaks about every generic 1-D realization of the graph.
enum class CertMode { realization, generic };

struct CertNode;
using CertNodePtr = std::shared_ptr<const CertNode>;

namespace rule {

/// A single edge uv.
struct EdgeBase {
  Vertex u;
  Vertex v;
};

/// A cycle x1..xk whose coordinates increase along the listed order.
struct StretchedCycle {
  std::vector<Vertex> cycle;
};

/// Adds w through the edges wx, wy; the child covers x and y.
struct Deg2Ext {
  CertNodePtr child;
  Vertex w;
  Vertex x;
  Vertex y;
};

/// Union of two certified pieces sharing at least two vertices.
struct Attach {
  CertNodePtr left;
  CertNodePtr right;
};

/// Two vertex-disjoint certified pieces linked by k >= 4 pairwise disjoint
/// edges, stored as (left vertex, right vertex).
struct Join {
  CertNodePtr left;
  CertNodePtr right;
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

/// The child spans every vertex; the full graph only adds edges.
struct Supergraph {
  CertNodePtr child;
};

}  // namespace rule

using CertRule =
    std::variant<rule::EdgeBase, rule::StretchedCycle, rule::Deg2Ext, rule::Attach, rule::Join, rule::Supergraph>;

/// One derivation step. `covered` is filled in by the make_* helpers and is
/// recomputed independently by the verifier.
struct CertNode {
  CertRule rule;
  std::vector<Vertex> covered;  // sorted
};

CertNodePtr make_edge_base(Vertex u, Vertex v);
CertNodePtr make_stretched_cycle(std::vector<Vertex> cycle);
CertNodePtr make_deg2ext(CertNodePtr child, Vertex w, Vertex x, Vertex y);
CertNodePtr make_attach(CertNodePtr left, CertNodePtr right);
CertNodePtr make_join(CertNodePtr left, CertNodePtr right, std::vector<std::pair<Vertex, Vertex>> pairs);
CertNodePtr make_supergraph(CertNodePtr child);

struct Certificate {
  CertMode mode = CertMode::generic;
  CertNodePtr root;
  std::vector<Vertex> covered;  // sorted; must equal the root's covered set
};

Certificate make_certificate(CertMode mode, CertNodePtr root);

struct CertificateCheck {
  bool ok = false;
  bool full = false;        // covered set is the whole vertex set
  std::string failure;      // first failing node, empty on success
};

/// Replays every node of `cert` against a 1-D framework (realization mode)
/// or a graph (generic mode). Throws Error if the covered-set bookkeeping is
/// inconsistent or the tree has null children.
CertificateCheck verify_certificate(const Certificate& cert, const Framework& f);
CertificateCheck verify_certificate(const Certificate& cert, const Graph& g);

struct SearchConfig {
  /// Stretched cycles enumerated as seeds on top of the shortcut cycles.
  int cycle_seed_cap = 100;
  /// Upper bound on distinct certified pieces tracked during the closure.
  int piece_cap = 20000;
};

/// Grows certified pieces from edges and stretched cycles by degree-2
/// extensions and attachments. Sound but incomplete: nullopt means no
/// certificate was found, not that the framework flexes.
std::optional<Certificate> search_certificate_realization(const Framework& f,
                                                          const SearchConfig& config = {});

/// The same closure with generic preconditions, plus joins along >= 4
/// disjoint edges.
std::optional<Certificate> search_certificate_generic(const Graph& g, const SearchConfig& config = {});

struct Conjecture1Report {
  bool has_triangle = false;
  bool closure_complete = false;
  bool no_independent_edge_cut = false;
  bool cut_search_exhaustive = true;
  std::optional<EdgeCut> cut;
  std::optional<int> girth;
  bool ur_claimed = false;
  /// Some necessary condition fails although universal rigidity is claimed.
  bool counterexample = false;

  bool all_pass() const { return has_triangle && closure_complete && no_independent_edge_cut; }
};

/// Evaluates the three necessary conditions for being built from triangles
/// by edge reduced attachments and edge additions. Requires g connected.
Conjecture1Report conjecture1_necessary_checks(const Graph& g, bool ur_claimed);

}  // namespace linerig
