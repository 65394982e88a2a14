#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "linerig/graph.hpp"
#include "linerig/realization.hpp"

namespace linerig {

/// Equivalence residual (edge-length agreement) for floating witnesses.
inline constexpr double kEquivalenceTol = 1e-9;
/// Minimum distance change that counts as non-congruence. Candidates with a
/// gap between kEquivalenceTol and this threshold are discarded.
inline constexpr double kGapThreshold = 1e-6;

/// An equivalent but non-congruent realization of a 1-D framework.
struct Witness {
  Framework base;          // 1-D
  Realization alt;         // any dimension
  Edge nonlinked_pair{-1, -1};
  double residual = 0.0;   // max edge-length discrepancy
  double gap = 0.0;        // distance change at nonlinked_pair
};

struct WitnessCheck {
  bool ok = false;
  std::string failure;
};

/// Re-derives residual and gap from the coordinates. Two exact realizations
/// are checked without rounding (edges equal, pair distance different).
WitnessCheck verify_witness(const Witness& w, double equiv_tol = kEquivalenceTol,
                            double gap_threshold = kGapThreshold);

/// Builds a witness record from base/alt, filling residual, gap and the pair of maximal gap.
Witness make_witness(Framework base, Realization alt);

// ---------------------------------------------------------------------------
// Refutation reasons

enum class BoundRule {
  edge_count,      // |V| >= 6 and |E| < 3|V|/2
  min_degree,      // |V| >= 3 and some vertex of degree <= 1
  four_vertex,     // |V| = 4 and |E| <= 4
};

struct EdgeBoundReason {
  int vertices = 0;
  int edges = 0;
  BoundRule rule = BoundRule::edge_count;
};

/// Degree-2 vertices removed in order, then `base` fires on what is left.
struct PeelChainReason {
  std::vector<PeelStep> removed;
  EdgeBoundReason base;
};

/// A quasi-injective (not generic) refutation: S collapsed to one point, one
/// component of G - S reflected through it.
struct SeparatorReason {
  std::vector<Vertex> separator;
  std::vector<Vertex> component;
  Witness witness;
};

struct NumericReason {
  Witness witness;
  int restarts_used = 0;
  int dim = 0;
};

using RefutationReason = std::variant<EdgeBoundReason, PeelChainReason, SeparatorReason, NumericReason>;

/// Checks a reason against g from scratch. Witness-carrying reasons also
/// require the witness graph to equal g.
bool verify_reason(const Graph& g, const RefutationReason& reason);

/// |V| >= 6 with |E| < 1.5|V|, or minimum degree <= 1 with |V| >= 3.
std::optional<EdgeBoundReason> edge_bound_refute(const Graph& g);

struct PeelOptions {
  /// When false only the four-vertex and minimum-degree base cases are used,
  /// which replays the inductive base argument without assuming the bound.
  bool use_edge_count = true;
};

/// Removes degree-2 vertices one at a time (lowest index first) and checks
/// the base cases on every graph of the chain, starting with g itself.
std::optional<PeelChainReason> peel_refute(const Graph& g, const PeelOptions& options = {});

/// Requires an independent vertex separator S; throws Error otherwise.
SeparatorReason separator_witness(const Graph& g, const std::vector<Vertex>& s, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Numeric flex search

struct FlexConfig {
  std::vector<int> dims{2, 3};
  int restarts = 100;
  std::uint64_t seed = 1;
  int max_iterations = 500;
  double residual_tol = 1e-12;  // on squared edge lengths
  double perturbation = 0.1;    // relative to the coordinate spread
  /// Gap, relative to the spread, that a candidate must keep after being
  /// projected back onto the equivalence set. Near a congruent copy the
  /// length map is degenerate, so small gaps there are not trustworthy.
  double accept_gap = 1e-3;
};

struct FlexResult {
  Witness witness;
  int restarts_used = 0;
  int dim = 0;
};

/// Damped Gauss-Newton (Levenberg-Marquardt) on r_uv = |q(u)-q(v)|^2 - |p(u)-p(v)|^2
/// from perturbed copies of the line realization. Returns the first verified
/// witness in (dim, restart) order. nullopt proves nothing.
std::optional<FlexResult> flex_search(const Framework& f, const FlexConfig& config = {});

// ---------------------------------------------------------------------------
// Degree-2 extension of witnesses

enum class ExtensionBranch { beta_at_least_alpha, beta_below_alpha, beta_zero_research };

struct Extension {
  Witness witness;
  ExtensionBranch branch;
};

/// Extends w by a new vertex (index n) adjacent to x and y. The old vertices
/// keep their coordinates; the alt realization gains one zero axis only when
/// a new direction is needed and none is available.
Extension extend_witness_deg2(const Witness& w, Vertex x, Vertex y, std::uint64_t seed,
                              const FlexConfig& fallback = {});

const char* to_string(BoundRule rule);
const char* to_string(ExtensionBranch branch);

}  // namespace linerig
