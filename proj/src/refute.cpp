#include "linerig/refute.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "linerig/error.hpp"

namespace linerig {

const char* to_string(BoundRule rule) {
  switch (rule) {
    case BoundRule::edge_count: return "edge_count";
    case BoundRule::min_degree: return "min_degree";
    case BoundRule::four_vertex: return "four_vertex";
  }
  return "?";
}

const char* to_string(ExtensionBranch branch) {
  switch (branch) {
    case ExtensionBranch::beta_at_least_alpha: return "beta_at_least_alpha";
    case ExtensionBranch::beta_below_alpha: return "beta_below_alpha";
    case ExtensionBranch::beta_zero_research: return "beta_zero_research";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Witnesses

Witness make_witness(Framework base, Realization alt) {
  if (base.dim() != 1) throw Error("witness: base framework must be 1-dimensional");
  Framework other(base.graph, alt);
  Witness w;
  w.residual = max_edge_discrepancy(base, other).value;
  const auto gap = max_pair_discrepancy(base, other);
  w.gap = gap.value;
  w.nonlinked_pair = gap.pair;
  w.base = std::move(base);
  w.alt = std::move(alt);
  return w;
}

WitnessCheck verify_witness(const Witness& w, double equiv_tol, double gap_threshold) {
  WitnessCheck out;
  auto fail = [&](std::string msg) {
    out.failure = std::move(msg);
    return out;
  };
  if (w.base.dim() != 1) return fail("base framework is not 1-dimensional");
  if (w.alt.num_points() != w.base.graph.num_vertices()) return fail("alt realization has the wrong number of points");
  const auto [u, v] = w.nonlinked_pair;
  const int n = w.base.graph.num_vertices();
  if (u < 0 || v < 0 || u >= n || v >= n || u == v) return fail("nonlinked pair is not a vertex pair");

  const Framework other(w.base.graph, w.alt);
  if (w.base.realization.is_exact() && w.alt.is_exact()) {
    if (!are_equivalent(w.base, other, 0.0)) return fail("exact edge lengths differ");
    if (w.base.realization.squared_distance_exact(u, v) == w.alt.squared_distance_exact(u, v))
      return fail("nonlinked pair keeps its distance");
    out.ok = true;
    return out;
  }
  const double residual = max_edge_discrepancy(w.base, other).value;
  if (residual > equiv_tol) return fail("edge-length residual " + std::to_string(residual) + " above tolerance");
  const double gap = std::abs(w.base.realization.distance(u, v) - w.alt.distance(u, v));
  if (gap < gap_threshold) return fail("gap at nonlinked pair below threshold");
  out.ok = true;
  return out;
}

// ---------------------------------------------------------------------------
// Combinatorial refuters

namespace {

std::optional<EdgeBoundReason> base_case(const Graph& g, bool use_edge_count) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  if (use_edge_count && n >= 6 && 2 * m < 3 * n) return EdgeBoundReason{n, m, BoundRule::edge_count};
  if (n == 4 && m <= 4) return EdgeBoundReason{n, m, BoundRule::four_vertex};
  if (n >= 3 && g.min_degree() <= 1) return EdgeBoundReason{n, m, BoundRule::min_degree};
  return std::nullopt;
}

bool bound_holds(const Graph& g, const EdgeBoundReason& r) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  if (r.vertices != n || r.edges != m) return false;
  switch (r.rule) {
    case BoundRule::edge_count: return n >= 6 && 2 * m < 3 * n;
    case BoundRule::four_vertex: return n == 4 && m <= 4;
    case BoundRule::min_degree: return n >= 3 && g.min_degree() <= 1;
  }
  return false;
}

Graph alive_subgraph(const Graph& g, const std::vector<bool>& alive) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (alive[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

}  // namespace

std::optional<EdgeBoundReason> edge_bound_refute(const Graph& g) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  if (n >= 6 && 2 * m < 3 * n) return EdgeBoundReason{n, m, BoundRule::edge_count};
  if (n >= 3 && g.min_degree() <= 1) return EdgeBoundReason{n, m, BoundRule::min_degree};
  return std::nullopt;
}

std::optional<PeelChainReason> peel_refute(const Graph& g, const PeelOptions& options) {
  std::vector<bool> alive(g.num_vertices(), true);
  Graph work = g;  // edges of removed vertices are deleted, indices stay original
  PeelChainReason chain;
  while (true) {
    if (auto base = base_case(alive_subgraph(g, alive), options.use_edge_count)) {
      chain.base = *base;
      return chain;
    }
    Vertex next = -1;
    for (Vertex v = 0; v < g.num_vertices() && next < 0; ++v)
      if (alive[v] && work.degree(v) == 2) next = v;
    if (next < 0) return std::nullopt;
    const Vertex x = work.neighbors(next)[0], y = work.neighbors(next)[1];
    chain.removed.push_back({next, x, y});
    work.remove_edge(next, x);
    work.remove_edge(next, y);
    alive[next] = false;
  }
}

bool verify_reason(const Graph& g, const RefutationReason& reason) {
  if (const auto* r = std::get_if<EdgeBoundReason>(&reason)) {
    return r->rule != BoundRule::four_vertex && bound_holds(g, *r);
  }
  if (const auto* r = std::get_if<PeelChainReason>(&reason)) {
    std::vector<bool> alive(g.num_vertices(), true);
    Graph work = g;
    for (const auto& step : r->removed) {
      if (step.vertex < 0 || step.vertex >= g.num_vertices() || !alive[step.vertex]) return false;
      const auto& nb = work.neighbors(step.vertex);
      if (nb.size() != 2 || make_edge(nb[0], nb[1]) != make_edge(step.x, step.y)) return false;
      work.remove_edge(step.vertex, step.x);
      work.remove_edge(step.vertex, step.y);
      alive[step.vertex] = false;
    }
    return bound_holds(alive_subgraph(g, alive), r->base);
  }
  if (const auto* r = std::get_if<SeparatorReason>(&reason)) {
    if (!(r->witness.base.graph == g) || !is_independent_separator(g, r->separator)) return false;
    if (!is_quasi_injective(r->witness.base)) return false;
    for (Vertex v : r->separator)
      if (!r->witness.base.realization.coincident(v, r->separator.front())) return false;
    return verify_witness(r->witness).ok;
  }
  const auto& numeric = std::get<NumericReason>(reason);
  return numeric.witness.base.graph == g && verify_witness(numeric.witness).ok;
}

// ---------------------------------------------------------------------------
// Separator witness

SeparatorReason separator_witness(const Graph& g, const std::vector<Vertex>& s, std::uint64_t seed) {
  if (!is_independent_separator(g, s)) throw Error("separator witness: S is not an independent vertex separator");
  const int n = g.num_vertices();
  std::vector<bool> in_s(n, false);
  for (Vertex v : s) in_s[v] = true;
  const auto comps = connected_components(g, in_s);
  const auto& component = comps.front();
  std::vector<bool> in_c(n, false);
  for (Vertex v : component) in_c[v] = true;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-(1L << 40), 1L << 40);
  const Integer den = Integer(1) << 20;
  const Rational centre = 0;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Rational> base(n), alt(n);
    std::set<long> used{0};
    for (Vertex v = 0; v < n; ++v) {
      if (in_s[v]) {
        base[v] = centre;
      } else {
        long k;
        do k = dist(rng);
        while (!used.insert(k).second);
        base[v] = Rational(Integer(k), den);
      }
      // x -> 2s - x on the chosen component
      alt[v] = in_c[v] ? Rational(2 * centre - base[v]) : base[v];
    }
    Witness w = make_witness(Framework(g, Realization::exact_line(base)), Realization::exact_line(alt));
    if (verify_witness(w, 0.0, 0.0).ok) return SeparatorReason{s, component, std::move(w)};
  }
  throw Error("separator witness: reflection stayed congruent after repeated resampling");
}

// ---------------------------------------------------------------------------
// Degree-2 extension of a witness

namespace {

std::vector<double> sub(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational to_rational(double x) { return Rational(x); }

}  // namespace

Extension extend_witness_deg2(const Witness& w, Vertex x, Vertex y, std::uint64_t seed,
                              const FlexConfig& fallback) {
  const int n = w.base.graph.num_vertices();
  if (x == y) throw Error("extend witness: x and y must be distinct");
  if (x < 0 || y < 0 || x >= n || y >= n) throw Error("extend witness: vertex out of range");
  if (auto check = verify_witness(w); !check.ok) throw Error("extend witness: input witness invalid: " + check.failure);

  const Realization& p = w.base.realization;
  const Realization& q = w.alt;
  const double px = p.value(x), py = p.value(y);
  const double alpha = std::abs(px - py);
  if (p.coincident(x, y)) throw Error("extend witness: p(x) = p(y)");
  const auto qx = q.point(x), qy = q.point(y);
  const double beta = std::sqrt(dot(sub(qy, qx), sub(qy, qx)));

  Graph g(n + 1);
  for (Vertex v = 0; v < n; ++v) g.set_label(v, w.base.graph.label(v));
  for (const auto& [a, b] : w.base.graph.edges()) g.add_edge(a, b);
  g.add_edge(n, x);
  g.add_edge(n, y);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto extended_base = [&](const Rational& r_exact, double r_float) {
    if (p.is_exact()) {
      auto flat = p.exact_data();
      flat.push_back(r_exact);
      return Realization::exact_line(std::move(flat));
    }
    auto flat = p.floating_data();
    flat.push_back(r_float);
    return Realization::floating_line(std::move(flat));
  };
  auto collides = [&](double r) {
    for (Vertex v = 0; v < n; ++v)
      if (std::abs(p.value(v) - r) <= 1e-9 * std::max(1.0, std::abs(r))) return true;
    return false;
  };

  double scale = 0.0;
  for (Vertex v = 0; v < n; ++v)
    for (int k = 0; k < q.dim(); ++k) scale = std::max(scale, std::abs(q.value(v, k)));
  scale = std::max({scale, std::abs(px), std::abs(py), 1.0});

  if (beta <= 1e-12 * scale) {
    // The continuous-motion argument is not constructive; search the extended graph afresh.
    for (int attempt = 0; attempt < 64; ++attempt) {
      const double r = std::min(px, py) + alpha * (unit(rng) * 3.0 - 1.0);
      if (collides(r)) continue;
      const Rational r_exact = to_rational(r);
      Framework base(g, extended_base(r_exact, r));
      FlexConfig config = fallback;
      config.seed = seed ^ 0x9e3779b97f4a7c15ULL;
      if (auto found = flex_search(base, config)) return {std::move(found->witness), ExtensionBranch::beta_zero_research};
      break;
    }
    throw Error("extend witness: beta = 0 and the fallback search found no witness");
  }

  const double lo = std::min(px, py), hi = std::max(px, py);
  ExtensionBranch branch;
  double r = 0.0;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 256) throw Error("extend witness: could not place the new point");
    if (beta >= alpha) {
      branch = ExtensionBranch::beta_at_least_alpha;
      // Outside [lo, hi]: |r-px| + |r-py| = alpha + 2t >= beta, ||r-px| - |r-py|| = alpha <= beta.
      const double t = (beta - alpha) / 2.0 + alpha * (0.25 + unit(rng));
      r = unit(rng) < 0.5 ? hi + t : lo - t;
    } else {
      branch = ExtensionBranch::beta_below_alpha;
      // Inside (lo, hi): sum is alpha > beta, difference 2|u| < beta.
      const double u = beta / 2.0 * (1.8 * unit(rng) - 0.9);
      r = (lo + hi) / 2.0 + u;
    }
    if (!collides(r)) break;
  }

  const Rational r_exact = to_rational(r);
  Realization base_real = extended_base(r_exact, r);
  const double d1 = std::abs(base_real.value(n) - px);
  const double d2 = std::abs(base_real.value(n) - py);

  // Two-circle intersection in the plane through q(x), q(y) and a third point.
  const auto axis = sub(qy, qx);
  std::vector<double> e1(axis.size());
  for (std::size_t i = 0; i < axis.size(); ++i) e1[i] = axis[i] / beta;
  const double a = (d1 * d1 - d2 * d2 + beta * beta) / (2.0 * beta);
  double h2 = d1 * d1 - a * a;
  if (h2 < -1e-9 * scale * scale) throw Error("extend witness: circles do not intersect (case arithmetic violated)");
  const double h = std::sqrt(std::max(h2, 0.0));

  Realization alt = q;
  std::vector<double> e2;
  double best = 1e-9 * scale;
  for (Vertex z = 0; z < n; ++z) {
    auto rel = sub(q.point(z), qx);
    const double along = dot(rel, e1);
    for (std::size_t i = 0; i < rel.size(); ++i) rel[i] -= along * e1[i];
    const double norm = std::sqrt(dot(rel, rel));
    if (norm > best) {
      best = norm;
      e2 = rel;
      for (double& c : e2) c /= norm;
    }
  }
  if (e2.empty() && h > 0.0) {
    alt = q.as_floating().padded(q.dim() + 1);
    e1.push_back(0.0);
    e2.assign(alt.dim(), 0.0);
    e2.back() = 1.0;
  }
  std::vector<double> s(alt.dim(), 0.0);
  for (int k = 0; k < alt.dim(); ++k) {
    const double base_k = k < q.dim() ? qx[k] : 0.0;
    s[k] = base_k + a * e1[k] + (e2.empty() ? 0.0 : h * e2[k]);
  }

  auto flat = alt.as_floating().floating_data();
  flat.insert(flat.end(), s.begin(), s.end());
  Realization alt_ext = Realization::floating(alt.dim(), std::move(flat));

  Witness out = make_witness(Framework(g, std::move(base_real)), std::move(alt_ext));
  if (auto check = verify_witness(out); !check.ok)
    throw Error("extend witness: constructed witness fails verification: " + check.failure);
  return {std::move(out), branch};
}

}  // namespace linerig
