#include "linerig/certificate.hpp"

#include <algorithm>
#include <set>

#include "linerig/error.hpp"

namespace linerig {

namespace {

std::vector<Vertex> sorted_union(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

CertNodePtr node(CertRule rule, std::vector<Vertex> covered) {
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  return std::make_shared<const CertNode>(CertNode{std::move(rule), std::move(covered)});
}

void require_child(const CertNodePtr& child) {
  if (!child) throw Error("certificate: null child node");
}

}  // namespace

CertNodePtr make_edge_base(Vertex u, Vertex v) { return node(rule::EdgeBase{u, v}, {u, v}); }

CertNodePtr make_stretched_cycle(std::vector<Vertex> cycle) {
  std::vector<Vertex> covered = cycle;
  return node(rule::StretchedCycle{std::move(cycle)}, std::move(covered));
}

CertNodePtr make_deg2ext(CertNodePtr child, Vertex w, Vertex x, Vertex y) {
  require_child(child);
  auto covered = child->covered;
  covered.push_back(w);
  return node(rule::Deg2Ext{std::move(child), w, x, y}, std::move(covered));
}

CertNodePtr make_attach(CertNodePtr left, CertNodePtr right) {
  require_child(left);
  require_child(right);
  auto covered = sorted_union(left->covered, right->covered);
  return node(rule::Attach{std::move(left), std::move(right)}, std::move(covered));
}

CertNodePtr make_join(CertNodePtr left, CertNodePtr right, std::vector<std::pair<Vertex, Vertex>> pairs) {
  require_child(left);
  require_child(right);
  auto covered = sorted_union(left->covered, right->covered);
  return node(rule::Join{std::move(left), std::move(right), std::move(pairs)}, std::move(covered));
}

CertNodePtr make_supergraph(CertNodePtr child) {
  require_child(child);
  auto covered = child->covered;
  return node(rule::Supergraph{std::move(child)}, std::move(covered));
}

Certificate make_certificate(CertMode mode, CertNodePtr root) {
  require_child(root);
  auto covered = root->covered;
  return Certificate{mode, std::move(root), std::move(covered)};
}

// ---------------------------------------------------------------------------
// Verification

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

class Replay {
 public:
  Replay(const Graph& g, const Realization* p, CertMode mode) : g_(g), p_(p), mode_(mode) {}

  // Returns the covered set recomputed from the rule data; sets failure_ on the
  // first violated precondition (the replay continues so bookkeeping is still checked).
  std::vector<Vertex> run(const CertNodePtr& node) {
    if (!node) throw Error("certificate: null node");
    return std::visit(Overloaded{
                          [&](const rule::EdgeBase& r) { return edge_base(r); },
                          [&](const rule::StretchedCycle& r) { return stretched(r); },
                          [&](const rule::Deg2Ext& r) { return deg2ext(r); },
                          [&](const rule::Attach& r) { return attach(r); },
                          [&](const rule::Join& r) { return join(r); },
                          [&](const rule::Supergraph& r) { return supergraph(r); },
                      },
                      node->rule);
  }

  const std::string& failure() const { return failure_; }

 private:
  void fail(const std::string& msg) {
    if (failure_.empty()) failure_ = msg;
  }

  bool valid(Vertex v) const { return v >= 0 && v < g_.num_vertices(); }

  bool distinct(Vertex a, Vertex b) const {
    return mode_ == CertMode::generic || !p_->coincident(a, b);
  }

  static bool contains(const std::vector<Vertex>& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
  }

  std::vector<Vertex> edge_base(const rule::EdgeBase& r) {
    if (!valid(r.u) || !valid(r.v)) throw Error("certificate: edge rule references unknown vertex");
    const std::string tag = "edge(" + std::to_string(r.u) + "," + std::to_string(r.v) + ")";
    if (!g_.has_edge(r.u, r.v)) fail(tag + ": not an edge of the graph");
    else if (!distinct(r.u, r.v)) fail(tag + ": endpoints coincide");
    auto out = std::vector<Vertex>{std::min(r.u, r.v), std::max(r.u, r.v)};
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Vertex> stretched(const rule::StretchedCycle& r) {
    for (Vertex v : r.cycle)
      if (!valid(v)) throw Error("certificate: stretched cycle references unknown vertex");
    if (mode_ != CertMode::realization) {
      fail("stretched_cycle: only valid in realization mode");
    } else if (!is_stretched_cycle(Framework(g_, *p_), r.cycle)) {
      fail("stretched_cycle: not a stretched cycle of the framework");
    }
    auto out = r.cycle;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Vertex> deg2ext(const rule::Deg2Ext& r) {
    auto covered = run(r.child);
    if (!valid(r.w) || !valid(r.x) || !valid(r.y)) throw Error("certificate: deg2ext references unknown vertex");
    const std::string tag = "deg2ext(w=" + std::to_string(r.w) + ")";
    if (r.x == r.y) fail(tag + ": x and y coincide");
    else if (!contains(covered, r.x) || !contains(covered, r.y)) fail(tag + ": child does not cover x and y");
    else if (contains(covered, r.w)) fail(tag + ": w already covered");
    else if (!g_.has_edge(r.w, r.x) || !g_.has_edge(r.w, r.y)) fail(tag + ": missing edge wx or wy");
    else if (!distinct(r.x, r.y)) fail(tag + ": p(x) = p(y)");
    covered.insert(std::lower_bound(covered.begin(), covered.end(), r.w), r.w);
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    return covered;
  }

  std::vector<Vertex> attach(const rule::Attach& r) {
    auto left = run(r.left);
    auto right = run(r.right);
    std::vector<Vertex> shared;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(shared));
    if (shared.size() < 2) {
      fail("attach: pieces share fewer than two vertices");
    } else if (mode_ == CertMode::realization) {
      bool ok = false;
      for (std::size_t i = 1; i < shared.size() && !ok; ++i) ok = distinct(shared[0], shared[i]);
      if (!ok) fail("attach: shared vertices all have the same coordinate");
    }
    return sorted_union(left, right);
  }

  std::vector<Vertex> join(const rule::Join& r) {
    auto left = run(r.left);
    auto right = run(r.right);
    std::vector<Vertex> shared;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(shared));
    std::set<Vertex> endpoints;
    bool endpoints_ok = true, edges_ok = true, sides_ok = true;
    for (const auto& [a, b] : r.pairs) {
      if (!valid(a) || !valid(b)) throw Error("certificate: join references unknown vertex");
      endpoints_ok = endpoints.insert(a).second && endpoints.insert(b).second && endpoints_ok;
      edges_ok = edges_ok && g_.has_edge(a, b);
      sides_ok = sides_ok && contains(left, a) && contains(right, b);
    }
    if (mode_ != CertMode::generic) fail("join: only valid in generic mode");
    else if (!shared.empty()) fail("join: pieces are not vertex-disjoint");
    else if (r.pairs.size() < 4) fail("join: fewer than four connecting edges");
    else if (!sides_ok) fail("join: connecting edge does not run between the two pieces");
    else if (!edges_ok) fail("join: connecting pair is not an edge");
    else if (!endpoints_ok) fail("join: connecting edges are not pairwise disjoint");
    return sorted_union(left, right);
  }

  std::vector<Vertex> supergraph(const rule::Supergraph& r) {
    auto covered = run(r.child);
    if (static_cast<int>(covered.size()) != g_.num_vertices()) fail("supergraph: child does not span every vertex");
    return covered;
  }

  const Graph& g_;
  const Realization* p_;
  CertMode mode_;
  std::string failure_;
};

CertificateCheck replay(const Certificate& cert, const Graph& g, const Realization* p) {
  Replay r(g, p, cert.mode);
  const auto covered = r.run(cert.root);
  if (covered != cert.covered) throw Error("certificate: recorded covered set does not match the derivation");
  CertificateCheck out;
  out.failure = r.failure();
  out.ok = out.failure.empty();
  out.full = static_cast<int>(covered.size()) == g.num_vertices();
  return out;
}

}  // namespace

CertificateCheck verify_certificate(const Certificate& cert, const Framework& f) {
  if (cert.mode == CertMode::generic) return replay(cert, f.graph, nullptr);
  if (f.dim() != 1) throw Error("certificate: realization mode requires a 1-dimensional framework");
  return replay(cert, f.graph, &f.realization);
}

CertificateCheck verify_certificate(const Certificate& cert, const Graph& g) {
  if (cert.mode == CertMode::realization)
    throw Error("certificate: realization-mode certificate needs a framework to verify against");
  return replay(cert, g, nullptr);
}

// ---------------------------------------------------------------------------
// Search

namespace {

class Closure {
 public:
  Closure(const Graph& g, const Realization* p, CertMode mode, const SearchConfig& config)
      : g_(g), p_(p), mode_(mode), config_(config), n_(g.num_vertices()) {}

  std::optional<Certificate> run(const std::vector<CertNodePtr>& seeds) {
    for (const auto& seed : seeds) {
      if (subsumed(mask_of(seed->covered))) continue;
      add(grow(seed));
      if (auto done = finished()) return done;
    }
    bool changed = true;
    while (changed && static_cast<int>(seen_.size()) < config_.piece_cap) {
      changed = try_attach() || (mode_ == CertMode::generic && try_join());
      if (auto done = finished()) return done;
    }
    return std::nullopt;
  }

 private:
  using Mask = std::vector<bool>;

  struct Piece {
    CertNodePtr node;
    Mask in;
  };

  Mask mask_of(const std::vector<Vertex>& vs) const {
    Mask m(n_, false);
    for (Vertex v : vs) m[v] = true;
    return m;
  }

  static bool subset(const Mask& a, const Mask& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] && !b[i]) return false;
    return true;
  }

  bool subsumed(const Mask& m) const {
    return std::any_of(maximal_.begin(), maximal_.end(), [&](const Piece& p) { return subset(m, p.in); });
  }

  bool distinct(Vertex a, Vertex b) const {
    return mode_ == CertMode::generic || !p_->coincident(a, b);
  }

  // Degree-2 extensions until no outside vertex has two usable inside neighbours.
  Piece grow(CertNodePtr start) const {
    Piece piece;
    piece.in = mask_of(start->covered);
    piece.node = std::move(start);
    bool extended = true;
    while (extended) {
      extended = false;
      for (Vertex w = 0; w < n_ && !extended; ++w) {
        if (piece.in[w]) continue;
        std::vector<Vertex> inside;
        for (Vertex x : g_.neighbors(w))
          if (piece.in[x]) inside.push_back(x);
        for (std::size_t i = 0; i < inside.size() && !extended; ++i)
          for (std::size_t j = i + 1; j < inside.size() && !extended; ++j)
            if (distinct(inside[i], inside[j])) {
              piece.node = make_deg2ext(piece.node, w, inside[i], inside[j]);
              piece.in[w] = true;
              extended = true;
            }
      }
    }
    return piece;
  }

  void add(Piece piece) {
    if (!seen_.insert(piece.in).second) return;
    if (mode_ == CertMode::generic) history_.push_back(piece);
    if (subsumed(piece.in)) return;
    std::erase_if(maximal_, [&](const Piece& p) { return subset(p.in, piece.in); });
    maximal_.push_back(std::move(piece));
  }

  bool attachable(const Piece& a, const Piece& b) const {
    std::vector<Vertex> shared;
    for (Vertex v = 0; v < n_; ++v)
      if (a.in[v] && b.in[v]) shared.push_back(v);
    if (shared.size() < 2) return false;
    for (std::size_t i = 1; i < shared.size(); ++i)
      if (distinct(shared[0], shared[i])) return true;
    return false;
  }

  bool try_attach() {
    for (std::size_t i = 0; i < maximal_.size(); ++i)
      for (std::size_t j = i + 1; j < maximal_.size(); ++j)
        if (attachable(maximal_[i], maximal_[j])) {
          add(grow(make_attach(maximal_[i].node, maximal_[j].node)));
          return true;
        }
    return false;
  }

  // Maximum matching on the edges running from a to b (Kuhn's algorithm).
  std::vector<std::pair<Vertex, Vertex>> matching(const Mask& a, const Mask& b) const {
    std::vector<int> match_b(n_, -1);
    auto augment = [&](auto&& self, Vertex u, std::vector<bool>& visited) -> bool {
      for (Vertex v : g_.neighbors(u)) {
        if (!b[v] || visited[v]) continue;
        visited[v] = true;
        if (match_b[v] < 0 || self(self, match_b[v], visited)) {
          match_b[v] = u;
          return true;
        }
      }
      return false;
    };
    for (Vertex u = 0; u < n_; ++u) {
      if (!a[u]) continue;
      std::vector<bool> visited(n_, false);
      augment(augment, u, visited);
    }
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex v = 0; v < n_; ++v)
      if (match_b[v] >= 0) out.emplace_back(match_b[v], v);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool try_join() {
    for (std::size_t i = 0; i < history_.size(); ++i) {
      for (std::size_t j = i + 1; j < history_.size(); ++j) {
        const auto& a = history_[i];
        const auto& b = history_[j];
        Mask both(n_, false);
        bool disjoint = true;
        for (Vertex v = 0; v < n_ && disjoint; ++v) {
          disjoint = !(a.in[v] && b.in[v]);
          both[v] = a.in[v] || b.in[v];
        }
        if (!disjoint || subsumed(both)) continue;
        auto pairs = matching(a.in, b.in);
        if (pairs.size() < 4) continue;
        add(grow(make_join(a.node, b.node, std::move(pairs))));
        return true;
      }
    }
    return false;
  }

  std::optional<Certificate> finished() const {
    for (const auto& p : maximal_)
      if (std::all_of(p.in.begin(), p.in.end(), [](bool b) { return b; }))
        return make_certificate(mode_, make_supergraph(p.node));
    return std::nullopt;
  }

  const Graph& g_;
  const Realization* p_;
  CertMode mode_;
  SearchConfig config_;
  int n_;
  std::vector<Piece> maximal_;
  std::vector<Piece> history_;
  std::set<Mask> seen_;
};

}  // namespace

std::optional<Certificate> search_certificate_realization(const Framework& f, const SearchConfig& config) {
  if (f.dim() != 1) throw Error("certificate search: framework must be 1-dimensional");
  if (!is_injective(f.realization)) throw Error("certificate search: realization must be injective");
  if (f.graph.num_vertices() < 2) return std::nullopt;

  std::vector<CertNodePtr> seeds;
  std::set<std::vector<Vertex>> cycles_seen;
  auto add_cycle = [&](std::vector<Vertex> c) {
    auto key = c;
    std::sort(key.begin(), key.end());
    if (cycles_seen.insert(key).second) seeds.push_back(make_stretched_cycle(std::move(c)));
  };
  for (auto& c : shortcut_stretched_cycles(f)) add_cycle(std::move(c));
  for (auto& c : enumerate_stretched_cycles(f, config.cycle_seed_cap)) add_cycle(std::move(c));
  for (const auto& [u, v] : f.graph.edges()) seeds.push_back(make_edge_base(u, v));

  Closure closure(f.graph, &f.realization, CertMode::realization, config);
  return closure.run(seeds);
}

std::optional<Certificate> search_certificate_generic(const Graph& g, const SearchConfig& config) {
  if (g.num_vertices() < 2) return std::nullopt;
  std::vector<CertNodePtr> seeds;
  for (const auto& [u, v] : g.edges()) seeds.push_back(make_edge_base(u, v));
  Closure closure(g, nullptr, CertMode::generic, config);
  return closure.run(seeds);
}

Conjecture1Report conjecture1_necessary_checks(const Graph& g, bool ur_claimed) {
  if (!is_connected(g)) throw Error("conjecture check: graph must be connected");
  Conjecture1Report report;
  report.has_triangle = has_triangle(g);
  report.girth = girth(g);
  report.closure_complete = is_complete(k4_completion_closure(g));
  auto search = find_independent_edge_cut(g);
  report.cut_search_exhaustive = search.exhaustive;
  report.no_independent_edge_cut = !search.cut.has_value();
  report.cut = std::move(search.cut);
  report.ur_claimed = ur_claimed;
  report.counterexample = ur_claimed && !report.all_pass();
  return report;
}

}  // namespace linerig
