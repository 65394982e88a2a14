#include "linerig/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "linerig/error.hpp"

namespace linerig {

namespace {
const std::string kEmptyLabel;
}

Graph::Graph(int n) {
  if (n < 0) throw Error("graph: negative vertex count");
  adj_.resize(n);
  labels_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= num_vertices())
    throw Error("graph: vertex " + std::to_string(v) + " out of range");
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error("graph: self-loop at vertex " + std::to_string(u));
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++num_edges_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it == au.end() || *it != v) return false;
  au.erase(it);
  auto& av = adj_[v];
  av.erase(std::lower_bound(av.begin(), av.end(), u));
  --num_edges_;
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return false;
  const auto& au = adj_[u];
  return std::binary_search(au.begin(), au.end(), v);
}

int Graph::min_degree() const {
  int best = 0;
  for (int v = 0; v < num_vertices(); ++v) best = v == 0 ? degree(v) : std::min(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::set_label(Vertex v, std::string label) {
  check_vertex(v);
  labels_[v] = std::move(label);
}

const std::string& Graph::label(Vertex v) const {
  check_vertex(v);
  return labels_.empty() ? kEmptyLabel : labels_[v];
}

bool Graph::has_labels() const {
  return std::any_of(labels_.begin(), labels_.end(), [](const auto& s) { return !s.empty(); });
}

std::optional<Vertex> Graph::find_label(std::string_view label) const {
  for (Vertex v = 0; v < num_vertices(); ++v)
    if (labels_[v] == label) return v;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                      const std::vector<bool>& removed) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0 || removed[s]) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] < 0 && !removed[w]) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  return connected_components(g, std::vector<bool>(g.num_vertices(), false));
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_complete(const Graph& g) {
  const long n = g.num_vertices();
  return g.num_edges() == n * (n - 1) / 2;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> pos(g.num_vertices(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos.at(keep[i]) = static_cast<int>(i);
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out.set_label(static_cast<Vertex>(i), g.label(keep[i]));
    for (Vertex w : g.neighbors(keep[i]))
      if (pos[w] > static_cast<int>(i)) out.add_edge(static_cast<Vertex>(i), pos[w]);
  }
  return out;
}

bool has_triangle(const Graph& g) {
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v))
        if (w > v && g.has_edge(u, w)) return true;
    }
  return false;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.num_vertices();
  int best = -1;
  for (Vertex s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (parent[v] != w) {
          const int len = dist[v] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

Graph k4_completion_closure(const Graph& g) {
  Graph out = g;
  const int n = out.num_vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (out.has_edge(u, v)) continue;
        std::vector<Vertex> common;
        std::set_intersection(out.neighbors(u).begin(), out.neighbors(u).end(),
                              out.neighbors(v).begin(), out.neighbors(v).end(),
                              std::back_inserter(common));
        bool found = false;
        for (std::size_t i = 0; i < common.size() && !found; ++i)
          for (std::size_t j = i + 1; j < common.size() && !found; ++j)
            found = out.has_edge(common[i], common[j]);
        if (found) {
          out.add_edge(u, v);
          changed = true;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

bool is_independent_edge_cut(const Graph& g, std::span<const Vertex> side) {
  const int n = g.num_vertices();
  std::vector<bool> in(n, false);
  for (Vertex v : side) in.at(v) = true;
  const auto count = std::count(in.begin(), in.end(), true);
  if (count == 0 || count == n) return false;
  std::vector<int> crossings(n, 0);
  for (const auto& [u, v] : g.edges()) {
    if (in[u] != in[v] && (++crossings[u] > 1 || ++crossings[v] > 1)) return false;
  }
  return true;
}

namespace {

// Branch-and-propagate search for a matching cut. side[v] is -1 (open), 0 or 1.
class MatchingCutSearch {
 public:
  MatchingCutSearch(const Graph& g, std::int64_t budget) : g_(g), budget_(budget) {
    // Branch in BFS order from vertex 0 so propagation has assigned neighbours to work with.
    const int n = g.num_vertices();
    std::vector<bool> seen(n, false);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      order_.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
    }
  }

  std::optional<std::vector<int>> run() {
    std::vector<int> side(g_.num_vertices(), -1);
    side[0] = 0;
    if (!propagate(side)) return std::nullopt;
    return branch(side);
  }

  bool exhausted() const { return exhausted_; }

 private:
  bool propagate(std::vector<int>& side) const {
    const int n = g_.num_vertices();
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v = 0; v < n; ++v) {
        if (side[v] >= 0) {
          int crossing = 0;
          for (Vertex w : g_.neighbors(v))
            if (side[w] >= 0 && side[w] != side[v]) ++crossing;
          if (crossing > 1) return false;
          if (crossing == 1) {
            for (Vertex w : g_.neighbors(v))
              if (side[w] < 0) {
                side[w] = side[v];
                changed = true;
              }
          }
        } else {
          int count[2] = {0, 0};
          for (Vertex w : g_.neighbors(v))
            if (side[w] >= 0) ++count[side[w]];
          if (count[0] >= 2 && count[1] >= 2) return false;
          if (count[0] >= 2 || count[1] >= 2) {
            side[v] = count[0] >= 2 ? 0 : 1;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  std::optional<std::vector<int>> branch(std::vector<int>& side) {
    if (--budget_ < 0) {
      exhausted_ = true;
      return std::nullopt;
    }
    auto open = std::find_if(order_.begin(), order_.end(), [&](Vertex v) { return side[v] < 0; });
    if (open == order_.end()) {
      if (std::find(side.begin(), side.end(), 1) == side.end()) return std::nullopt;
      return side;
    }
    for (int s : {1, 0}) {
      std::vector<int> next = side;
      next[*open] = s;
      if (!propagate(next)) continue;
      if (auto found = branch(next)) return found;
      if (exhausted_) return std::nullopt;
    }
    return std::nullopt;
  }

  const Graph& g_;
  std::int64_t budget_;
  bool exhausted_ = false;
  std::vector<Vertex> order_;
};

}  // namespace

EdgeCutSearch find_independent_edge_cut(const Graph& g, std::int64_t node_budget) {
  EdgeCutSearch result;
  if (g.num_vertices() < 2) return result;
  auto comps = connected_components(g);
  if (comps.size() > 1) {
    result.cut = EdgeCut{comps.front(), {}};
    return result;
  }
  MatchingCutSearch search(g, node_budget);
  auto side = search.run();
  result.exhaustive = !search.exhausted();
  if (!side) return result;
  // Report the side containing vertex 0 as X.
  EdgeCut cut;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if ((*side)[v] == 0) cut.side.push_back(v);
  for (const auto& [u, v] : g.edges())
    if ((*side)[u] != (*side)[v]) cut.cut_edges.emplace_back(u, v);
  result.cut = std::move(cut);
  return result;
}

bool is_independent_separator(const Graph& g, std::span<const Vertex> s) {
  std::vector<bool> removed(g.num_vertices(), false);
  for (Vertex v : s) removed.at(v) = true;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (removed[w]) return false;
  return connected_components(g, removed).size() >= 2;
}

SeparatorSearch find_independent_vertex_separator(const Graph& g, int exhaustive_limit,
                                                  std::int64_t budget) {
  const int n = g.num_vertices();
  SeparatorSearch result;
  const bool bounded = n > exhaustive_limit;
  std::int64_t examined = 0;
  std::vector<Vertex> current;
  std::vector<bool> removed(n, false);

  // Enumerate stable sets of exactly `size` vertices in lexicographic order.
  auto search = [&](auto&& self, int size, Vertex from) -> bool {
    if (static_cast<int>(current.size()) == size) {
      if (bounded && ++examined > budget) {
        result.exhaustive = false;
        return true;  // stop
      }
      if (connected_components(g, removed).size() >= 2) {
        result.separator = current;
        return true;
      }
      return false;
    }
    for (Vertex v = from; v < n; ++v) {
      if (n - v < size - static_cast<int>(current.size())) break;
      bool independent = true;
      for (Vertex w : g.neighbors(v))
        if (removed[w]) {
          independent = false;
          break;
        }
      if (!independent) continue;
      current.push_back(v);
      removed[v] = true;
      const bool stop = self(self, size, v + 1);
      removed[v] = false;
      current.pop_back();
      if (stop) return true;
    }
    return false;
  };

  for (int size = 0; size <= n - 2; ++size) {
    if (search(search, size, 0)) break;
  }
  if (result.separator) result.exhaustive = true;
  return result;
}

// ---------------------------------------------------------------------------

Graph edge_reduced_attachment(const Graph& g1, const Graph& g2,
                              std::span<const std::pair<Vertex, Vertex>> identify) {
  const int n1 = g1.num_vertices();
  const int n2 = g2.num_vertices();
  std::vector<int> map2(n2, -1);
  std::set<Vertex> used1;
  for (const auto& [a, b] : identify) {
    if (a < 0 || a >= n1 || b < 0 || b >= n2) throw Error("attach: identified vertex out of range");
    if (map2[b] >= 0 || !used1.insert(a).second)
      throw Error("attach: identification is not injective");
    map2[b] = a;
  }
  const int shared = static_cast<int>(identify.size());
  if (shared == 0 || shared == n1 || shared == n2)
    throw Error("attach: intersection and both differences must be nonempty");

  int next = n1;
  for (Vertex b = 0; b < n2; ++b)
    if (map2[b] < 0) map2[b] = next++;

  Graph out(next);
  for (Vertex v = 0; v < n1; ++v) out.set_label(v, g1.label(v));
  for (Vertex b = 0; b < n2; ++b)
    if (map2[b] >= n1) out.set_label(map2[b], g2.label(b));
  for (const auto& [u, v] : g1.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : g2.edges()) {
    const bool spanned = map2[u] < n1 && map2[v] < n1;
    if (!spanned) out.add_edge(map2[u], map2[v]);
  }
  return out;
}

JoinedGraph join(const Graph& g, const Graph& h, std::span<const std::pair<Vertex, Vertex>> pairs) {
  const int ng = g.num_vertices();
  std::set<Vertex> seen_g, seen_h;
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= ng || b < 0 || b >= h.num_vertices())
      throw Error("join: pair endpoint out of range");
    if (!seen_g.insert(a).second || !seen_h.insert(b).second)
      throw Error("join: repeated endpoint in pairs");
  }
  JoinedGraph out{Graph(ng + h.num_vertices()), {}};
  for (Vertex v = 0; v < ng; ++v) out.graph.set_label(v, g.label(v));
  for (Vertex v = 0; v < h.num_vertices(); ++v) out.graph.set_label(ng + v, h.label(v));
  for (const auto& [u, v] : g.edges()) out.graph.add_edge(u, v);
  for (const auto& [u, v] : h.edges()) out.graph.add_edge(ng + u, ng + v);
  for (const auto& [a, b] : pairs) {
    out.graph.add_edge(a, ng + b);
    out.matching.push_back(make_edge(a, ng + b));
  }
  return out;
}

PeelResult degree2_peel(const Graph& g) {
  Graph work = g;
  std::vector<bool> gone(g.num_vertices(), false);
  PeelResult result;
  bool progress = true;
  while (progress) {
    progress = false;
    for (Vertex v = 0; v < work.num_vertices(); ++v) {
      if (gone[v] || work.degree(v) != 2) continue;
      const Vertex x = work.neighbors(v)[0];
      const Vertex y = work.neighbors(v)[1];
      result.steps.push_back({v, x, y});
      work.remove_edge(v, x);
      work.remove_edge(v, y);
      gone[v] = true;
      progress = true;
      break;
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!gone[v]) result.residual_ids.push_back(v);
  result.residual = induced_subgraph(g, result.residual_ids);
  return result;
}

}  // namespace linerig
