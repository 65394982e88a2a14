// Canonical labeling for small graphs: colour refinement plus exhaustive
// individualization of the first non-singleton cell. No automorphism pruning,
// so highly symmetric inputs cost up to n! leaves; fine for n <= 10 or so.

#include <algorithm>
#include <map>
#include <set>

#include "linerig/graph.hpp"

namespace linerig {

namespace {

using Colors = std::vector<int>;

// Iterated 1-dimensional Weisfeiler-Leman refinement. The new colour ids are
// ranks of signatures, so they do not depend on the input labeling.
void refine(const Graph& g, Colors& colors) {
  const int n = g.num_vertices();
  int classes = static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = colors[v];
      for (Vertex w : g.neighbors(v)) sig[v].second.push_back(colors[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::map<std::pair<int, std::vector<int>>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [key, id] : rank) id = next++;
    for (Vertex v = 0; v < n; ++v) colors[v] = rank[sig[v]];
    if (next == classes) return;
    classes = next;
  }
}

std::vector<std::uint64_t> code_for(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.num_vertices();
  std::vector<std::uint64_t> code(1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
  code[0] = static_cast<std::uint64_t>(n);
  std::size_t bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (g.has_edge(order[i], order[j])) code[1 + bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
  return code;
}

struct Best {
  std::vector<std::uint64_t> code;
  std::vector<Vertex> order;
};

void search(const Graph& g, Colors colors, Best& best) {
  refine(g, colors);
  const int n = g.num_vertices();
  std::map<int, std::vector<Vertex>> cells;
  for (Vertex v = 0; v < n; ++v) cells[colors[v]].push_back(v);
  auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.second.size() > 1; });
  if (target == cells.end()) {
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[colors[v]] = v;
    auto code = code_for(g, order);
    if (best.order.empty() || code > best.code) {
      best.code = std::move(code);
      best.order = std::move(order);
    }
    return;
  }
  const int cell = target->first;
  for (Vertex v : target->second) {
    Colors next(n);
    for (Vertex u = 0; u < n; ++u) next[u] = 2 * colors[u] + (colors[u] == cell && u != v ? 1 : 0);
    search(g, std::move(next), best);
  }
}

Best canonical(const Graph& g) {
  Best best;
  if (g.num_vertices() == 0) {
    best.code = {0};
    return best;
  }
  search(g, Colors(g.num_vertices(), 0), best);
  return best;
}

}  // namespace

std::vector<std::uint64_t> canonical_code(const Graph& g) { return canonical(g).code; }

std::vector<Vertex> canonical_order(const Graph& g) { return canonical(g).order; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace linerig
