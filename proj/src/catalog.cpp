#include "linerig/catalog.hpp"

#include <charconv>

#include "linerig/error.hpp"

namespace linerig {

namespace {

void require(bool ok, std::string_view family, std::string_view what) {
  if (!ok) throw Error("catalog: " + std::string(family) + ": " + std::string(what));
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 1, "complete", "need n >= 1");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_minus_edge(int n) {
  require(n >= 2, "complete_minus_edge", "need n >= 2");
  Graph g = complete_graph(n);
  g.remove_edge(0, 1);
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle", "need n >= 3");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  require(n >= 1, "path", "need n >= 1");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph burger_graph(int n) {
  require(n >= 1, "B_n", "need n >= 1");
  Graph g(2 * n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      g.add_edge(u, v);
      g.add_edge(n + u, n + v);
    }
    g.add_edge(u, n + u);
  }
  return g;
}

Graph grotzsch_graph() {
  Graph g(11);
  auto u = [](int i) { return 1 + (i + 5) % 5; };
  auto v = [](int i) { return 6 + (i + 5) % 5; };
  g.set_label(0, "w");
  for (int i = 0; i < 5; ++i) {
    g.set_label(u(i), "u" + std::to_string(i));
    g.set_label(v(i), "v" + std::to_string(i));
  }
  for (int i = 0; i < 5; ++i) {
    g.add_edge(v(i), v(i + 1));
    g.add_edge(u(i), v(i - 1));
    g.add_edge(u(i), v(i + 1));
    g.add_edge(0, u(i));
  }
  return g;
}

Graph augmented_grotzsch_graph() {
  const Graph base = grotzsch_graph();
  Graph g(16);
  for (Vertex x = 0; x < 11; ++x) g.set_label(x, base.label(x));
  for (const auto& [a, b] : base.edges()) g.add_edge(a, b);
  auto u = [](int i) { return 1 + i % 5; };
  auto v = [](int i) { return 6 + i % 5; };
  auto vp = [](int i) { return 11 + i % 5; };
  for (int i = 0; i < 5; ++i) g.set_label(vp(i), "v" + std::to_string(i) + "'");
  for (int i = 0; i < 5; ++i) {
    g.add_edge(vp(i), u(i + 1));
    g.add_edge(vp(i), v(i + 1));
    g.add_edge(vp(i), vp(i + 1));
  }
  return g;
}

Graph prism_graph() {
  Graph g(6);
  for (Vertex i = 0; i < 3; ++i) {
    g.add_edge(i, (i + 1) % 3);
    g.add_edge(3 + i, 3 + (i + 1) % 3);
    g.add_edge(i, 3 + i);
  }
  return g;
}

Graph complete_bipartite_plus_edge(int a, int b) {
  require(a >= 1 && b >= 2, "K_ab_plus_e", "need a >= 1 and b >= 2");
  Graph g(a + b);
  for (Vertex x = 0; x < a; ++x)
    for (Vertex y = a; y < a + b; ++y) g.add_edge(x, y);
  g.add_edge(a, a + 1);
  return g;
}

Graph catalog(std::string_view name, std::span<const int> params) {
  auto arity = [&](std::size_t k) {
    require(params.size() == k, name, "expected " + std::to_string(k) + " parameter(s)");
  };
  if (name == "complete") return arity(1), complete_graph(params[0]);
  if (name == "complete_minus_edge") return arity(1), complete_minus_edge(params[0]);
  if (name == "cycle") return arity(1), cycle_graph(params[0]);
  if (name == "path") return arity(1), path_graph(params[0]);
  if (name == "B_n") return arity(1), burger_graph(params[0]);
  if (name == "grotzsch") return arity(0), grotzsch_graph();
  if (name == "augmented_grotzsch") return arity(0), augmented_grotzsch_graph();
  if (name == "prism") return arity(0), prism_graph();
  if (name == "K_ab_plus_e") return arity(2), complete_bipartite_plus_edge(params[0], params[1]);
  throw Error("catalog: unknown graph family '" + std::string(name) + "'");
}

Graph catalog_from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  std::vector<int> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = spec.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      std::string_view tok = rest.substr(0, comma);
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw Error("catalog: bad parameter '" + std::string(tok) + "'");
      params.push_back(value);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  return catalog(spec.substr(0, colon), params);
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "complete", "complete_minus_edge", "cycle", "path", "B_n",
      "grotzsch", "augmented_grotzsch", "prism", "K_ab_plus_e"};
  return names;
}

}  // namespace linerig
