#include "linerig/realization.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <set>

#include "linerig/error.hpp"

namespace linerig {

Realization Realization::exact(int dim, std::vector<Rational> flat) {
  if (dim < 1) throw Error("realization: dimension must be >= 1");
  if (flat.size() % dim != 0) throw Error("realization: coordinate count not a multiple of dim");
  Realization r;
  r.dim_ = dim;
  r.num_points_ = static_cast<int>(flat.size() / dim);
  r.flavor_ = Flavor::exact;
  r.exact_ = std::move(flat);
  for (auto& q : r.exact_) q.canonicalize();
  return r;
}

Realization Realization::floating(int dim, std::vector<double> flat) {
  if (dim < 1) throw Error("realization: dimension must be >= 1");
  if (flat.size() % dim != 0) throw Error("realization: coordinate count not a multiple of dim");
  for (double x : flat)
    if (!std::isfinite(x)) throw Error("realization: non-finite coordinate");
  Realization r;
  r.dim_ = dim;
  r.num_points_ = static_cast<int>(flat.size() / dim);
  r.flavor_ = Flavor::floating;
  r.floating_ = std::move(flat);
  return r;
}

void Realization::check(Vertex v, int axis) const {
  if (v < 0 || v >= num_points_ || axis < 0 || axis >= dim_)
    throw Error("realization: index out of range");
}

double Realization::value(Vertex v, int axis) const {
  check(v, axis);
  const std::size_t i = static_cast<std::size_t>(v) * dim_ + axis;
  return is_exact() ? exact_[i].get_d() : floating_[i];
}

const Rational& Realization::exact_value(Vertex v, int axis) const {
  check(v, axis);
  if (!is_exact()) throw Error("realization: exact coordinate requested from floating flavor");
  return exact_[static_cast<std::size_t>(v) * dim_ + axis];
}

std::vector<double> Realization::point(Vertex v) const {
  std::vector<double> out(dim_);
  for (int k = 0; k < dim_; ++k) out[k] = value(v, k);
  return out;
}

double Realization::distance(Vertex a, Vertex b) const {
  if (is_exact()) return std::sqrt(squared_distance_exact(a, b).get_d());
  double s = 0.0;
  for (int k = 0; k < dim_; ++k) {
    const double d = value(a, k) - value(b, k);
    s += d * d;
  }
  return std::sqrt(s);
}

Rational Realization::squared_distance_exact(Vertex a, Vertex b) const {
  Rational s = 0;
  for (int k = 0; k < dim_; ++k) {
    Rational d = exact_value(a, k) - exact_value(b, k);
    s += d * d;
  }
  return s;
}

int Realization::compare_axis0(Vertex a, Vertex b) const {
  if (is_exact()) return cmp(exact_value(a), exact_value(b));
  const double x = value(a), y = value(b);
  return (x > y) - (x < y);
}

bool Realization::coincident(Vertex a, Vertex b) const {
  for (int k = 0; k < dim_; ++k) {
    if (is_exact() ? exact_value(a, k) != exact_value(b, k) : value(a, k) != value(b, k)) return false;
  }
  return true;
}

Realization Realization::as_floating() const {
  if (!is_exact()) return *this;
  std::vector<double> flat(exact_.size());
  std::transform(exact_.begin(), exact_.end(), flat.begin(), [](const Rational& q) { return q.get_d(); });
  return floating(dim_, std::move(flat));
}

Realization Realization::padded(int new_dim) const {
  if (new_dim < dim_) throw Error("realization: cannot pad to a smaller dimension");
  if (is_exact()) {
    std::vector<Rational> flat(static_cast<std::size_t>(num_points_) * new_dim);
    for (Vertex v = 0; v < num_points_; ++v)
      for (int k = 0; k < dim_; ++k) flat[v * new_dim + k] = exact_value(v, k);
    return exact(new_dim, std::move(flat));
  }
  std::vector<double> flat(static_cast<std::size_t>(num_points_) * new_dim, 0.0);
  for (Vertex v = 0; v < num_points_; ++v)
    for (int k = 0; k < dim_; ++k) flat[v * new_dim + k] = value(v, k);
  return floating(new_dim, std::move(flat));
}

bool Realization::operator==(const Realization& other) const {
  return dim_ == other.dim_ && num_points_ == other.num_points_ && flavor_ == other.flavor_ &&
         exact_ == other.exact_ && floating_ == other.floating_;
}

Framework::Framework(Graph g, Realization p) : graph(std::move(g)), realization(std::move(p)) {
  if (graph.num_vertices() != realization.num_points())
    throw Error("framework: realization has " + std::to_string(realization.num_points()) +
                " points but the graph has " + std::to_string(graph.num_vertices()) + " vertices");
}

bool is_injective(const Realization& p) {
  for (Vertex a = 0; a < p.num_points(); ++a)
    for (Vertex b = a + 1; b < p.num_points(); ++b)
      if (p.coincident(a, b)) return false;
  return true;
}

bool is_quasi_injective(const Framework& f) {
  for (const auto& [u, v] : f.graph.edges())
    if (f.realization.coincident(u, v)) return false;
  return true;
}

Realization sample_generic_1d(int n, std::uint64_t seed) {
  constexpr std::int64_t kRange = std::int64_t{1} << 60;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-kRange, kRange);
  std::set<std::int64_t> used;
  std::vector<Rational> coords;
  coords.reserve(n);
  const Integer den = Integer(1) << 60;
  while (static_cast<int>(coords.size()) < n) {
    const std::int64_t k = dist(rng);
    if (!used.insert(k).second) continue;  // resample on collision
    Integer num;
    num = static_cast<long>(k);
    coords.emplace_back(num, den);
  }
  return Realization::exact_line(std::move(coords));
}

namespace {

void require_same_graph(const Framework& f1, const Framework& f2) {
  if (!(f1.graph == f2.graph)) throw Error("frameworks have different underlying graphs");
}

template <typename Pairs>
Discrepancy max_discrepancy(const Framework& f1, const Framework& f2, const Pairs& pairs) {
  Discrepancy out;
  for (const auto& [a, b] : pairs) {
    const double d = std::abs(f1.realization.distance(a, b) - f2.realization.distance(a, b));
    if (out.pair.first < 0 || d > out.value) out = {d, {a, b}};
  }
  return out;
}

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> out;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) out.emplace_back(a, b);
  return out;
}

template <typename Pairs>
bool lengths_agree(const Framework& f1, const Framework& f2, const Pairs& pairs, double tol) {
  if (tol == 0.0 && f1.realization.is_exact() && f2.realization.is_exact()) {
    for (const auto& [a, b] : pairs)
      if (f1.realization.squared_distance_exact(a, b) != f2.realization.squared_distance_exact(a, b))
        return false;
    return true;
  }
  return max_discrepancy(f1, f2, pairs).value <= tol;
}

}  // namespace

Discrepancy max_edge_discrepancy(const Framework& f1, const Framework& f2) {
  require_same_graph(f1, f2);
  return max_discrepancy(f1, f2, f1.graph.edges());
}

Discrepancy max_pair_discrepancy(const Framework& f1, const Framework& f2) {
  require_same_graph(f1, f2);
  return max_discrepancy(f1, f2, all_pairs(f1.graph.num_vertices()));
}

bool are_equivalent(const Framework& f1, const Framework& f2, double tol) {
  require_same_graph(f1, f2);
  return lengths_agree(f1, f2, f1.graph.edges(), tol);
}

bool are_congruent(const Framework& f1, const Framework& f2, double tol) {
  require_same_graph(f1, f2);
  return lengths_agree(f1, f2, all_pairs(f1.graph.num_vertices()), tol);
}

// ---------------------------------------------------------------------------
// Stretched cycles

namespace {

void require_injective_line(const Framework& f) {
  if (f.dim() != 1) throw Error("stretched cycle: framework must be 1-dimensional");
  if (!is_injective(f.realization)) throw Error("stretched cycle: realization must be injective");
}

// Out-neighbours in the low-to-high orientation.
std::vector<std::vector<Vertex>> orient(const Framework& f) {
  const int n = f.graph.num_vertices();
  std::vector<std::vector<Vertex>> out(n);
  for (const auto& [a, b] : f.graph.edges()) {
    if (f.realization.compare_axis0(a, b) < 0)
      out[a].push_back(b);
    else
      out[b].push_back(a);
  }
  return out;
}

// Shortest directed path from `from` to `to` avoiding the direct arc.
std::optional<std::vector<Vertex>> detour(const std::vector<std::vector<Vertex>>& out, Vertex from,
                                          Vertex to) {
  std::vector<int> parent(out.size(), -1);
  std::queue<Vertex> q;
  q.push(from);
  parent[from] = from;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : out[v]) {
      if (v == from && w == to) continue;
      if (parent[w] >= 0) continue;
      parent[w] = v;
      if (w == to) {
        std::vector<Vertex> path{to};
        for (Vertex x = to; x != from;) path.push_back(x = parent[x]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      q.push(w);
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::vector<Vertex>> shortcut_stretched_cycles(const Framework& f) {
  require_injective_line(f);
  const auto out = orient(f);
  std::vector<std::vector<Vertex>> cycles;
  for (Vertex a = 0; a < f.graph.num_vertices(); ++a)
    for (Vertex b : out[a])
      if (auto path = detour(out, a, b)) cycles.push_back(std::move(*path));
  return cycles;
}

std::optional<std::vector<Vertex>> find_stretched_cycle(const Framework& f) {
  require_injective_line(f);
  const auto out = orient(f);
  for (const auto& [u, v] : f.graph.edges()) {
    const bool forward = f.realization.compare_axis0(u, v) < 0;
    const Vertex a = forward ? u : v, b = forward ? v : u;
    if (auto path = detour(out, a, b)) return path;
  }
  return std::nullopt;
}

std::vector<std::vector<Vertex>> enumerate_stretched_cycles(const Framework& f, int cap) {
  require_injective_line(f);
  const auto out = orient(f);
  std::vector<std::vector<Vertex>> cycles;
  std::vector<Vertex> path;
  auto dfs = [&](auto&& self, Vertex v, Vertex target) -> void {
    for (Vertex w : out[v]) {
      if (static_cast<int>(cycles.size()) >= cap) return;
      if (path.size() == 1 && w == target) continue;
      if (w == target) {
        path.push_back(w);
        cycles.push_back(path);
        path.pop_back();
        continue;
      }
      if (f.realization.compare_axis0(w, target) >= 0) continue;
      path.push_back(w);
      self(self, w, target);
      path.pop_back();
    }
  };
  for (Vertex a = 0; a < f.graph.num_vertices() && static_cast<int>(cycles.size()) < cap; ++a) {
    for (Vertex b : out[a]) {
      path.assign(1, a);
      dfs(dfs, a, b);
      if (static_cast<int>(cycles.size()) >= cap) break;
    }
  }
  return cycles;
}

bool is_stretched_cycle(const Framework& f, const std::vector<Vertex>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 3 || f.dim() != 1) return false;
  std::set<Vertex> distinct(cycle.begin(), cycle.end());
  if (static_cast<int>(distinct.size()) != k) return false;
  for (int i = 0; i < k; ++i) {
    const Vertex a = cycle[i], b = cycle[(i + 1) % k];
    if (a < 0 || a >= f.graph.num_vertices() || b < 0 || b >= f.graph.num_vertices()) return false;
    if (!f.graph.has_edge(a, b)) return false;
    if (i + 1 < k && f.realization.compare_axis0(a, b) >= 0) return false;
  }
  return true;
}

}  // namespace linerig
