#include "linerig/serialize.hpp"

#include <algorithm>
#include <set>

#include "linerig/error.hpp"
#include "linerig/rational.hpp"

namespace linerig {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw Error(std::string("json: expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw Error(std::string("json: missing field '") + key + "'");
  return *it;
}

template <typename T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("json: bad field '") + key + "': " + e.what());
  }
}

Edge edge_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw Error("json: an edge must be a pair of integers");
  return {j[0].get<int>(), j[1].get<int>()};
}

Json edge_to(const Edge& e) { return Json::array({e.first, e.second}); }

const char* mode_name(CertMode m) { return m == CertMode::generic ? "generic" : "realization"; }

CertMode mode_from(const std::string& s) {
  if (s == "generic") return CertMode::generic;
  if (s == "realization") return CertMode::realization;
  throw Error("json: unknown certificate mode '" + s + "'");
}

Json node_to_json(const CertNodePtr& node) {
  if (!node) throw Error("certificate: null node");
  return std::visit(
      [](const auto& r) -> Json {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, rule::EdgeBase>) {
          return {{"rule", "edge"}, {"u", r.u}, {"v", r.v}};
        } else if constexpr (std::is_same_v<R, rule::StretchedCycle>) {
          return {{"rule", "stretched_cycle"}, {"cycle", r.cycle}};
        } else if constexpr (std::is_same_v<R, rule::Deg2Ext>) {
          return {{"rule", "deg2ext"}, {"w", r.w}, {"x", r.x}, {"y", r.y}, {"child", node_to_json(r.child)}};
        } else if constexpr (std::is_same_v<R, rule::Attach>) {
          return {{"rule", "attach"}, {"left", node_to_json(r.left)}, {"right", node_to_json(r.right)}};
        } else if constexpr (std::is_same_v<R, rule::Join>) {
          Json pairs = Json::array();
          for (const auto& [a, b] : r.pairs) pairs.push_back(Json::array({a, b}));
          return {{"rule", "join"}, {"left", node_to_json(r.left)}, {"right", node_to_json(r.right)}, {"pairs", pairs}};
        } else {
          return {{"rule", "supergraph"}, {"child", node_to_json(r.child)}};
        }
      },
      node->rule);
}

CertNodePtr node_from_json(const Json& j) {
  const auto name = get<std::string>(j, "rule");
  if (name == "edge") return make_edge_base(get<int>(j, "u"), get<int>(j, "v"));
  if (name == "stretched_cycle") return make_stretched_cycle(get<std::vector<int>>(j, "cycle"));
  if (name == "deg2ext")
    return make_deg2ext(node_from_json(field(j, "child")), get<int>(j, "w"), get<int>(j, "x"), get<int>(j, "y"));
  if (name == "attach") return make_attach(node_from_json(field(j, "left")), node_from_json(field(j, "right")));
  if (name == "join") {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    const Json& arr = field(j, "pairs");
    if (!arr.is_array()) throw Error("json: join pairs must be an array");
    for (const auto& p : arr) pairs.push_back(edge_from(p));
    return make_join(node_from_json(field(j, "left")), node_from_json(field(j, "right")), std::move(pairs));
  }
  if (name == "supergraph") return make_supergraph(node_from_json(field(j, "child")));
  throw Error("json: unknown certificate rule '" + name + "'");
}

bool same_node(const CertNodePtr& a, const CertNodePtr& b) {
  if (!a || !b) return a == b;
  if (a->covered != b->covered || a->rule.index() != b->rule.index()) return false;
  return std::visit(
      [&](const auto& ra) -> bool {
        using R = std::decay_t<decltype(ra)>;
        const auto& rb = std::get<R>(b->rule);
        if constexpr (std::is_same_v<R, rule::EdgeBase>) {
          return ra.u == rb.u && ra.v == rb.v;
        } else if constexpr (std::is_same_v<R, rule::StretchedCycle>) {
          return ra.cycle == rb.cycle;
        } else if constexpr (std::is_same_v<R, rule::Deg2Ext>) {
          return ra.w == rb.w && ra.x == rb.x && ra.y == rb.y && same_node(ra.child, rb.child);
        } else if constexpr (std::is_same_v<R, rule::Attach>) {
          return same_node(ra.left, rb.left) && same_node(ra.right, rb.right);
        } else if constexpr (std::is_same_v<R, rule::Join>) {
          return ra.pairs == rb.pairs && same_node(ra.left, rb.left) && same_node(ra.right, rb.right);
        } else {
          return same_node(ra.child, rb.child);
        }
      },
      a->rule);
}

BoundRule bound_rule_from(const std::string& s) {
  for (auto r : {BoundRule::edge_count, BoundRule::min_degree, BoundRule::four_vertex})
    if (s == to_string(r)) return r;
  throw Error("json: unknown bound rule '" + s + "'");
}

Json bound_to_json(const EdgeBoundReason& b) {
  return {{"vertices", b.vertices}, {"edges", b.edges}, {"rule", to_string(b.rule)}};
}

EdgeBoundReason bound_from_json(const Json& j) {
  return {get<int>(j, "vertices"), get<int>(j, "edges"), bound_rule_from(get<std::string>(j, "rule"))};
}

VerdictKind kind_from(const std::string& s) {
  for (auto k : {VerdictKind::ur, VerdictKind::not_ur, VerdictKind::undecided})
    if (s == to_string(k)) return k;
  throw Error("json: unknown verdict kind '" + s + "'");
}

}  // namespace

// ---------------------------------------------------------------------------

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(edge_to(e));
  Json labels = Json::object();
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!g.label(v).empty()) labels[std::to_string(v)] = g.label(v);
  return {{"n", g.num_vertices()}, {"edges", edges}, {"labels", labels}};
}

Graph graph_from_json(const Json& j) {
  const int n = get<int>(j, "n");
  if (n < 0) throw Error("json: negative vertex count");
  Graph g(n);
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw Error("json: edges must be an array");
  for (const auto& e : edges) {
    const auto [u, v] = edge_from(e);
    if (!g.add_edge(u, v)) throw Error("json: repeated edge");
  }
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_object()) throw Error("json: labels must be an object");
    for (const auto& [key, value] : it->items()) {
      int v = -1;
      try {
        std::size_t used = 0;
        v = std::stoi(key, &used);
        if (used != key.size()) v = -1;
      } catch (const std::exception&) {
      }
      if (v < 0 || v >= n || !value.is_string()) throw Error("json: bad label entry '" + key + "'");
      g.set_label(v, value.get<std::string>());
    }
  }
  return g;
}

Json realization_to_json(const Realization& p) {
  Json coords = Json::array();
  for (Vertex v = 0; v < p.num_points(); ++v) {
    Json row = Json::array();
    for (int k = 0; k < p.dim(); ++k) {
      if (p.is_exact())
        row.push_back(format_rational(p.exact_value(v, k)));
      else
        row.push_back(p.value(v, k));
    }
    coords.push_back(std::move(row));
  }
  return {{"dim", p.dim()}, {"flavor", p.is_exact() ? "exact" : "float"}, {"coords", coords}};
}

Realization realization_from_json(const Json& j) {
  const int dim = get<int>(j, "dim");
  if (dim < 1) throw Error("json: dimension must be >= 1");
  const auto flavor = get<std::string>(j, "flavor");
  if (flavor != "exact" && flavor != "float") throw Error("json: unknown flavor '" + flavor + "'");
  const Json& coords = field(j, "coords");
  if (!coords.is_array()) throw Error("json: coords must be an array");
  std::vector<Rational> exact;
  std::vector<double> floating;
  for (const auto& row : coords) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim) throw Error("json: coordinate row of wrong length");
    for (const auto& x : row) {
      if (flavor == "exact") {
        if (x.is_string())
          exact.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer())
          exact.emplace_back(x.get<long>());
        else
          throw Error("json: exact coordinates must be \"num/den\" strings");
      } else {
        if (!x.is_number()) throw Error("json: float coordinates must be numbers");
        floating.push_back(x.get<double>());
      }
    }
  }
  return flavor == "exact" ? Realization::exact(dim, std::move(exact)) : Realization::floating(dim, std::move(floating));
}

Json certificate_to_json(const Certificate& c) {
  return {{"mode", mode_name(c.mode)}, {"covered", c.covered}, {"root", node_to_json(c.root)}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate c = make_certificate(mode_from(get<std::string>(j, "mode")), node_from_json(field(j, "root")));
  if (auto it = j.find("covered"); it != j.end()) {
    std::vector<Vertex> claimed;
    try {
      claimed = it->get<std::vector<Vertex>>();
    } catch (const nlohmann::json::exception&) {
      throw Error("json: covered must be a list of vertices");
    }
    std::sort(claimed.begin(), claimed.end());
    if (claimed != c.covered) throw Error("json: covered set disagrees with the certificate tree");
  }
  return c;
}

Json witness_to_json(const Witness& w) {
  return {{"graph", graph_to_json(w.base.graph)},
          {"base", realization_to_json(w.base.realization)},
          {"alt", realization_to_json(w.alt)},
          {"nonlinked_pair", edge_to(w.nonlinked_pair)},
          {"residual", w.residual},
          {"gap", w.gap}};
}

Witness witness_from_json(const Json& j) {
  Witness w;
  w.base = Framework(graph_from_json(field(j, "graph")), realization_from_json(field(j, "base")));
  w.alt = realization_from_json(field(j, "alt"));
  if (w.alt.num_points() != w.base.graph.num_vertices()) throw Error("json: witness realizations differ in size");
  w.nonlinked_pair = edge_from(field(j, "nonlinked_pair"));
  w.residual = get<double>(j, "residual");
  w.gap = get<double>(j, "gap");
  return w;
}

Json reason_to_json(const RefutationReason& r) {
  return std::visit(
      [](const auto& x) -> Json {
        using R = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<R, EdgeBoundReason>) {
          Json j = bound_to_json(x);
          j["kind"] = "edge_bound";
          return j;
        } else if constexpr (std::is_same_v<R, PeelChainReason>) {
          Json removed = Json::array();
          for (const auto& s : x.removed) removed.push_back({{"vertex", s.vertex}, {"x", s.x}, {"y", s.y}});
          return {{"kind", "peel_chain"}, {"removed", removed}, {"base", bound_to_json(x.base)}};
        } else if constexpr (std::is_same_v<R, SeparatorReason>) {
          return {{"kind", "separator"},
                  {"separator", x.separator},
                  {"component", x.component},
                  {"witness", witness_to_json(x.witness)}};
        } else {
          return {{"kind", "numeric"},
                  {"witness", witness_to_json(x.witness)},
                  {"restarts_used", x.restarts_used},
                  {"dim", x.dim}};
        }
      },
      r);
}

RefutationReason reason_from_json(const Json& j) {
  const auto kind = get<std::string>(j, "kind");
  if (kind == "edge_bound") return bound_from_json(j);
  if (kind == "peel_chain") {
    PeelChainReason r;
    const Json& removed = field(j, "removed");
    if (!removed.is_array()) throw Error("json: removed must be an array");
    for (const auto& s : removed) r.removed.push_back({get<int>(s, "vertex"), get<int>(s, "x"), get<int>(s, "y")});
    r.base = bound_from_json(field(j, "base"));
    return r;
  }
  if (kind == "separator")
    return SeparatorReason{get<std::vector<Vertex>>(j, "separator"), get<std::vector<Vertex>>(j, "component"),
                           witness_from_json(field(j, "witness"))};
  if (kind == "numeric")
    return NumericReason{witness_from_json(field(j, "witness")), get<int>(j, "restarts_used"), get<int>(j, "dim")};
  throw Error("json: unknown reason kind '" + kind + "'");
}

Json verdict_to_json(const Verdict& v) {
  Json j = {{"kind", to_string(v.kind)},
            {"mode", mode_name(v.mode)},
            {"diagnostics", v.diagnostics},
            {"input_digest", v.input_digest},
            {"budget",
             {{"seed", v.budget.seed},
              {"dims", v.budget.dims},
              {"restarts_per_dim", v.budget.restarts_per_dim},
              {"restarts_used", v.budget.restarts_used},
              {"realizations_tried", v.budget.realizations_tried},
              {"elapsed_ms", v.budget.elapsed_ms}}}};
  if (v.certificate) j["certificate"] = certificate_to_json(*v.certificate);
  if (v.reason) j["reason"] = reason_to_json(*v.reason);
  return j;
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.kind = kind_from(get<std::string>(j, "kind"));
  v.mode = mode_from(get<std::string>(j, "mode"));
  v.diagnostics = get<std::string>(j, "diagnostics");
  v.input_digest = get<std::string>(j, "input_digest");
  const Json& b = field(j, "budget");
  v.budget.seed = get<std::uint64_t>(b, "seed");
  v.budget.dims = get<std::vector<int>>(b, "dims");
  v.budget.restarts_per_dim = get<int>(b, "restarts_per_dim");
  v.budget.restarts_used = get<int>(b, "restarts_used");
  v.budget.realizations_tried = get<int>(b, "realizations_tried");
  v.budget.elapsed_ms = get<double>(b, "elapsed_ms");
  if (j.contains("certificate")) v.certificate = certificate_from_json(j["certificate"]);
  if (j.contains("reason")) v.reason = reason_from_json(j["reason"]);
  return v;
}

Json poly_to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exps = Json::array();
    for (auto x : e) exps.push_back(static_cast<int>(x));
    out.push_back({{"coef", c.get_str()}, {"exps", exps}});
  }
  return out;
}

MultiPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw Error("json: polynomial must be an array of terms");
  MultiPoly p;
  std::set<Exponents> seen;
  for (const auto& t : j) {
    Integer c;
    if (c.set_str(get<std::string>(t, "coef"), 10) != 0) throw Error("json: bad polynomial coefficient");
    const auto exps = get<std::vector<int>>(t, "exps");
    if (exps.size() != kNumVars) throw Error("json: exponent vector must have 8 entries");
    Exponents e;
    for (int i = 0; i < kNumVars; ++i) {
      if (exps[i] < 0 || exps[i] > 255) throw Error("json: exponent out of range");
      e[i] = static_cast<std::uint8_t>(exps[i]);
    }
    if (!seen.insert(e).second) throw Error("json: repeated monomial");
    p += MultiPoly::monomial(c, e);
  }
  return p;
}

bool same_certificate(const Certificate& a, const Certificate& b) {
  return a.mode == b.mode && a.covered == b.covered && same_node(a.root, b.root);
}

bool same_witness(const Witness& a, const Witness& b) {
  return a.base.graph == b.base.graph && a.base.realization == b.base.realization && a.alt == b.alt &&
         a.nonlinked_pair == b.nonlinked_pair && a.residual == b.residual && a.gap == b.gap;
}

bool same_reason(const RefutationReason& a, const RefutationReason& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using R = std::decay_t<decltype(x)>;
        const auto& y = std::get<R>(b);
        if constexpr (std::is_same_v<R, EdgeBoundReason>) {
          return x.vertices == y.vertices && x.edges == y.edges && x.rule == y.rule;
        } else if constexpr (std::is_same_v<R, PeelChainReason>) {
          if (x.removed.size() != y.removed.size()) return false;
          for (std::size_t i = 0; i < x.removed.size(); ++i)
            if (x.removed[i].vertex != y.removed[i].vertex || x.removed[i].x != y.removed[i].x ||
                x.removed[i].y != y.removed[i].y)
              return false;
          return same_reason(x.base, y.base);
        } else if constexpr (std::is_same_v<R, SeparatorReason>) {
          return x.separator == y.separator && x.component == y.component && same_witness(x.witness, y.witness);
        } else {
          return x.restarts_used == y.restarts_used && x.dim == y.dim && same_witness(x.witness, y.witness);
        }
      },
      a);
}

bool same_verdict(const Verdict& a, const Verdict& b) {
  if (a.kind != b.kind || a.mode != b.mode || a.diagnostics != b.diagnostics || a.input_digest != b.input_digest)
    return false;
  if (a.budget.seed != b.budget.seed || a.budget.dims != b.budget.dims ||
      a.budget.restarts_per_dim != b.budget.restarts_per_dim || a.budget.restarts_used != b.budget.restarts_used ||
      a.budget.realizations_tried != b.budget.realizations_tried || a.budget.elapsed_ms != b.budget.elapsed_ms)
    return false;
  if (a.certificate.has_value() != b.certificate.has_value() || a.reason.has_value() != b.reason.has_value())
    return false;
  if (a.certificate && !same_certificate(*a.certificate, *b.certificate)) return false;
  if (a.reason && !same_reason(*a.reason, *b.reason)) return false;
  return true;
}

}  // namespace linerig
