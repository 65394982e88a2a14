#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linerig/graph.hpp"

namespace linerig {

Graph complete_graph(int n);
/// K_n with the edge {0,1} removed.
Graph complete_minus_edge(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Two copies of K_n (vertices 0..n-1 and n..2n-1) joined by the matching i -- n+i.
Graph burger_graph(int n);

/// The Groetzsch graph with labels w, u0..u4, v0..v4 (indices 0, 1..5, 6..10).
/// The v_i form a 5-cycle, u_i is adjacent to v_{i-1} and v_{i+1}, and w to every u_i.
Graph grotzsch_graph();

/// grotzsch_graph() plus v0'..v4' (indices 11..15), where v_i' is adjacent to
/// u_{i+1}, v_{i+1} and v_{i+1}', indices mod 5.
Graph augmented_grotzsch_graph();

/// Two triangles {0,1,2} and {3,4,5} joined by the matching i -- i+3.
Graph prism_graph();

/// K_{a,b} (sides 0..a-1 and a..a+b-1) plus the edge {a, a+1} inside the b side.
Graph complete_bipartite_plus_edge(int a, int b);

/// Looks up a named family: complete, complete_minus_edge, cycle, path, B_n,
/// grotzsch, augmented_grotzsch, prism, K_ab_plus_e.
Graph catalog(std::string_view name, std::span<const int> params = {});

/// Parses "name" or "name:p1,p2,..." and calls catalog().
Graph catalog_from_spec(std::string_view spec);

const std::vector<std::string>& catalog_names();

}  // namespace linerig
