#pragma once

#include <utility>
#include <vector>

#include "rigiditylab/errors.hpp"

namespace rigiditylab {

// Finite simple graph. Edges are stored as {t, u} with t < u in a fixed
// order; measurement vectors follow this edge order.
struct Graph {
  int v = 0;
  std::vector<std::pair<int, int>> edges;

  Graph() = default;
  Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

  int e() const { return static_cast<int>(edges.size()); }
  bool is_complete() const { return e() == v * (v - 1) / 2; }
  bool has_edge(int t, int u) const;
  int degree(int t) const;
  std::vector<int> neighbors(int t) const;
  bool connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
// Rim cycle of `rim` vertices plus a hub adjacent to all of them.
Graph wheel_graph(int rim);
// Two n-cycles joined by a perfect matching.
Graph prism_graph(int n);
// Appends one vertex adjacent to the listed vertices.
Graph with_pendant_vertex(const Graph& g, const std::vector<int>& attach_to);

// Coned graph: base plus one new vertex (index base.v) adjacent to every
// base vertex.
struct ConedGraph {
  Graph graph;        // the full coned graph
  int cone_vertex;    // always graph.v - 1
  int base_v() const { return graph.v - 1; }
};

ConedGraph cone_graph(const Graph& base);

// True when `g` has coned shape with cone vertex g.v - 1 (used to validate
// framework inputs to the transfer predicates).
bool has_cone_shape(const Graph& g);

}  // namespace rigiditylab
