#include "rigiditylab/graph.hpp"

#include <algorithm>
#include <set>

namespace rigiditylab {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : v(vertex_count), edges(std::move(edge_list)) {
  require(v >= 0, Errc::ParseError, "negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto& [t, u] : edges) {
    if (t > u) std::swap(t, u);
    require(t != u, Errc::ParseError, "self-loop");
    require(0 <= t && u < v, Errc::ParseError, "edge endpoint out of range");
    require(seen.insert({t, u}).second, Errc::ParseError, "duplicate edge");
  }
}

bool Graph::has_edge(int t, int u) const {
  if (t > u) std::swap(t, u);
  return std::find(edges.begin(), edges.end(), std::make_pair(t, u)) != edges.end();
}

int Graph::degree(int t) const {
  int d = 0;
  for (const auto& [a, b] : edges) d += (a == t || b == t);
  return d;
}

std::vector<int> Graph::neighbors(int t) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == t) out.push_back(b);
    if (b == t) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::connected() const {
  if (v <= 1) return true;
  std::vector<std::vector<int>> adj(static_cast<size_t>(v));
  for (const auto& [a, b] : edges) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  std::vector<bool> seen(static_cast<size_t>(v), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    for (int u : adj[static_cast<size_t>(t)])
      if (!seen[static_cast<size_t>(u)]) {
        seen[static_cast<size_t>(u)] = true;
        ++count;
        stack.push_back(u);
      }
  }
  return count == v;
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int t = 0; t < n; ++t)
    for (int u = t + 1; u < n; ++u) edges.emplace_back(t, u);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int t = 0; t + 1 < n; ++t) edges.emplace_back(t, t + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  require(n >= 3, Errc::ParseError, "cycle needs >= 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int t = 0; t + 1 < n; ++t) edges.emplace_back(t, t + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, std::move(edges));
}

Graph wheel_graph(int rim) {
  Graph c = cycle_graph(rim);
  std::vector<int> all(static_cast<size_t>(rim));
  for (int i = 0; i < rim; ++i) all[static_cast<size_t>(i)] = i;
  return with_pendant_vertex(c, all);
}

Graph prism_graph(int n) {
  require(n >= 3, Errc::ParseError, "prism needs cycles of >= 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int t = 0; t < n; ++t) {
    edges.emplace_back(t, (t + 1) % n);
    edges.emplace_back(n + t, n + (t + 1) % n);
    edges.emplace_back(t, n + t);
  }
  return Graph(2 * n, std::move(edges));
}

Graph with_pendant_vertex(const Graph& g, const std::vector<int>& attach_to) {
  std::vector<std::pair<int, int>> edges = g.edges;
  for (int t : attach_to) {
    require(0 <= t && t < g.v, Errc::ParseError, "attachment vertex out of range");
    edges.emplace_back(t, g.v);
  }
  return Graph(g.v + 1, std::move(edges));
}

ConedGraph cone_graph(const Graph& base) {
  std::vector<int> all(static_cast<size_t>(base.v));
  for (int i = 0; i < base.v; ++i) all[static_cast<size_t>(i)] = i;
  return ConedGraph{with_pendant_vertex(base, all), base.v};
}

bool has_cone_shape(const Graph& g) {
  if (g.v < 1) return false;
  int c = g.v - 1;
  return g.degree(c) == g.v - 1;
}

}  // namespace rigiditylab
