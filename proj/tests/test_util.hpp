#pragma once

#include <initializer_list>
#include <vector>

#include "rigiditylab/framework.hpp"
#include "rigiditylab/pogorelov.hpp"

namespace rltest {

using namespace rigiditylab;

inline Point pt(std::initializer_list<long> coords) {
  Point p;
  for (long c : coords) p.push_back(GaussianRational(Rational(c)));
  return p;
}

inline Configuration config(std::initializer_list<std::initializer_list<long>> rows) {
  Configuration c;
  for (const auto& r : rows) c.points.push_back(pt(r));
  return c;
}

inline Framework make_framework(const Graph& g, const SpaceDescriptor& space,
                                std::initializer_list<std::initializer_list<long>> rows) {
  Framework f{g, config(rows), space};
  f.validate();
  return f;
}

// K4 plus a vertex of degree 2: the canonical locally rigid, generically
// globally flexible plane graph.
inline Graph k4_plus_low_degree_vertex() {
  return with_pendant_vertex(complete_graph(4), {0, 1});
}

// K5 plus a vertex of degree 3 (the d = 3 analogue).
inline Graph k5_plus_low_degree_vertex() {
  return with_pendant_vertex(complete_graph(5), {0, 1, 2});
}

}  // namespace rltest
