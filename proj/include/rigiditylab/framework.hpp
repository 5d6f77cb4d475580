#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rigiditylab/graph.hpp"
#include "rigiditylab/matrix.hpp"
#include "rigiditylab/rng.hpp"
#include "rigiditylab/space.hpp"

namespace rigiditylab {

// One vertex position. Real-space frameworks keep all imaginary parts zero
// (validated); only complex-space frameworks use them.
using Point = std::vector<GaussianRational>;

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const GaussianRational& c, const Point& a);

struct Configuration {
  std::vector<Point> points;

  int size() const { return static_cast<int>(points.size()); }
  const Point& operator[](int t) const { return points[static_cast<size_t>(t)]; }
  Point& operator[](int t) { return points[static_cast<size_t>(t)]; }

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct Framework {
  Graph graph;
  Configuration config;
  SpaceDescriptor space;

  void validate() const;

  friend bool operator==(const Framework&, const Framework&) = default;
};

// Squared length of w under the space's metric:
//   euclidean/complex: sum w_i^2,  pseudo(s): -sum_{i<s} w_i^2 + sum_{i>=s} w_i^2.
// Hyperbolic distances are handled via locus inner products in the
// cone/transfer module, not here.
GaussianRational squared_length(const SpaceDescriptor& space, const Point& w);

// Per-edge squared lengths in graph edge order.
std::vector<GaussianRational> edge_measurements(const Framework& f);

// Same graph, same space, identical measurement vectors (exact).
bool is_equivalent(const Framework& f, const Framework& g);

// All pairwise squared distances agree; decided by g-matrix equality.
bool is_congruent(const Configuration& p, const Configuration& q, const SpaceDescriptor& space);

// Rank of {p(t) - p(0)}.
int affine_span_dim(const Configuration& p);

// Witness of strong congruence: q(t) = O p(t) + translation with
// O^t S O = S for the space's form matrix S. Requires full-dimensional
// affine span (DegenerateSpan otherwise) and congruent inputs
// (NotCongruent otherwise).
struct CongruenceWitness {
  ComplexMatrix transform;
  Point translation;
};
CongruenceWitness strong_congruence_witness(const Configuration& p, const Configuration& q,
                                            const SpaceDescriptor& space);

// Euclidean -> complex with purely real coordinates; measurements are
// preserved verbatim.
Framework embed_real_as_complex(const Framework& f);

// Pseudo(d, s) -> complex: coordinate j < s maps x -> i x, the rest stay
// real. Complex measurements coincide with the pseudo-Euclidean ones.
Framework embed_s_valued(const Framework& f);

// First s coordinates purely imaginary, the rest purely real, at every
// vertex.
bool is_s_valued(const Framework& f, int s);
bool is_s_valued(const Configuration& p, int s);

// Seeded generic configuration for `space` (integer coordinates in
// [-bound, bound]; Gaussian integers for complex spaces).
Configuration random_configuration(int v, const SpaceDescriptor& space, std::int64_t bound,
                                   std::uint64_t seed);

Framework random_framework(const Graph& g, const SpaceDescriptor& space, std::int64_t bound,
                           std::uint64_t seed);

// Applies x -> O x + tau to every vertex.
Configuration transform_configuration(const Configuration& p, const ComplexMatrix& o,
                                      const Point& tau);

}  // namespace rigiditylab
