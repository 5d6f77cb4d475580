#pragma once

#include <cstdint>
#include <vector>

#include "rigiditylab/framework.hpp"

namespace rigiditylab {

// Pair of frameworks over the same graph and space. `haar_coords` marks
// pairs living in average/difference coordinates, so the scaling map
// cannot silently be applied to (rho, sigma) coordinates.
struct FrameworkPair {
  Framework first;
  Framework second;
  bool haar_coords = false;

  void validate() const;

  friend bool operator==(const FrameworkPair&, const FrameworkPair&) = default;
};

// The average/difference map into pseudo(d, s): with a = (rho+sigma)/2 and
// f = (rho-sigma)/2, the first output keeps the first s coordinates of rho
// and the remaining ones of sigma, the second output the reverse (the
// coordinate-swapping form of the map). Equivalent inputs give equivalent
// outputs, and congruence of the pair is preserved in both directions.
FrameworkPair pogorelov(const FrameworkPair& pair, int s);

// Literal coordinate swapping; equals pogorelov entry for entry.
FrameworkPair coordinate_swap(const FrameworkPair& pair, int s);

// (rho, sigma) -> ((rho+sigma)/2, (rho-sigma)/2) on complex frameworks.
FrameworkPair haar(const FrameworkPair& pair);
// (a, f) -> (a+f, a-f); inverse of haar.
FrameworkPair haar_inverse(const FrameworkPair& pair);

// Multiplies the first s coordinates of the first element by i and of the
// second element by -i. Applying it twice negates the first s coordinates
// of both elements.
FrameworkPair s_twist(const FrameworkPair& pair, int s);

// haar_inverse . s_twist . haar on complex pairs. On embedded real pairs
// it lands on the s-valued embeddings of the real map's outputs (with the
// two outputs transposed relative to pogorelov's labeling).
FrameworkPair complex_pogorelov(const FrameworkPair& pair, int s);

// Scales coordinate `coord` of the first element by lambda and of the
// second element by 1/lambda. Requires haar coordinates; preserves the
// flex property of the pair.
FrameworkPair coordinate_scaling(const FrameworkPair& pair, int coord,
                                 const GaussianRational& lambda);

// Builds an exactly equivalent, non-congruent euclidean pair on `g` by
// reflecting a vertex of degree <= d across the affine hull of its
// neighbors at a seeded generic configuration. NoReflectableVertex when
// every vertex has degree > d.
FrameworkPair build_noncongruent_equivalent_pair(const Graph& g, int d, std::uint64_t seed,
                                                 std::int64_t bound = 1000000, int retries = 3);

// Euclidean reflection of x across the affine hull of `hull_points`
// (exact; hull may be lower-dimensional).
Point reflect_across_affine_hull(const std::vector<Point>& hull_points, const Point& x);

}  // namespace rigiditylab
