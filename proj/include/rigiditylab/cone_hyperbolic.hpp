#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rigiditylab/rigidity.hpp"

namespace rigiditylab {

// Minkowski inner product -x_1 y_1 + sum_{i>=2} x_i y_i.
Rational minkowski_inner(const std::vector<Rational>& x, const std::vector<Rational>& y);

// Point of H^d stored projectively as a ray in minkowski (d+1)-space with
// <x, x> < 0 and x_1 > 0; the canonical representative (<x, x> = -1) is
// never materialized, so no square roots enter any comparison.
struct HyperbolicPoint {
  std::vector<Rational> ray;

  int ambient_dim() const { return static_cast<int>(ray.size()); }
  Rational self_inner() const { return minkowski_inner(ray, ray); }
  void validate() const;

  friend bool operator==(const HyperbolicPoint&, const HyperbolicPoint&) = default;
};

// Rational parametrization of the locus from the open unit ball:
// u -> ((1+|u|^2)/(1-|u|^2), 2u/(1-|u|^2)), which satisfies <x, x> = -1
// exactly. Throws OutsideBall when |u|^2 >= 1.
HyperbolicPoint hyperbolic_point_from_ball(const std::vector<Rational>& u);

// Ball parameter recovering the point: u = (x_2..x_{d+1}) / (1 + x_1)
// after canonical rescaling; exact only for canonical rays, so this is
// kept for canonical (from_ball) points and reporting.
std::vector<Rational> ball_from_hyperbolic_point(const HyperbolicPoint& p);

struct HyperbolicFramework {
  Graph graph;  // the base graph (not coned)
  int d = 0;    // dimension of H^d; rays live in d+1 coordinates
  std::vector<HyperbolicPoint> points;

  void validate() const;
  friend bool operator==(const HyperbolicFramework&, const HyperbolicFramework&) = default;
};

struct HyperbolicPair {
  HyperbolicFramework first;
  HyperbolicFramework second;
};

// Equality of normalized inner products <x,y>/sqrt(<x,x><y,y>) for the
// pairs (x, y) and (x2, y2), decided by sign comparison plus
// cross-multiplied squares. Since arcosh is injective this decides
// hyperbolic distance equality without transcendentals.
bool normalized_inner_equal(const HyperbolicPoint& x, const HyperbolicPoint& y,
                            const HyperbolicPoint& x2, const HyperbolicPoint& y2);

// Per-edge (resp. all-pairs) normalized-inner-product agreement.
bool hyperbolic_equivalent(const HyperbolicFramework& f, const HyperbolicFramework& g);
bool hyperbolic_congruent(const HyperbolicFramework& f, const HyperbolicFramework& g);

// Float hyperbolic distance arcosh(-<x,y>/sqrt(<x,x><y,y>)); reporting only.
double hyperbolic_distance(const HyperbolicPoint& x, const HyperbolicPoint& y);

// Coning transfer: cone vertex at `offset`, base vertex t at
// scales[t] * ray_t + offset. Scales act on the stored projective
// representatives and must be positive. Output is a framework of the
// coned graph in minkowski (d+1)-space, upper coned by construction.
Framework cone_to_minkowski(const HyperbolicFramework& f, const std::vector<Rational>& scales,
                            const std::vector<Rational>& offset);
// Seeded variant with generic positive scales and generic offset.
Framework cone_to_minkowski(const HyperbolicFramework& f, std::uint64_t seed,
                            std::int64_t bound = 1000000);

// Inverse direction: translate the cone vertex to the origin and read the
// base vertices as projective rays. Requires an upper-coned input.
HyperbolicFramework minkowski_to_hyperbolic(const Framework& f);

// Predicates on coned frameworks (cone vertex = last index).
// Spiky (euclidean): some base vertex has squared cone-distance > 4 and
// every base edge has squared length < 1/v^2 (v = base vertex count).
bool is_spiky(const Framework& f);
// Upper cylindrical (euclidean or minkowski): relative to the cone, every
// base vertex has first coordinate > 1 and transverse squared norm < 1.
bool is_upper_cylindrical(const Framework& f);
// Upper / lower coned (minkowski): squared cone-distance < 0 with
// positive / negative first coordinate.
bool is_upper_coned(const Framework& f);
bool is_lower_coned(const Framework& f);

// Rotates a spiky framework so the far vertex direction lies on the
// positive first axis (Householder reflection in doubles, re-rationalized
// exactly; cone lands at the origin). The single float-mode operation of
// this module; outputs feed demonstrations, never exact verdicts.
Framework rotate_spiky_to_cylindrical(const Framework& f);

// Max absolute difference of measurement vectors, in doubles.
double measurement_residual(const Framework& f, const Framework& g);

// Applies the average/difference map with s = 1 toward minkowski space
// and reports whether both outputs stayed upper cylindrical (they always
// do, via coordinate swapping). Inputs must be upper cylindrical.
std::pair<FrameworkPair, bool> pogorelov_preserves_cylindrical(const FrameworkPair& pair);

enum class Sheet { Upper, Lower };

// For an equivalent pair of coned minkowski frameworks whose first member
// is upper coned (and in general position), classifies the second
// member's sheet; SheetAmbiguous if it is on neither sheet.
Sheet sheet_classification(const FrameworkPair& pair);

// Independently computed verdicts for the base graph in E^d and the coned
// graph in E^{d+1}; their agreement is the tested transfer statement.
struct ConeTransferVerdicts {
  GGRVerdict base;
  GGRVerdict coned;
  bool agree() const { return base.rigid() == coned.rigid() || base.verdict == coned.verdict; }
};
ConeTransferVerdicts cone_verdict_transfer(const Graph& g, int d, std::uint64_t seed,
                                           const GenericityPolicy& policy = {});

// Hyperbolic verdict, transfer-derived from the euclidean test. On GGF
// with want_witness, attaches an exact pair of equivalent non-congruent
// hyperbolic frameworks built through the cone / cylindrical-swap /
// normalize pipeline.
struct HyperbolicVerdict {
  GGRVerdict verdict;
  std::optional<HyperbolicPair> witness;
};
HyperbolicVerdict hyperbolic_ggr_verdict(const Graph& g, int d, std::uint64_t seed,
                                         const GenericityPolicy& policy = {},
                                         bool want_witness = false);

// Exact equivalent, non-congruent, upper-cylindrical pair of the coned
// graph in E^{d+1}: a vertex reflection at a tight coordinate cluster far
// along the first axis. Feeds the hyperbolic witness pipeline and the
// cylindrical-preservation tests.
FrameworkPair build_cylindrical_reflection_pair(const Graph& base, int d, std::uint64_t seed,
                                                std::int64_t bound = 1000000, int retries = 6);

}  // namespace rigiditylab
