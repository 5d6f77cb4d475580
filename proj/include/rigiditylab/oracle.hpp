#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rigiditylab/rigidity.hpp"

namespace rigiditylab {

enum class Exactness { Exact, Heuristic };

// Sampled fiber of the edge squared-length map: representatives of the
// non-congruent realization classes hitting the target measurements.
struct RealizationSet {
  int d = 0;
  Exactness exactness = Exactness::Exact;
  std::vector<double> measurements;            // float view of the targets
  std::vector<Rational> exact_measurements;    // exact mode only
  std::vector<Configuration> representatives;  // pairwise non-congruent
  double residual_max = 0.0;                   // heuristic mode only

  int classes() const { return static_cast<int>(representatives.size()); }
};

// Exact 1D realization enumeration: measurements are taken from
// base_config, signs are enumerated over a spanning tree with
// cycle-consistency pruning on the remaining edges, and classes are
// deduplicated by 1D g-matrix. Requires a connected graph.
RealizationSet enumerate_1d(const Graph& g, const Configuration& base_config);

struct Enum2DOptions {
  int n_starts = 2000;
  std::uint64_t seed = 0;
  double dedup_tol = 1e-4;    // normalized g-matrix distance merging classes
  double residual_tol = 1e-8; // acceptance bound on the squared-length residual
  int max_iterations = 80;
  GenericityPolicy rigidity_policy = {};
};

// Heuristic 2D enumeration: multi-start damped Newton on the
// squared-length system with the gauge pinned (vertex 0 at the origin,
// vertex 1 on the positive x-axis, reflection representative fixed),
// clustering converged solutions by float g-matrix distance. Throws
// NotLocallyRigid when the graph is generically flexible in the plane.
// Starts run independently (OpenMP) with per-start seeds, so results do
// not depend on scheduling.
RealizationSet enumerate_2d_heuristic(const Graph& g, const std::vector<double>& measurements,
                                      const Enum2DOptions& options = {});

struct ParityReport {
  int classes = 0;
  bool even = false;
  Exactness exactness = Exactness::Exact;
  double residual_max = 0.0;
  bool theorem_applies = false;  // even-count statement (GGF, locally rigid)
  bool consistent_with_theory = false;
  std::string detail;
};

// Checks the class count against the applicable prediction for the
// graph's verdict: GGF expects an even count, GGR expects exactly one
// class, and the flexible / small cases carry no prediction.
ParityReport parity_report(const RealizationSet& rs, const GGRVerdict& verdict);

}  // namespace rigiditylab
