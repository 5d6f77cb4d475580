#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigiditylab/framework.hpp"
#include "rigiditylab/pogorelov.hpp"

namespace rigiditylab {

// Sampling policy for the randomized generic decisions: integer
// coordinates in [-bound, bound], with `retries` fresh samples before a
// one-sided failure is accepted.
struct GenericityPolicy {
  int retries = 3;
  std::int64_t bound = 1000000;
};

// e x (v*d) matrix whose kernel consists of the infinitesimal flexes.
// Row of edge {t, u}: block t = (p(t)-p(u))^t S, block u the negation,
// S the space's form matrix (the global factor 2 is dropped).
ComplexMatrix rigidity_matrix(const Framework& f);

// Dimension of the trivial-motion space at a full-span configuration.
inline int trivial_motion_dim(int d) { return d * (d + 1) / 2; }

// Samples a generic configuration and tests rank(R) = v d - d(d+1)/2.
// One full-rank sample certifies rigidity; the failure direction is
// retried per the policy. v <= d+1 reduces to completeness.
bool is_locally_rigid_generic(const Graph& g, const SpaceDescriptor& space, std::uint64_t seed,
                              const GenericityPolicy& policy = {});

// Basis of equilibrium stresses: per-edge weights w with
// sum_u w_tu (p(t) - p(u)) = 0 at every vertex t (the left kernel of the
// rigidity matrix). Every returned vector is re-verified against the
// per-vertex sums.
std::vector<std::vector<GaussianRational>> equilibrium_stress_basis(const Framework& f);

// v x v stress matrix of w: off-diagonal -w_tu on edges, zero elsewhere,
// diagonal completes row sums to zero.
ComplexMatrix stress_matrix(const Graph& g, const std::vector<GaussianRational>& stress);

enum class Verdict { GGR, GGF, FLEXIBLE, SMALL_COMPLETE, SMALL_INCOMPLETE };
enum class Field { Real, Complex };

const char* verdict_name(Verdict v);
const char* field_name(Field f);

struct GGRVerdict {
  Verdict verdict = Verdict::FLEXIBLE;
  int d = 0;
  std::optional<int> s;  // set for pseudo / minkowski / hyperbolic results
  Field field = Field::Real;
  std::string space = "euclidean";
  std::vector<int> ranks;            // observed stress-matrix ranks, per trial
  std::vector<std::uint64_t> seeds;  // configuration seeds, per trial
  std::optional<std::vector<GaussianRational>> witness_stress;
  bool transfer_derived = false;

  bool rigid() const { return verdict == Verdict::GGR || verdict == Verdict::SMALL_COMPLETE; }
};

// Randomized decision of generic global rigidity over R^d or C^d:
// a witnessed equilibrium stress matrix of rank v-d-1 at a generic
// configuration certifies GGR; repeated failure to reach that rank
// (after local rigidity holds) yields GGF. v <= d+1 is decided by
// completeness.
GGRVerdict ggr_test(const Graph& g, int d, Field field, std::uint64_t seed,
                    const GenericityPolicy& policy = {});

// Pseudo-Euclidean verdict, transfer-derived from the euclidean test.
// On GGF with want_witness set, attaches an exact pair of equivalent,
// non-congruent frameworks in pseudo(d, s) when the graph admits the
// vertex-reflection construction.
struct PseudoVerdict {
  GGRVerdict verdict;
  std::optional<FrameworkPair> witness;
};
PseudoVerdict pseudo_ggr_verdict(const Graph& g, int d, int s, std::uint64_t seed,
                                 const GenericityPolicy& policy = {}, bool want_witness = false);

// Averaging: for equivalent f, g returns a = (f+g)/2 and the flex
// (f-g)/2, with R(a) * flex = 0 checked exactly before returning.
struct AveragedPair {
  Framework average;
  Configuration flex;
};
AveragedPair averaging_flex(const Framework& f, const Framework& g);

}  // namespace rigiditylab
