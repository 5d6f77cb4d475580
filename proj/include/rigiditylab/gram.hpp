#pragma once

#include <complex>
#include <vector>

#include "rigiditylab/framework.hpp"
#include "rigiditylab/linalg.hpp"

namespace rigiditylab {

// Conjugation-free Gram matrix of a configuration relative to vertex 0:
// after translating vertex 0 to the origin, entry (t, u) is the value of
// the space's bilinear form on the vectors of vertices t+1 and u+1. It is
// the canonical congruence-class representative: two configurations are
// congruent exactly when their g-matrices agree.
struct GMatrix {
  int side = 0;                 // v - 1
  ComplexMatrix entries;        // symmetric
  int origin_vertex = 0;        // always 0; kept explicit in serialized form

  bool is_real() const;
  RationalMatrix real_entries_checked() const;  // throws NotReal
};

GMatrix gram(const Configuration& p, const SpaceDescriptor& space);
GMatrix gram(const Framework& f);

// Squared length of edge {t, u} read off the g-matrix (vertex labels of
// the original configuration; t = 0 uses the diagonal special case).
GaussianRational pi_tu(const GMatrix& m, int t, int u);

// All-pairs squared-length matrix (v x v, zero diagonal).
ComplexMatrix pi_K(const GMatrix& m);

// Squared lengths of the given graph's edges, in edge order. Satisfies
// pi_E(gram(f)) == edge_measurements(f).
std::vector<GaussianRational> pi_E(const GMatrix& m, const Graph& graph);

// Inertia of a real g-matrix. For an s-valued configuration with
// full-dimensional affine span this is (s, d-s, v-1-d).
InertiaSignature gmatrix_signature(const GMatrix& m);

// s-valued configuration recovered from a real g-matrix, kept in a
// scaled-row representation: actual coordinates are
//   p(u)_j = sqrt(scale_sq[j]) * row[j][u],   times i for j < s.
// The square roots never need to be materialized; gram(), s-valuedness
// and signature all evaluate exactly through the stored data.
struct SValuedRealization {
  int ambient_d = 0;                       // dimension of the target space
  int s = 0;                               // imaginary row count
  std::vector<std::vector<Rational>> rows; // rank many rows of length v-1
  std::vector<Rational> scale_sq;          // positive squared row scales

  int rank() const { return static_cast<int>(rows.size()); }
  int side() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }

  // Exact g-matrix of the represented configuration.
  GMatrix gram() const;
  bool reproduces(const GMatrix& m) const;

  // Floating-point coordinates (vertex 0 at the origin) for reporting.
  std::vector<std::vector<std::complex<double>>> materialize() const;
};

// Constructive inverse of the signature law: a real g-matrix of rank
// <= d factors as P^t S P with exactly inertia(m).neg imaginary rows.
// Throws NotReal / NotSymmetric / RankExceedsDimension.
SValuedRealization configuration_from_real_gmatrix(const GMatrix& m, int d);

struct SignatureReport {
  std::vector<size_t> mismatched;             // indices whose inertia differs
  std::vector<InertiaSignature> signatures;   // one per input
  bool all_match() const { return mismatched.empty(); }
};

// Checks every matrix in `ms` against the expected inertia.
SignatureReport signature_consistency_check(const std::vector<GMatrix>& ms,
                                            const InertiaSignature& expected);

}  // namespace rigiditylab
