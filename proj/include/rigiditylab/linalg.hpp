#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rigiditylab/matrix.hpp"

namespace rigiditylab {

// Execution mode for the elimination kernels. The serial path is the
// reference implementation; the parallel path distributes row updates with
// OpenMP. Both produce identical results since the arithmetic is exact.
enum class ExecMode { Serial, Parallel, Auto };

// Side length at or above which Auto switches to the parallel kernels.
constexpr size_t kParallelThreshold = 48;

struct InertiaSignature {
  int neg = 0;
  int pos = 0;
  int zero = 0;

  int side() const { return neg + pos + zero; }
  friend bool operator==(const InertiaSignature&, const InertiaSignature&) = default;
};

// Exact rank by fraction-free (Bareiss) elimination after clearing row
// denominators.
size_t rank(const RationalMatrix& m, ExecMode mode = ExecMode::Auto);
size_t rank(const ComplexMatrix& m, ExecMode mode = ExecMode::Auto);

// Basis of {x : m x = 0}. Vectors are exact and linearly independent;
// their count is cols - rank.
std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& m,
                                                   ExecMode mode = ExecMode::Auto);
std::vector<std::vector<GaussianRational>> nullspace_basis(const ComplexMatrix& m,
                                                           ExecMode mode = ExecMode::Auto);

// Inertia (neg, pos, zero counts) of a real symmetric matrix via
// symmetrically pivoted exact LDL^T congruence reduction. No tolerances.
// Throws NotSymmetric / NotReal.
InertiaSignature inertia(const RationalMatrix& m, ExecMode mode = ExecMode::Auto);
InertiaSignature inertia(const ComplexMatrix& m, ExecMode mode = ExecMode::Auto);

// Full congruence diagonalization m = basis^T * diag(diag) * basis with an
// invertible rational basis. Used where the factor itself is needed.
struct SymmetricDiagonalization {
  std::vector<Rational> diag;
  RationalMatrix basis;
};
SymmetricDiagonalization symmetric_diagonalize(const RationalMatrix& m);

// Exact inverse; nullopt if singular.
std::optional<RationalMatrix> try_invert(const RationalMatrix& m);
std::optional<ComplexMatrix> try_invert(const ComplexMatrix& m);

// Solves A x = b exactly; nullopt if inconsistent or underdetermined pick
// is impossible (A must have full column rank for a unique solution; a
// consistent system with free columns returns one solution with free
// variables set to zero).
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);
std::optional<std::vector<GaussianRational>> solve(const ComplexMatrix& a,
                                                   const std::vector<GaussianRational>& b);

// Signature matrix diag(-1 x s, +1 x (d - s)).
RationalMatrix signature_matrix(int d, int s);

// Exact element of the orthogonal group of the form with signature
// matrix S = signature_matrix(dim, signature_s), built by a Cayley
// transform of a random S-skew matrix: O = (I - A)(I + A)^-1 with
// (SA)^t = -SA, so O^t S O = S identically. `flip` composes with
// diag(-1, 1, ..., 1) to reach the other group component.
// Redraws internally when I + A is singular; throws SingularCayley after
// `retries` failed draws.
RationalMatrix cayley_orthogonal(std::uint64_t skew_seed, int dim, int signature_s,
                                 bool flip = false, int retries = 3);

}  // namespace rigiditylab
