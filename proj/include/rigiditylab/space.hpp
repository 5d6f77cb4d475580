#pragma once

#include <string>

#include "rigiditylab/errors.hpp"
#include "rigiditylab/linalg.hpp"

namespace rigiditylab {

// Which metric geometry a framework lives in.
//
//   euclidean  R^d,   |w|^2 = sum w_i^2
//   pseudo     R^d,   |w|^2 = -sum_{i<s} w_i^2 + sum_{i>=s} w_i^2
//   complex    C^d,   |w|^2 = sum w_i^2 (no conjugation)
//   minkowski  R^d with the first coordinate negated (pseudo, s = 1);
//              used as the ambient model for hyperbolic (d-1)-space
//   hyperbolic H^d, modeled on the sheet <x,x> = -1, x_1 > 0 of
//              minkowski (d+1)-space; handled by the cone/transfer module
enum class SpaceKind { Euclidean, Pseudo, Complex, Minkowski, Hyperbolic };

struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::Euclidean;
  int d = 0;  // space dimension (hyperbolic: dimension of H^d)
  int s = 0;  // negated-coordinate count (pseudo / minkowski only)

  static SpaceDescriptor euclidean(int d) { return {SpaceKind::Euclidean, d, 0}; }
  static SpaceDescriptor pseudo(int d, int s) { return {SpaceKind::Pseudo, d, s}; }
  static SpaceDescriptor complex_space(int d) { return {SpaceKind::Complex, d, 0}; }
  static SpaceDescriptor minkowski(int d) { return {SpaceKind::Minkowski, d, 1}; }
  static SpaceDescriptor hyperbolic(int d) { return {SpaceKind::Hyperbolic, d, 1}; }

  // Number of coordinates a point carries.
  int ambient_dim() const { return kind == SpaceKind::Hyperbolic ? d + 1 : d; }

  // Count of negated coordinate directions in the ambient bilinear form.
  int neg_count() const {
    switch (kind) {
      case SpaceKind::Euclidean:
      case SpaceKind::Complex: return 0;
      case SpaceKind::Pseudo: return s;
      case SpaceKind::Minkowski:
      case SpaceKind::Hyperbolic: return 1;
    }
    return 0;
  }

  bool is_complex() const { return kind == SpaceKind::Complex; }
  bool is_real() const { return !is_complex(); }
  // Spaces whose metric negates exactly the first coordinate.
  bool is_minkowski_like() const {
    return kind == SpaceKind::Minkowski || (kind == SpaceKind::Pseudo && s == 1);
  }

  // Signature matrix of the ambient bilinear form (identity for
  // euclidean/complex).
  RationalMatrix form_matrix() const { return signature_matrix(ambient_dim(), neg_count()); }

  void validate() const;
  std::string kind_name() const;

  friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;
};

SpaceKind space_kind_from_name(const std::string& name);

}  // namespace rigiditylab
