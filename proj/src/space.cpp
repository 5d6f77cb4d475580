#include "rigiditylab/space.hpp"

namespace rigiditylab {

void SpaceDescriptor::validate() const {
  require(d >= 0, Errc::ParseError, "negative dimension");
  switch (kind) {
    case SpaceKind::Euclidean:
    case SpaceKind::Complex:
      require(s == 0, Errc::SignatureOutOfRange, kind_name() + " requires s = 0");
      break;
    case SpaceKind::Pseudo:
      require(0 <= s && s <= d, Errc::SignatureOutOfRange, "pseudo requires 0 <= s <= d");
      break;
    case SpaceKind::Minkowski:
    case SpaceKind::Hyperbolic:
      require(s == 1, Errc::SignatureOutOfRange, kind_name() + " requires s = 1");
      require(d >= 1, Errc::SignatureOutOfRange, kind_name() + " requires d >= 1");
      break;
  }
}

std::string SpaceDescriptor::kind_name() const {
  switch (kind) {
    case SpaceKind::Euclidean: return "euclidean";
    case SpaceKind::Pseudo: return "pseudo";
    case SpaceKind::Complex: return "complex";
    case SpaceKind::Minkowski: return "minkowski";
    case SpaceKind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

SpaceKind space_kind_from_name(const std::string& name) {
  if (name == "euclidean") return SpaceKind::Euclidean;
  if (name == "pseudo") return SpaceKind::Pseudo;
  if (name == "complex") return SpaceKind::Complex;
  if (name == "minkowski") return SpaceKind::Minkowski;
  if (name == "hyperbolic") return SpaceKind::Hyperbolic;
  fail(Errc::ParseError, "unknown space kind '" + name + "'");
}

}  // namespace rigiditylab
