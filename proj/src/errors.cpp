#include "rigiditylab/errors.hpp"

namespace rigiditylab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::GraphMismatch: return "GraphMismatch";
    case Errc::SpaceMismatch: return "SpaceMismatch";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::SameVertex: return "SameVertex";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotReal: return "NotReal";
    case Errc::NotCongruent: return "NotCongruent";
    case Errc::NotEquivalent: return "NotEquivalent";
    case Errc::DegenerateSpan: return "DegenerateSpan";
    case Errc::RankExceedsDimension: return "RankExceedsDimension";
    case Errc::SingularCayley: return "SingularCayley";
    case Errc::UnsupportedSpace: return "UnsupportedSpace";
    case Errc::AveragingViolation: return "AveragingViolation";
    case Errc::ZeroScale: return "ZeroScale";
    case Errc::NotHaarCoordinates: return "NotHaarCoordinates";
    case Errc::NoReflectableVertex: return "NoReflectableVertex";
    case Errc::SignatureOutOfRange: return "SignatureOutOfRange";
    case Errc::OutsideBall: return "OutsideBall";
    case Errc::NonpositiveScale: return "NonpositiveScale";
    case Errc::NotUpperConed: return "NotUpperConed";
    case Errc::NotSpiky: return "NotSpiky";
    case Errc::NotCylindrical: return "NotCylindrical";
    case Errc::Disconnected: return "Disconnected";
    case Errc::SheetAmbiguous: return "SheetAmbiguous";
    case Errc::NotLocallyRigid: return "NotLocallyRigid";
    case Errc::NonGenericSample: return "NonGenericSample";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "UnknownError";
}

}  // namespace rigiditylab
