#pragma once

#include <stdexcept>
#include <string>

namespace rigiditylab {

// Error codes cover every failure surfaced by the library API. The CLI maps
// them onto exit codes (parse -> 2, domain -> 1, anything else -> 3).
enum class Errc {
  DimensionMismatch,
  GraphMismatch,
  SpaceMismatch,
  LengthMismatch,
  SameVertex,
  NotSymmetric,
  NotReal,
  NotCongruent,
  NotEquivalent,
  DegenerateSpan,
  RankExceedsDimension,
  SingularCayley,
  UnsupportedSpace,
  AveragingViolation,
  ZeroScale,
  NotHaarCoordinates,
  NoReflectableVertex,
  SignatureOutOfRange,
  OutsideBall,
  NonpositiveScale,
  NotUpperConed,
  NotSpiky,
  NotCylindrical,
  Disconnected,
  SheetAmbiguous,
  NotLocallyRigid,
  NonGenericSample,
  ParseError,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool cond, Errc code, const std::string& message) {
  if (!cond) fail(code, message);
}

}  // namespace rigiditylab
