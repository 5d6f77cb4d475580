#pragma once

namespace rigiditylab {

inline constexpr const char* kToolName = "rigiditylab";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace rigiditylab
