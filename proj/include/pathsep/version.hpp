#pragma once

namespace pathsep {

inline constexpr const char* kToolName = "pathsep";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace pathsep
