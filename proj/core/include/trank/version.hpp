#pragma once

namespace trank {

inline constexpr const char* kToolName = "trank";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace trank
