#pragma once

namespace acg {

inline constexpr const char* kToolName = "acg";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace acg
