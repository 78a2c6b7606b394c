#pragma once

namespace secrecy {

inline constexpr const char* kToolName = "secrecy_sim";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace secrecy
