#pragma once

namespace pcc {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kToolName = "pccsim";

} // namespace pcc
