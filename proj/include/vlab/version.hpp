#pragma once

namespace vlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace vlab
