#pragma once

namespace loopforge {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace loopforge
