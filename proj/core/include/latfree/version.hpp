#pragma once

namespace latfree {

inline constexpr const char* kVersion = "0.1.0";

} // namespace latfree
