#pragma once

namespace qhsing {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace qhsing
