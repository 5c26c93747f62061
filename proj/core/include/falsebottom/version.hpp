#pragma once

namespace falsebottom {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace falsebottom
