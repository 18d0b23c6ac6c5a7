#pragma once

namespace lepra {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lepra
