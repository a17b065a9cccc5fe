#pragma once

namespace gencase {

inline constexpr const char* kVersion = "0.1.0";

} // namespace gencase
