#pragma once

namespace acr {

inline constexpr const char* kVersion = "acr 0.1.0";

} // namespace acr
