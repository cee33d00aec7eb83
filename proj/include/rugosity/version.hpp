#pragma once

namespace rugosity {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rugosity
