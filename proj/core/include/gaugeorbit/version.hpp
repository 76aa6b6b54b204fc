#pragma once

namespace gaugeorbit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gaugeorbit
