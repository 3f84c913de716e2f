#pragma once

namespace agelab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace agelab
