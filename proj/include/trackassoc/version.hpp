#pragma once

namespace trackassoc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace trackassoc
