#pragma once

namespace restocast {

inline constexpr const char* kVersion = "0.1.0";

} // namespace restocast
