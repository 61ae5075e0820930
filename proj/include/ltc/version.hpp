#pragma once

namespace ltc {

inline constexpr const char* kVersion = "0.1.0";

} // namespace ltc
