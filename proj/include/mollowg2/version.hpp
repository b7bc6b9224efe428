#pragma once

namespace mollowg2 {

inline constexpr const char* version = "0.1.0";

} // namespace mollowg2
