#pragma once

namespace cohomog7 {

inline constexpr const char* kVersion = "0.1.0";

}
