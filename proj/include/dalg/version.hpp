#pragma once

namespace dalg {
inline constexpr const char* version = "0.1.0";
}
