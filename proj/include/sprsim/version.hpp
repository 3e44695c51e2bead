#pragma once

namespace sprsim {
inline constexpr const char* kVersion = "0.1.0";
}
