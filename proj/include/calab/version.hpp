#pragma once

namespace calab {
inline constexpr const char* kVersion = "0.1.0";
}
