#pragma once

namespace myxo {

inline constexpr const char* kVersion = "0.1.0";

} // namespace myxo
