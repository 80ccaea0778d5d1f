#pragma once

namespace nbc {

inline constexpr char kVersion[] = "0.1.0";

}  // namespace nbc
