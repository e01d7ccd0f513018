#pragma once

namespace entdyn {

inline constexpr const char* kVersion = "0.1.0";

} // namespace entdyn
