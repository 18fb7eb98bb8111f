#pragma once

namespace cirag {

inline constexpr const char* kEngineVersion = "0.1.0";

} // namespace cirag
