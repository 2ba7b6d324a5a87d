#pragma once

namespace sigenh {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sigenh
