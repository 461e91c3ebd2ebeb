#pragma once

namespace leavitt {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace leavitt
