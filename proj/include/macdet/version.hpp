#pragma once

namespace macdet {

inline constexpr const char* engine_version = "0.1.0";

}  // namespace macdet
