#pragma once

namespace hellycover {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hellycover
