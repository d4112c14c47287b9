#pragma once

namespace opinion {

inline constexpr const char* kToolName = "opiniond";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace opinion
