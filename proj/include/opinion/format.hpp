#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace opinion {

/// 6 significant digits, the fixed precision of every emitted number.
std::string format_g6(double v);

/// Shortest round-trip formatting, used by config serialization and labels.
std::string format_exact(double v);

std::uint64_t fnv1a64(std::string_view data);

}  // namespace opinion
