#include "opinion/format.hpp"

#include <charconv>
#include <cstdio>

namespace opinion {

std::string format_g6(double v) {
    if (v == 0.0) v = 0.0;  // fold -0 into 0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string format_exact(double v) {
    if (v == 0.0) v = 0.0;
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;  // 64 bytes always suffice for a double
    return std::string(buf, end);
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (const unsigned char byte : data) {
        h ^= byte;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace opinion
