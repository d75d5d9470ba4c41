#include "partnorm/config.hpp"

#include <cstdlib>
#include <string>

namespace partnorm::config {

namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    try {
        return std::stoull(raw);
    } catch (...) {
        return fallback;
    }
}

}  // namespace

std::uint64_t enumeration_ceiling() {
    static const std::uint64_t v = env_or("PARTNORM_ENUM_CEILING", 1000000);
    return v;
}

unsigned macmahon_n_max() {
    static const unsigned v = static_cast<unsigned>(env_or("PARTNORM_MACMAHON_NMAX", 25));
    return v;
}

unsigned verify_ceiling() {
    static const unsigned v = static_cast<unsigned>(env_or("PARTNORM_VERIFY_CEILING", 40));
    return v;
}

unsigned series_order_max() {
    static const unsigned v = static_cast<unsigned>(env_or("PARTNORM_SERIES_ORDER_MAX", 5000));
    return v;
}

}  // namespace partnorm::config
