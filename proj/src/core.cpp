#include "sysmod/core.hpp"

#include <cstdlib>

namespace sysmod {

uint64_t default_budget() {
    if (const char* env = std::getenv("SYSMOD_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10'000'000;
}

std::string join_names(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace sysmod
