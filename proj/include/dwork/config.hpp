#pragma once

#include <cstdint>
#include <string>

namespace dwork {

inline constexpr const char* kVersion = "1.0.0";

struct RunConfig {
    int precision_bits = 128;
    std::uint64_t field_cap = std::uint64_t(1) << 24;
    std::uint64_t work_cap = 1000000000ULL;
    std::uint64_t seed = 0;
    std::uint64_t fft_threshold = 4096;
    // (q-1)^n tuples below which bulk fiber counts come from enumeration
    std::uint64_t brute_bulk_limit = 200000;
    std::string cache_dir;
    bool force = false;
};

}  // namespace dwork
