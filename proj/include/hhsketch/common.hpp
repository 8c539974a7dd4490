#pragma once

#include <cmath>
#include <cstdint>

namespace hhsketch {

// Result of pushing one packet through a detector (sketch or windowed sketch).
struct StepResult {
    std::uint32_t estimate = 0;
    bool is_heavy = false;
    std::uint32_t stages_touched = 0;
};

// floor(fraction * n) for decimal fractions like 0.001. The nudge keeps
// products that are mathematically integral (e.g. 0.01 * 6400) from landing
// one ulp below the integer.
inline std::uint64_t scaled_floor(double fraction, std::uint64_t n) {
    return static_cast<std::uint64_t>(std::floor(fraction * static_cast<double>(n) + 1e-9));
}

// ceil counterpart of scaled_floor, same rationale in the other direction.
inline std::uint64_t ceil_positive(double v) {
    return static_cast<std::uint64_t>(std::ceil(v - 1e-9));
}

} // namespace hhsketch
