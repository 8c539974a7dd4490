#pragma once
// CRC-16/CCITT-FALSE (poly 0x1021, init 0xFFFF, no reflection, no final xor)
// and the seeded hash family that indexes every sketch stage.
//
// A stage index is CRC16(seed_bytes ++ wire_form(flow)) mod width. Seeds are
// arbitrary byte strings, one per sketch depth; prepending the seed to the
// flow bytes is the pinned convention.

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "flow.hpp"

namespace hhsketch {

namespace detail {

consteval std::array<std::uint16_t, 256> make_crc16_table() {
    std::array<std::uint16_t, 256> t{};
    for (int i = 0; i < 256; ++i) {
        std::uint16_t crc = static_cast<std::uint16_t>(i << 8);
        for (int b = 0; b < 8; ++b) {
            crc = (crc & 0x8000) ? static_cast<std::uint16_t>((crc << 1) ^ 0x1021)
                                 : static_cast<std::uint16_t>(crc << 1);
        }
        t[static_cast<std::size_t>(i)] = crc;
    }
    return t;
}

inline constexpr auto kCrc16Table = make_crc16_table();

} // namespace detail

inline std::uint16_t crc16_update(std::uint16_t crc, std::span<const std::uint8_t> data) {
    for (std::uint8_t b : data) {
        crc = static_cast<std::uint16_t>((crc << 8) ^
                                         detail::kCrc16Table[((crc >> 8) ^ b) & 0xFF]);
    }
    return crc;
}

inline std::uint16_t crc16(std::span<const std::uint8_t> data) {
    return crc16_update(0xFFFF, data);
}

inline std::uint16_t crc16(const std::string& s) {
    return crc16(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
}

class HashFamily {
public:
    explicit HashFamily(std::vector<std::string> seeds) : seeds_(std::move(seeds)) {
        if (seeds_.empty()) throw std::invalid_argument("HashFamily: at least one seed required");
        states_.reserve(seeds_.size());
        for (const auto& s : seeds_) {
            states_.push_back(crc16_update(
                0xFFFF, std::span<const std::uint8_t>(
                            reinterpret_cast<const std::uint8_t*>(s.data()), s.size())));
        }
    }

    // Seeds "base", "base+1", ... as decimal strings, one per depth.
    static HashFamily with_numeric_seeds(std::size_t depth, std::uint64_t base = 0) {
        std::vector<std::string> seeds;
        seeds.reserve(depth);
        for (std::size_t i = 0; i < depth; ++i) seeds.push_back(std::to_string(base + i));
        return HashFamily(std::move(seeds));
    }

    std::size_t depth() const { return seeds_.size(); }
    const std::vector<std::string>& seeds() const { return seeds_; }

    std::uint32_t index(std::size_t depth_index, const FlowId& flow, std::uint32_t width) const {
        if (depth_index >= seeds_.size())
            throw std::out_of_range("HashFamily: depth " + std::to_string(depth_index) +
                                    " out of range (have " + std::to_string(seeds_.size()) +
                                    " seeds)");
        if (width == 0) throw std::invalid_argument("HashFamily: width must be >= 1");
        const auto bytes = flow.to_bytes();
        return crc16_update(states_[depth_index], bytes) % width;
    }

private:
    std::vector<std::string> seeds_;
    std::vector<std::uint16_t> states_; // CRC state after the seed prefix
};

} // namespace hhsketch
