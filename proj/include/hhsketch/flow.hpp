#pragma once
// 5-tuple flow identifiers, the packets that carry them, and IPv4 helpers.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hhsketch {

// IPv4 5-tuple. The wire form is exactly 13 bytes, big-endian per field, in
// the order src_ip, dst_ip, protocol, src_port, dst_port. Equality of two
// FlowIds is equality of their wire forms.
struct FlowId {
    std::uint32_t src_ip = 0;
    std::uint32_t dst_ip = 0;
    std::uint8_t protocol = 0;
    std::uint16_t src_port = 0;
    std::uint16_t dst_port = 0;

    static constexpr std::size_t kWireSize = 13;

    std::array<std::uint8_t, kWireSize> to_bytes() const {
        std::array<std::uint8_t, kWireSize> b{};
        b[0] = static_cast<std::uint8_t>(src_ip >> 24);
        b[1] = static_cast<std::uint8_t>(src_ip >> 16);
        b[2] = static_cast<std::uint8_t>(src_ip >> 8);
        b[3] = static_cast<std::uint8_t>(src_ip);
        b[4] = static_cast<std::uint8_t>(dst_ip >> 24);
        b[5] = static_cast<std::uint8_t>(dst_ip >> 16);
        b[6] = static_cast<std::uint8_t>(dst_ip >> 8);
        b[7] = static_cast<std::uint8_t>(dst_ip);
        b[8] = protocol;
        b[9] = static_cast<std::uint8_t>(src_port >> 8);
        b[10] = static_cast<std::uint8_t>(src_port);
        b[11] = static_cast<std::uint8_t>(dst_port >> 8);
        b[12] = static_cast<std::uint8_t>(dst_port);
        return b;
    }

    bool operator==(const FlowId&) const = default;
};

// One position in a packet stream; seq increases by 1 per packet.
struct Packet {
    FlowId flow;
    std::uint64_t seq = 0;
};

// FNV-1a over the wire form; used for host-side containers only, never as a
// sketch index.
struct FlowIdHash {
    std::size_t operator()(const FlowId& f) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint8_t x : f.to_bytes()) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

inline std::uint32_t parse_ipv4(const std::string& s) {
    std::uint32_t out = 0;
    std::size_t pos = 0;
    for (int part = 0; part < 4; ++part) {
        if (pos >= s.size()) throw std::invalid_argument("bad IPv4 address: " + s);
        std::uint32_t v = 0;
        std::size_t digits = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            v = v * 10 + static_cast<std::uint32_t>(s[pos] - '0');
            ++pos;
            ++digits;
            if (v > 255 || digits > 3) throw std::invalid_argument("bad IPv4 address: " + s);
        }
        if (digits == 0) throw std::invalid_argument("bad IPv4 address: " + s);
        if (part < 3) {
            if (pos >= s.size() || s[pos] != '.') throw std::invalid_argument("bad IPv4 address: " + s);
            ++pos;
        }
        out = (out << 8) | v;
    }
    if (pos != s.size()) throw std::invalid_argument("bad IPv4 address: " + s);
    return out;
}

inline std::string format_ipv4(std::uint32_t ip) {
    return std::to_string(ip >> 24) + '.' + std::to_string((ip >> 16) & 0xFF) + '.' +
           std::to_string((ip >> 8) & 0xFF) + '.' + std::to_string(ip & 0xFF);
}

} // namespace hhsketch
