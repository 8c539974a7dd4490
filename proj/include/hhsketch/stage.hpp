#pragma once
// A single hash-indexed counter array: the building block every sketch here
// is composed of. Counters saturate at the window size and floor at zero.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "audit.hpp"

namespace hhsketch {

// k unique flows over a width-w table.
inline double load_factor(std::uint64_t unique_flows, std::uint32_t width) {
    if (width == 0) throw std::invalid_argument("load_factor: width must be >= 1");
    return static_cast<double>(unique_flows) / static_cast<double>(width);
}

// Expected collisions per table entry when k unique flows hash uniformly into
// a width-w table: lambda - 1 + (1 - 1/w)^k.
inline double expected_collisions(std::uint64_t unique_flows, std::uint32_t width) {
    if (width == 0) throw std::invalid_argument("expected_collisions: width must be >= 1");
    const double lam = load_factor(unique_flows, width);
    const double p_empty = std::pow(1.0 - 1.0 / static_cast<double>(width),
                                    static_cast<double>(unique_flows));
    return lam - 1.0 + p_empty;
}

class SketchStage {
public:
    SketchStage(std::uint32_t width, std::uint32_t clamp_max)
        : width_(width), clamp_max_(clamp_max), counters_(width, 0) {
        if (width == 0) throw std::invalid_argument("SketchStage: width must be >= 1");
    }

    std::uint32_t width() const { return width_; }
    std::uint32_t clamp_max() const { return clamp_max_; }
    std::uint32_t value(std::uint32_t cell) const { return counters_.at(cell); }
    const std::vector<std::uint32_t>& counters() const { return counters_; }

    // Saturating increment; returns the post-increment value.
    std::uint32_t increment_cell(std::uint32_t cell) {
        std::uint32_t& c = counters_[cell];
        if (c < clamp_max_) ++c;
        note_rmw(cell);
        return c;
    }

    // Increment that wraps to zero when the counter reaches wrap_at. Returns
    // wrap_at when the wrap fires, the plain post-increment value otherwise.
    // One register action either way.
    std::uint32_t increment_wrap(std::uint32_t cell, std::uint32_t wrap_at) {
        std::uint32_t& c = counters_[cell];
        ++c;
        std::uint32_t post = c;
        if (c >= wrap_at) c = 0;
        note_rmw(cell);
        return post;
    }

    // Floored decrement; returns the post-decrement value.
    std::uint32_t decrement_cell(std::uint32_t cell, std::uint32_t amount = 1) {
        std::uint32_t& c = counters_[cell];
        c = (c > amount) ? c - amount : 0;
        note_rmw(cell);
        return c;
    }

    void zero_cell(std::uint32_t cell) {
        counters_[cell] = 0;
        note_rmw(cell);
    }

    void note_read(std::uint32_t cell) const {
        if (audit_) audit_->on_read(array_id(cell));
    }

    // Control-plane reset: not a per-packet register action, so not audited.
    void clear() { std::fill(counters_.begin(), counters_.end(), 0u); }

    std::uint64_t sum() const {
        return std::accumulate(counters_.begin(), counters_.end(), std::uint64_t{0});
    }

    std::uint32_t occupied() const {
        std::uint32_t n = 0;
        for (auto c : counters_)
            if (c > 0) ++n;
        return n;
    }

    void attach_audit(AccessAudit* audit, const std::string& name) {
        audit_ = audit;
        ids_[0] = ids_[1] = audit->register_array(name);
        split_ = false;
    }

    // Two logical half-arrays keyed by the cell index's low bit; used by the
    // split window variants so each half stays within the one-access budget.
    void attach_split_audit(AccessAudit* audit, const std::string& name) {
        audit_ = audit;
        ids_[0] = audit->register_array(name + ".even");
        ids_[1] = audit->register_array(name + ".odd");
        split_ = true;
    }

private:
    AccessAudit::ArrayId array_id(std::uint32_t cell) const {
        return ids_[split_ ? (cell & 1) : 0];
    }
    void note_rmw(std::uint32_t cell) {
        if (audit_) audit_->on_rmw(array_id(cell));
    }

    std::uint32_t width_;
    std::uint32_t clamp_max_;
    std::vector<std::uint32_t> counters_;
    AccessAudit* audit_ = nullptr;
    AccessAudit::ArrayId ids_[2] = {0, 0};
    bool split_ = false;
};

} // namespace hhsketch
