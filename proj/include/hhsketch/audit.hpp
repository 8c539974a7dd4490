#pragma once
// Per-packet register-array access accounting. The modeled hardware allows a
// single read-modify-write per register array per packet; the audit counts
// what each structure actually does so violations are visible, not hidden.
//
// A rmw counts as one read plus one write plus one rmw. Callers close each
// packet with end_packet(), which folds the packet's counts into per-array
// maxima and clears them. Control-plane actions (whole-structure flushes) are
// deliberately not recorded.

#include <cstdint>
#include <string>
#include <vector>

namespace hhsketch {

struct ArrayAccessCounts {
    std::string name;
    // current packet
    std::uint32_t reads = 0;
    std::uint32_t writes = 0;
    std::uint32_t rmw = 0;
    // per-packet maxima over all closed packets
    std::uint32_t max_reads = 0;
    std::uint32_t max_writes = 0;
    std::uint32_t max_rmw = 0;
};

class AccessAudit {
public:
    using ArrayId = std::size_t;

    ArrayId register_array(std::string name) {
        arrays_.push_back(ArrayAccessCounts{std::move(name)});
        return arrays_.size() - 1;
    }

    void on_read(ArrayId id) { ++arrays_[id].reads; }
    void on_write(ArrayId id) { ++arrays_[id].writes; }
    void on_rmw(ArrayId id) {
        auto& a = arrays_[id];
        ++a.reads;
        ++a.writes;
        ++a.rmw;
    }

    // Closes the current packet: folds counts into the maxima and clears them.
    void end_packet() {
        for (auto& a : arrays_) {
            if (a.reads > a.max_reads) a.max_reads = a.reads;
            if (a.writes > a.max_writes) a.max_writes = a.writes;
            if (a.rmw > a.max_rmw) a.max_rmw = a.rmw;
            a.reads = a.writes = a.rmw = 0;
        }
    }

    // Snapshot of the current packet's counts, then closes the packet.
    std::vector<ArrayAccessCounts> report_and_reset() {
        std::vector<ArrayAccessCounts> snap = arrays_;
        end_packet();
        return snap;
    }

    const std::vector<ArrayAccessCounts>& arrays() const { return arrays_; }

    const ArrayAccessCounts* find(const std::string& name) const {
        for (const auto& a : arrays_)
            if (a.name == name) return &a;
        return nullptr;
    }

    // Largest per-packet rmw count seen on any array.
    std::uint32_t max_rmw() const {
        std::uint32_t m = 0;
        for (const auto& a : arrays_)
            if (a.max_rmw > m) m = a.max_rmw;
        return m;
    }

    bool over_budget(std::uint32_t rmw_per_array = 1) const { return max_rmw() > rmw_per_array; }

private:
    std::vector<ArrayAccessCounts> arrays_;
};

} // namespace hhsketch
