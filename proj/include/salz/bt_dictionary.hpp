#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "salz/core.hpp"

namespace salz {

// Binary search tree over the live dictionary positions of a sliding window,
// three integers (parent/left/right) per node. Keys are the up-to-lab_cap
// byte strings starting at each position, with the position itself as a final
// tie-break so byte-equal keys still get distinct nodes; that keeps one node
// per live position and makes deletion purely structural. Node slots are
// assigned position mod (dict_len + lab_cap + 1): the live range never spans
// more than dict_len + lab_cap positions, so slots never collide.
class BtDictionary {
public:
    // Seeds the tree with positions [0, dict_len); text must hold at least
    // dict_len bytes and outlive the tree.
    BtDictionary(std::span<const std::uint8_t> text, std::uint32_t dict_len,
                 std::uint32_t lab_cap);

    struct Best {
        std::uint64_t pos = 0;
        std::uint32_t len = 0;
    };

    // Longest key prefix shared with the string at `at`, capped at max_len and
    // at (at - candidate) so the match never reaches past the dictionary end.
    // When the cap truncates a periodic match the earlier occurrences of the
    // period are probed as well, so runs still yield full-length matches; in
    // rare mixed-period texts the result can fall short of an exhaustive
    // scan, which only costs ratio - every returned length is byte-verified.
    Best find(std::uint64_t at, std::uint32_t max_len) const;

    void insert(std::uint64_t pos);
    void erase(std::uint64_t pos);

    // Move the coding position forward; it anchors the slot -> position
    // mapping and must stay within one window of every live node.
    void advance(std::uint64_t coding_pos) { anchor_ = coding_pos; }

    std::uint32_t node_count() const { return count_; }
    std::uint64_t allocated_bytes() const {
        return 3 * sizeof(std::int32_t) * parent_.size();
    }

    // In-order traversal of the stored positions (test hook).
    std::vector<std::uint64_t> in_order() const;

private:
    static constexpr std::int32_t nil = -1;
    static constexpr std::int32_t free_slot = -2;

    std::uint32_t slot(std::uint64_t pos) const { return static_cast<std::uint32_t>(pos % ring_); }
    std::uint64_t pos_of(std::uint32_t s) const;
    // -1 / +1 ordering of the keys at positions a and b; *common (optional)
    // receives the length of their shared byte prefix
    int compare(std::uint64_t a, std::uint64_t b, std::uint32_t* common) const;

    std::span<const std::uint8_t> text_;
    std::uint32_t dict_len_ = 0;
    std::uint32_t lab_cap_ = 0;
    std::uint64_t ring_ = 0;  // dict_len + lab_cap + 1 slots
    std::uint64_t anchor_ = 0;
    std::int32_t root_ = nil;
    std::uint32_t count_ = 0;
    std::vector<std::int32_t> parent_, left_, right_;
};

}  // namespace salz
