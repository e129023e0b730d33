#include "salz/bt_dictionary.hpp"

#include <algorithm>

namespace salz {

BtDictionary::BtDictionary(std::span<const std::uint8_t> text, std::uint32_t dict_len,
                           std::uint32_t lab_cap)
    : text_(text),
      dict_len_(dict_len),
      lab_cap_(lab_cap),
      ring_(static_cast<std::uint64_t>(dict_len) + lab_cap + 1),
      anchor_(dict_len),
      parent_(ring_, free_slot),
      left_(ring_, nil),
      right_(ring_, nil) {
    if (dict_len == 0 || lab_cap == 0)
        throw ContractViolation("tree dictionary needs non-empty window regions");
    if (text.size() < dict_len)
        throw ContractViolation("tree dictionary text shorter than the dictionary");
    for (std::uint64_t p = 0; p < dict_len; ++p) insert(p);
}

std::uint64_t BtDictionary::pos_of(std::uint32_t s) const {
    const std::uint64_t hi = anchor_ + lab_cap_;
    const std::uint64_t diff = (hi - s) % ring_;
    return hi - diff;
}

int BtDictionary::compare(std::uint64_t a, std::uint64_t b, std::uint32_t* common) const {
    const std::uint64_t la = std::min<std::uint64_t>(lab_cap_, text_.size() - a);
    const std::uint64_t lb = std::min<std::uint64_t>(lab_cap_, text_.size() - b);
    const std::uint64_t lim = std::min(la, lb);
    std::uint64_t c = 0;
    while (c < lim && text_[a + c] == text_[b + c]) ++c;
    if (common) *common = static_cast<std::uint32_t>(c);
    if (c < lim) return text_[a + c] < text_[b + c] ? -1 : 1;
    if (la != lb) return la < lb ? -1 : 1;  // shorter key sorts first
    return a < b ? -1 : (a > b ? 1 : 0);
}

BtDictionary::Best BtDictionary::find(std::uint64_t at, std::uint32_t max_len) const {
    Best best;
    std::uint64_t trunc_pos = 0;
    std::uint32_t trunc_common = 0;
    std::int32_t cur = root_;
    while (cur != nil) {
        const std::uint64_t p = pos_of(static_cast<std::uint32_t>(cur));
        std::uint32_t common = 0;
        const int c = compare(at, p, &common);
        const std::uint64_t cap = std::min({static_cast<std::uint64_t>(common), at - p,
                                            static_cast<std::uint64_t>(max_len)});
        if (cap > best.len) best = {p, static_cast<std::uint32_t>(cap)};
        if (common > at - p && common > trunc_common) {
            trunc_pos = p;
            trunc_common = common;
        }
        cur = c < 0 ? left_[cur] : right_[cur];
    }

    // A node whose shared prefix got cut at (at - p) marks a run: the bytes at
    // `at` repeat with period d = at - p. Earlier occurrences of the period
    // carry the same prefix with a looser cap, so walk them until the cap no
    // longer binds. This recovers full-length matches inside runs, which the
    // key-ordered descent alone cannot see.
    if (trunc_common > 0 && std::min(trunc_common, max_len) > best.len) {
        const std::uint64_t d = at - trunc_pos;
        const std::uint64_t limit =
            std::min<std::uint64_t>(max_len, text_.size() - at);
        for (std::uint64_t k = 2; (k - 1) * d < limit && k * d <= at; ++k) {
            const std::uint64_t p = at - k * d;
            if (at - p > dict_len_) break;
            std::uint64_t common = 0;
            while (common < limit && text_[p + common] == text_[at + common]) ++common;
            const std::uint64_t cap = std::min(common, k * d);
            if (cap > best.len) best = {p, static_cast<std::uint32_t>(cap)};
            if (cap == limit) break;  // nothing longer exists
        }
    }
    return best;
}

void BtDictionary::insert(std::uint64_t pos) {
    const std::uint32_t s = slot(pos);
    if (parent_[s] != free_slot)
        throw ContractViolation("tree slot still occupied by a live position");
    left_[s] = right_[s] = nil;
    if (root_ == nil) {
        root_ = static_cast<std::int32_t>(s);
        parent_[s] = nil;
        ++count_;
        return;
    }
    std::int32_t cur = root_;
    for (;;) {
        const int c = compare(pos, pos_of(static_cast<std::uint32_t>(cur)), nullptr);
        std::int32_t& link = c < 0 ? left_[cur] : right_[cur];
        if (link == nil) {
            link = static_cast<std::int32_t>(s);
            parent_[s] = cur;
            break;
        }
        cur = link;
    }
    ++count_;
}

void BtDictionary::erase(std::uint64_t pos) {
    const std::uint32_t s = slot(pos);
    if (parent_[s] == free_slot) return;

    std::int32_t repl;
    if (left_[s] == nil) {
        repl = right_[s];
    } else if (right_[s] == nil) {
        repl = left_[s];
    } else {
        // the predecessor (rightmost node of the left subtree) takes s's place
        std::int32_t r = left_[s];
        while (right_[r] != nil) r = right_[r];
        if (parent_[r] != static_cast<std::int32_t>(s)) {
            right_[parent_[r]] = left_[r];
            if (left_[r] != nil) parent_[left_[r]] = parent_[r];
            left_[r] = left_[s];
            parent_[left_[s]] = r;
        }
        right_[r] = right_[s];
        parent_[right_[s]] = r;
        repl = r;
    }

    if (parent_[s] == nil) root_ = repl;
    else if (left_[parent_[s]] == static_cast<std::int32_t>(s)) left_[parent_[s]] = repl;
    else right_[parent_[s]] = repl;
    if (repl != nil) parent_[repl] = parent_[s];
    parent_[s] = free_slot;
    --count_;
}

std::vector<std::uint64_t> BtDictionary::in_order() const {
    std::vector<std::uint64_t> out;
    std::vector<std::int32_t> stack;
    std::int32_t cur = root_;
    while (cur != nil || !stack.empty()) {
        while (cur != nil) {
            stack.push_back(cur);
            cur = left_[cur];
        }
        cur = stack.back();
        stack.pop_back();
        out.push_back(pos_of(static_cast<std::uint32_t>(cur)));
        cur = right_[cur];
    }
    return out;
}

}  // namespace salz
