#include "salz/suffix.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

using namespace salz;

namespace {

oracle::bytes as_bytes(std::string_view s) {
    return oracle::bytes(s.begin(), s.end());
}

}  // namespace

TEST_CASE("suffix array of mississippi") {
    const auto t = as_bytes("mississippi");
    const auto sa = build_suffix_array(t);
    const std::vector<SaIndex> want = {10, 7, 4, 1, 0, 9, 8, 6, 3, 5, 2};
    CHECK(sa.p == want);

    const auto rk = build_rank(sa);
    CHECK(rk.r[10] == 0);
    CHECK(rk.r[0] == 4);
    for (std::size_t j = 0; j < sa.p.size(); ++j) CHECK(rk.r[sa.p[j]] == j);

    const auto lcp = build_lcp(t, sa, rk);
    const std::vector<SaIndex> want_lcp = {0, 1, 1, 4, 0, 0, 1, 0, 2, 1, 3};
    CHECK(lcp.l == want_lcp);
}

TEST_CASE("suffix array edge cases") {
    CHECK(build_suffix_array({}).p.empty());

    const auto one = as_bytes("a");
    CHECK(build_suffix_array(one).p == std::vector<SaIndex>{0});

    const auto distinct = as_bytes("zyxw");
    const auto sa = build_suffix_array(distinct);
    const auto lcp = build_lcp(distinct, sa, build_rank(sa));
    for (auto v : lcp.l) CHECK(v == 0);

    oracle::bytes too_long(max_window_len + 1, 'x');
    CHECK_THROWS_AS(build_suffix_array(too_long), ContractViolation);
}

TEST_CASE("build_rank inverts the permutation") {
    SuffixArray sa;
    sa.p = {2, 0, 1};
    CHECK(build_rank(sa).r == std::vector<SaIndex>{1, 2, 0});
}

TEST_CASE("sa_range finds the first-symbol interval") {
    const auto t = as_bytes("mississippi");
    const auto sa = build_suffix_array(t);

    SUBCASE("'s' covers ranks 7..10") {
        const auto r = sa_range(t, sa, 's');
        REQUIRE(r.has_value());
        CHECK(r->left == 7);
        CHECK(r->right == 10);
        std::vector<SaIndex> positions(sa.p.begin() + r->left, sa.p.begin() + r->right + 1);
        CHECK(positions == std::vector<SaIndex>{6, 3, 5, 2});
    }
    SUBCASE("absent symbol gives an empty result") {
        CHECK_FALSE(sa_range(t, sa, 'z').has_value());
    }
    SUBCASE("random texts agree with a linear filter") {
        std::mt19937 rng(11);
        for (int it = 0; it < 50; ++it) {
            const auto text = oracle::random_bytes(rng, 1 + rng() % 128, 4);
            const auto s = build_suffix_array(text);
            for (unsigned sym = 0; sym < 4; ++sym) {
                std::vector<SaIndex> expect;
                for (std::size_t j = 0; j < s.p.size(); ++j)
                    if (text[s.p[j]] == sym) expect.push_back(static_cast<SaIndex>(j));
                const auto r = sa_range(text, s, static_cast<std::uint8_t>(sym));
                if (expect.empty()) {
                    CHECK_FALSE(r.has_value());
                } else {
                    REQUIRE(r.has_value());
                    CHECK(r->left == expect.front());
                    CHECK(r->right == expect.back());
                }
            }
        }
    }
}

TEST_CASE("longest_match over a rank interval") {
    const auto t = as_bytes("mississippi");
    const auto sa = build_suffix_array(t);

    SUBCASE("greedy finds issi at position 1") {
        const auto pattern = as_bytes("issia");
        const auto r = sa_range(t, sa, 'i');
        REQUIRE(r.has_value());
        CHECK(r->left == 0);
        CHECK(r->right == 3);
        const auto m = longest_match(t, sa, r->left, r->right, pattern, ParseMode::GreedyLongest);
        CHECK(m.pos == 1);
        CHECK(m.len == 4);
    }
    SUBCASE("first-match extends only the leftmost suffix") {
        const auto pattern = as_bytes("issia");
        const auto r = sa_range(t, sa, 'i');
        REQUIRE(r.has_value());
        const auto m = longest_match(t, sa, r->left, r->right, pattern, ParseMode::FirstMatch);
        CHECK(m.pos == 10);  // rank 0 holds the suffix "i"
        CHECK(m.len == 1);
    }
    SUBCASE("unique first byte, second byte mismatch") {
        const auto pattern = as_bytes("mz");
        const auto r = sa_range(t, sa, 'm');
        REQUIRE(r.has_value());
        const auto m = longest_match(t, sa, r->left, r->right, pattern, ParseMode::GreedyLongest);
        CHECK(m.pos == 0);
        CHECK(m.len == 1);
    }
}

TEST_CASE("suffix structures match brute force on random strings") {
    std::mt19937 rng(42);
    for (unsigned alphabet : {2u, 4u, 256u}) {
        for (int it = 0; it < 60; ++it) {
            const auto t = oracle::random_bytes(rng, 1 + rng() % 256, alphabet);
            const auto sa = build_suffix_array(t);
            const auto naive = oracle::naive_suffix_array(t);
            REQUIRE(std::equal(sa.p.begin(), sa.p.end(), naive.begin(), naive.end()));

            const auto lcp = build_lcp(t, sa, build_rank(sa));
            const auto naive_l = oracle::naive_lcp(t, naive);
            REQUIRE(std::equal(lcp.l.begin(), lcp.l.end(), naive_l.begin(), naive_l.end()));
        }
    }
}

TEST_CASE("greedy longest_match equals the naive scanner") {
    std::mt19937 rng(43);
    for (int it = 0; it < 200; ++it) {
        const auto t = oracle::random_bytes(rng, 2 + rng() % 200, it % 2 ? 4 : 8);
        const auto pattern = oracle::random_bytes(rng, 1 + rng() % 32, it % 2 ? 4 : 8);
        const auto sa = build_suffix_array(t);
        const auto naive = oracle::naive_longest_match(t, pattern);
        const auto r = sa_range(t, sa, pattern[0]);
        if (!r.has_value()) {
            CHECK(naive.len == 0);
            continue;
        }
        const auto m = longest_match(t, sa, r->left, r->right, pattern, ParseMode::GreedyLongest);
        CHECK(m.len == naive.len);
        CHECK(m.pos == naive.pos);

        const auto f = longest_match(t, sa, r->left, r->right, pattern, ParseMode::FirstMatch);
        CHECK(f.len <= m.len);
        CHECK(f.len >= 1);
    }
}

TEST_CASE("update_sliding_sa slides the array without a rebuild") {
    SUBCASE("inserted entries are offset by the dictionary shift") {
        // 16-byte dictionary, 4-byte look-ahead: the look-ahead suffixes land
        // at positions 12..15 of the new dictionary (offset 16 - 4 = 12).
        const auto dict = as_bytes("this_is_the_dict");
        const auto lab = as_bytes("tail");
        oracle::bytes new_dict(dict.begin() + 4, dict.end());
        new_dict.insert(new_dict.end(), lab.begin(), lab.end());

        const auto old_sa = build_suffix_array(dict);
        const auto updated = update_sliding_sa(old_sa, lab, new_dict);

        REQUIRE(updated.p.size() == 16);
        std::vector<bool> seen(16, false);
        for (auto e : updated.p) {
            REQUIRE(e < 16);
            CHECK_FALSE(seen[e]);
            seen[e] = true;
        }

        // Survivors keep their old relative order.
        std::vector<SaIndex> survivors_in, survivors_out;
        for (auto e : old_sa.p)
            if (e >= 4) survivors_in.push_back(static_cast<SaIndex>(e - 4));
        for (auto e : updated.p)
            if (e < 12) survivors_out.push_back(e);
        CHECK(survivors_in == survivors_out);
    }
    SUBCASE("empty look-ahead is the identity") {
        const auto dict = as_bytes("banana");
        const auto sa = build_suffix_array(dict);
        const auto updated = update_sliding_sa(sa, {}, dict);
        CHECK(updated.p == sa.p);
    }
    SUBCASE("look-ahead longer than the dictionary is rejected") {
        const auto dict = as_bytes("ab");
        const auto lab = as_bytes("abc");
        const auto sa = build_suffix_array(dict);
        CHECK_THROWS_AS(update_sliding_sa(sa, lab, lab), ContractViolation);
    }
    SUBCASE("appending the look-ahead can reorder old suffixes") {
        // Old dictionary "abaa": suffixes "a"(3) < "aa"(2) < "abaa"(0). After
        // sliding in "b" the survivors become "ab"(2) and "aab"(1) of "baab",
        // whose lexicographic order is flipped; the update keeps the old
        // order, so the result may legitimately differ from a fresh build.
        const auto dict = as_bytes("abaa");
        const auto lab = as_bytes("b");
        const auto new_dict = as_bytes("baab");
        const auto updated = update_sliding_sa(build_suffix_array(dict), lab, new_dict);

        std::vector<SaIndex> sorted(updated.p.begin(), updated.p.end());
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<SaIndex>{0, 1, 2, 3});

        std::vector<SaIndex> survivors;
        for (auto e : updated.p)
            if (e < 3) survivors.push_back(e);
        CHECK(survivors == std::vector<SaIndex>{2, 1, 0});
    }
    SUBCASE("random slides stay permutations and keep survivor order") {
        std::mt19937 rng(44);
        for (int it = 0; it < 100; ++it) {
            const std::size_t m = 8 + rng() % 120;
            const std::size_t n = 1 + rng() % std::min<std::size_t>(m, 16);
            const auto dict = oracle::random_bytes(rng, m, 4);
            const auto lab = oracle::random_bytes(rng, n, 4);
            oracle::bytes new_dict(dict.begin() + n, dict.end());
            new_dict.insert(new_dict.end(), lab.begin(), lab.end());

            const auto old_sa = build_suffix_array(dict);
            const auto updated = update_sliding_sa(old_sa, lab, new_dict);

            REQUIRE(updated.p.size() == m);
            std::vector<bool> seen(m, false);
            for (auto e : updated.p) {
                REQUIRE(e < m);
                REQUIRE_FALSE(seen[e]);
                seen[e] = true;
            }

            std::vector<SaIndex> in, out;
            for (auto e : old_sa.p)
                if (e >= n) in.push_back(static_cast<SaIndex>(e - n));
            for (auto e : updated.p)
                if (e < m - n) out.push_back(e);
            REQUIRE(in == out);
        }
    }
}
