#pragma once

#include <utility>
#include <vector>

#include "vk/gauss_code.hpp"

namespace vktest {

using Matching = std::vector<std::pair<int, int>>;

inline void collect_matchings(std::vector<int>& avail, Matching& cur,
                              std::vector<Matching>& out) {
    if (avail.empty()) {
        out.push_back(cur);
        return;
    }
    const int first = avail.front();
    for (std::size_t i = 1; i < avail.size(); ++i) {
        const int mate = avail[i];
        std::vector<int> rest;
        for (std::size_t j = 1; j < avail.size(); ++j)
            if (j != i) rest.push_back(avail[j]);
        cur.push_back({first, mate});
        collect_matchings(rest, cur, out);
        cur.pop_back();
    }
}

// Every valid single-component code with exactly n crossings, as linear
// words: all chord placements x over/under assignments x signs. Covers each
// cyclic code once per reading.
inline std::vector<vk::KnotCode> all_knot_codes(int n) {
    using namespace vk;
    if (n == 0) return {KnotCode()};

    std::vector<int> positions(2 * n);
    for (int i = 0; i < 2 * n; ++i) positions[i] = i;
    std::vector<Matching> ms;
    Matching cur;
    collect_matchings(positions, cur, ms);

    std::vector<KnotCode> codes;
    for (const auto& m : ms) {
        for (int over_mask = 0; over_mask < (1 << n); ++over_mask) {
            for (int sign_mask = 0; sign_mask < (1 << n); ++sign_mask) {
                Component toks(2 * n);
                for (int c = 0; c < n; ++c) {
                    const bool over_first = over_mask >> c & 1;
                    const int sign = (sign_mask >> c & 1) ? +1 : -1;
                    toks[m[c].first] = {c + 1, over_first ? Passage::Over : Passage::Under, sign};
                    toks[m[c].second] = {c + 1, over_first ? Passage::Under : Passage::Over, sign};
                }
                codes.push_back(KnotCode(std::move(toks)));
            }
        }
    }
    return codes;
}

inline std::vector<vk::KnotCode> all_knot_codes_up_to(int n) {
    std::vector<vk::KnotCode> codes;
    for (int i = 0; i <= n; ++i) {
        auto part = all_knot_codes(i);
        codes.insert(codes.end(), part.begin(), part.end());
    }
    return codes;
}

}  // namespace vktest
