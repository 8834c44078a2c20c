#pragma once

#include <climits>
#include <utility>
#include <vector>

#include "vk/surface.hpp"

namespace vktest {

// Brute-force Alexander numbering: integers on the ribbon-graph faces with
// number(left face of arc) = number(right face of arc) + 1 for every strand
// arc. Solvable iff potential propagation never conflicts.
inline bool alexander_numerable(const vk::KnotCode& k) {
    using namespace vk;
    if (k.empty()) return true;
    const RibbonGraph g = ribbon_graph(k.as_link());

    std::vector<std::vector<std::pair<int, int>>> adj(g.face_count);
    for (std::size_t a = 0; a < g.arcs.size(); ++a) {
        const int right = g.face_of_dart[RibbonGraph::forward_dart(static_cast<int>(a))];
        const int left = g.face_of_dart[RibbonGraph::backward_dart(static_cast<int>(a))];
        adj[right].push_back({left, +1});
        adj[left].push_back({right, -1});
    }

    std::vector<int> num(g.face_count, INT_MIN);
    for (int f0 = 0; f0 < g.face_count; ++f0) {
        if (num[f0] != INT_MIN) continue;
        num[f0] = 0;
        std::vector<int> stack{f0};
        while (!stack.empty()) {
            const int f = stack.back();
            stack.pop_back();
            for (auto [to, d] : adj[f]) {
                if (num[to] == INT_MIN) {
                    num[to] = num[f] + d;
                    stack.push_back(to);
                } else if (num[to] != num[f] + d) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace vktest
