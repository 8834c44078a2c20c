#pragma once

#include <map>
#include <vector>

#include "vk/gauss_code.hpp"

namespace vk {

// Combinatorial ribbon graph of a diagram: one 4-valent vertex per crossing
// with the rotation determined by passage and sign, one edge per strand arc
// between consecutive tokens. Faces are the orbits of next-slot tracing; the
// traced face lies to the right of each dart.
struct RibbonGraph {
    struct End {
        int vertex = 0;
        int slot = 0;  // 0..3, counterclockwise
    };
    struct Arc {
        End from, to;
    };

    int vertex_count = 0;
    std::vector<int> vertex_ids;  // vertex -> crossing id, ascending
    std::vector<Arc> arcs;
    int circle_count = 0;  // crossing-free components

    // Darts: 2*a runs along arcs[a], 2*a+1 against it.
    std::vector<int> face_of_dart;
    int face_count = 0;

    static int forward_dart(int arc) { return 2 * arc; }
    static int backward_dart(int arc) { return 2 * arc + 1; }
    End tail(int dart) const {
        const Arc& a = arcs[dart / 2];
        return dart % 2 == 0 ? a.from : a.to;
    }
    End head(int dart) const {
        const Arc& a = arcs[dart / 2];
        return dart % 2 == 0 ? a.to : a.from;
    }
};

RibbonGraph ribbon_graph(const LinkCode& code);

// Genus of the closed oriented surface the diagram thickens into, summed
// over connected pieces; crossing-free components are sphere summands.
int carter_genus(const LinkCode& code);
int carter_genus(const KnotCode& code);

using ChordIndexTable = std::map<int, int>;

// Homological index of a chord: sum over chords d interleaved with c of
// +sign(d) when d's over token lies on the arc from c's under token to c's
// over token in orientation order, else -sign(d).
int chord_index(const KnotCode& code, int id);
ChordIndexTable index_table(const KnotCode& code);

// True iff every chord index vanishes; equivalent to the diagram admitting
// an Alexander numbering of its ribbon-graph faces.
bool is_almost_classical(const KnotCode& code);

// Signed count of crossings where component i passes over component j.
// Components are 1-based; i != j. Not symmetric.
int linking_number(const LinkCode& link, int i, int j);

}  // namespace vk
