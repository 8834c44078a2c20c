#include "vk/surface.hpp"

#include <numeric>
#include <set>

namespace vk {

namespace {

int in_slot(const Token& t) {
    if (t.passage == Passage::Under) return 0;
    return t.sign > 0 ? 1 : 3;
}

int out_slot(const Token& t) {
    if (t.passage == Passage::Under) return 2;
    return t.sign > 0 ? 3 : 1;
}

}  // namespace

RibbonGraph ribbon_graph(const LinkCode& code) {
    RibbonGraph g;

    std::set<int> ids;
    for (const auto& comp : code.components())
        for (const auto& t : comp) ids.insert(t.id);
    std::map<int, int> vertex_of;
    for (int id : ids) {
        vertex_of[id] = g.vertex_count++;
        g.vertex_ids.push_back(id);
    }

    for (const auto& comp : code.components()) {
        if (comp.empty()) {
            ++g.circle_count;
            continue;
        }
        const std::size_t n = comp.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Token& cur = comp[i];
            const Token& nxt = comp[(i + 1) % n];
            g.arcs.push_back({{vertex_of[cur.id], out_slot(cur)}, {vertex_of[nxt.id], in_slot(nxt)}});
        }
    }

    // Exactly one dart leaves each slot of each vertex.
    std::vector<int> dart_leaving(static_cast<std::size_t>(g.vertex_count) * 4, -1);
    for (std::size_t a = 0; a < g.arcs.size(); ++a) {
        const auto& arc = g.arcs[a];
        dart_leaving[arc.from.vertex * 4 + arc.from.slot] = RibbonGraph::forward_dart(static_cast<int>(a));
        dart_leaving[arc.to.vertex * 4 + arc.to.slot] = RibbonGraph::backward_dart(static_cast<int>(a));
    }

    g.face_of_dart.assign(g.arcs.size() * 2, -1);
    for (std::size_t d0 = 0; d0 < g.face_of_dart.size(); ++d0) {
        if (g.face_of_dart[d0] != -1) continue;
        int d = static_cast<int>(d0);
        while (g.face_of_dart[d] == -1) {
            g.face_of_dart[d] = g.face_count;
            RibbonGraph::End h = g.head(d);
            d = dart_leaving[h.vertex * 4 + (h.slot + 1) % 4];
        }
        ++g.face_count;
    }
    return g;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int carter_genus(const LinkCode& code) {
    const RibbonGraph g = ribbon_graph(code);
    if (g.vertex_count == 0) return 0;

    Dsu dsu(g.vertex_count);
    for (const auto& arc : g.arcs) dsu.unite(arc.from.vertex, arc.to.vertex);

    std::map<int, int> v_of, e_of, f_of;
    for (int v = 0; v < g.vertex_count; ++v) ++v_of[dsu.find(v)];
    for (const auto& arc : g.arcs) ++e_of[dsu.find(arc.from.vertex)];
    std::vector<int> face_root(g.face_count, -1);
    for (std::size_t d = 0; d < g.face_of_dart.size(); ++d)
        face_root[g.face_of_dart[d]] = dsu.find(g.tail(static_cast<int>(d)).vertex);
    for (int f = 0; f < g.face_count; ++f) ++f_of[face_root[f]];

    int genus = 0;
    for (const auto& [root, v] : v_of) genus += (2 - v + e_of[root] - f_of[root]) / 2;
    return genus;
}

int carter_genus(const KnotCode& code) {
    return carter_genus(code.as_link());
}

namespace {

struct ChordEnds {
    std::size_t over = 0, under = 0;
    int sign = 0;
};

std::map<int, ChordEnds> chord_ends(const KnotCode& code) {
    std::map<int, ChordEnds> ends;
    const Component& toks = code.tokens();
    for (std::size_t i = 0; i < toks.size(); ++i) {
        auto& e = ends[toks[i].id];
        (toks[i].passage == Passage::Over ? e.over : e.under) = i;
        e.sign = toks[i].sign;
    }
    return ends;
}

}  // namespace

int chord_index(const KnotCode& code, int id) {
    const auto ends = chord_ends(code);
    const auto it = ends.find(id);
    if (it == ends.end())
        throw Error(ErrorKind::UnknownId, "no crossing " + std::to_string(id) + " in code");
    const std::size_t u = it->second.under, o = it->second.over;
    // Position strictly inside the cyclic arc u -> o.
    auto inside = [&](std::size_t p) {
        if (u < o) return u < p && p < o;
        return p > u || p < o;
    };
    int index = 0;
    for (const auto& [d, e] : ends) {
        if (d == id) continue;
        const bool over_in = inside(e.over), under_in = inside(e.under);
        if (over_in == under_in) continue;  // not interleaved with c
        index += over_in ? e.sign : -e.sign;
    }
    return index;
}

ChordIndexTable index_table(const KnotCode& code) {
    ChordIndexTable table;
    for (const auto& [id, e] : chord_ends(code)) table[id] = chord_index(code, id);
    return table;
}

bool is_almost_classical(const KnotCode& code) {
    for (const auto& [id, idx] : index_table(code))
        if (idx != 0) return false;
    return true;
}

int linking_number(const LinkCode& link, int i, int j) {
    const int nc = static_cast<int>(link.component_count());
    if (i < 1 || i > nc || j < 1 || j > nc || i == j)
        throw Error(ErrorKind::BadComponent,
                    "linking number needs two distinct 1-based component indices");
    struct Loc {
        int over_comp = 0, under_comp = 0, sign = 0;
    };
    std::map<int, Loc> locs;
    for (std::size_t c = 0; c < link.components().size(); ++c) {
        for (const auto& t : link.components()[c]) {
            auto& l = locs[t.id];
            (t.passage == Passage::Over ? l.over_comp : l.under_comp) = static_cast<int>(c) + 1;
            l.sign = t.sign;
        }
    }
    int lk = 0;
    for (const auto& [id, l] : locs)
        if (l.over_comp == i && l.under_comp == j) lk += l.sign;
    return lk;
}

}  // namespace vk
