#include "vk/invariants.hpp"

#include <algorithm>

#include "vk/surface.hpp"

namespace vk {

namespace {

std::map<int, int> sign_table(const KnotCode& code) {
    std::map<int, int> out;
    for (const Token& t : code.tokens()) out[t.id] = t.sign;
    return out;
}

}  // namespace

int odd_writhe(const KnotCode& code) {
    const auto signs = sign_table(code);
    int total = 0;
    for (const auto& [id, index] : index_table(code))
        if (index % 2 != 0) total += signs.at(id);
    return total;
}

LaurentPoly writhe_polynomial(const KnotCode& code) {
    const auto signs = sign_table(code);
    LaurentPoly w;
    for (const auto& [id, index] : index_table(code)) {
        const int s = signs.at(id);
        w += LaurentPoly::term(index, s);
        w += LaurentPoly::term(0, -s);
    }
    return w;
}

Presentation link_group(const LinkCode& code) {
    const auto& comps = code.components();

    // Arc generators: within each component, arc i ends at that component's
    // i-th under passage. Components that never pass under keep one free
    // generator. Indices are 1-based across components.
    std::vector<std::vector<std::size_t>> unders(comps.size());
    std::vector<int> base(comps.size());
    int next = 1;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (std::size_t p = 0; p < comps[c].size(); ++p)
            if (comps[c][p].passage == Passage::Under) unders[c].push_back(p);
        base[c] = next;
        next += unders[c].empty() ? 1 : static_cast<int>(unders[c].size());
    }

    const auto arc_ending_at = [&](std::size_t c, std::size_t rank) {
        return base[c] + static_cast<int>(rank);
    };
    // Arc carrying the token at (c, p): ends at the first under passage at or
    // after p, wrapping around the component.
    const auto arc_through = [&](std::size_t c, std::size_t p) {
        if (unders[c].empty()) return base[c];
        const auto it = std::lower_bound(unders[c].begin(), unders[c].end(), p);
        const std::size_t rank = it == unders[c].end() ? 0 : it - unders[c].begin();
        return arc_ending_at(c, rank);
    };

    struct Passing {
        std::size_t comp = 0, pos = 0;
        bool seen = false;
    };
    std::map<int, Passing> overs, under_at;
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (std::size_t p = 0; p < comps[c].size(); ++p) {
            auto& slot = comps[c][p].passage == Passage::Over ? overs : under_at;
            slot[comps[c][p].id] = {c, p, true};
        }

    Presentation pres;
    pres.generators = next - 1;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (std::size_t rank = 0; rank < unders[c].size(); ++rank) {
            const Token& tok = comps[c][unders[c][rank]];
            const Passing& over = overs.at(tok.id);
            const int g_in = arc_ending_at(c, rank);
            const int g_out = arc_ending_at(c, (rank + 1) % unders[c].size());
            const int g_over = arc_through(over.comp, over.pos);
            const GroupWord conj = GroupWord::generator(g_over, tok.sign);
            pres.relators.push_back(GroupWord::generator(g_out, -1) * conj *
                                    GroupWord::generator(g_in) * conj.inverse());
        }
    }
    return pres;
}

Presentation knot_group(const KnotCode& code) { return link_group(code.as_link()); }

ACAlexander ac_alexander(const KnotCode& code) {
    ACAlexander out;
    out.poly = normalize_units(elementary_ideal_gcd(alexander_matrix(knot_group(code)), 1));
    out.principal = is_almost_classical(code);
    return out;
}

LaurentPoly link_alexander(const LinkCode& code) {
    return normalize_units(elementary_ideal_gcd(alexander_matrix(link_group(code)), 1));
}

LaurentPoly2 generalized_alexander(const KnotCode& code) {
    const std::size_t n = code.crossing_count();
    if (n == 0) return LaurentPoly2();

    // Short arcs: arc p enters the token at position p.
    const Component& w = code.tokens();
    const std::size_t m = w.size();
    std::map<int, std::size_t> over_pos;
    for (std::size_t p = 0; p < m; ++p)
        if (w[p].passage == Passage::Over) over_pos[w[p].id] = p;

    std::vector<std::vector<LaurentPoly2>> rel(2 * n, std::vector<LaurentPoly2>(m));
    std::size_t row = 0;
    for (std::size_t p = 0; p < m; ++p) {
        if (w[p].passage != Passage::Under) continue;
        const std::size_t u_in = p, u_out = (p + 1) % m;
        const std::size_t o_in = over_pos.at(w[p].id), o_out = (o_in + 1) % m;
        const int e = w[p].sign;
        // under-out = t^e under-in + (1 - s^e t^e) over-in
        rel[row][u_out] += LaurentPoly2::term(0, 0, 1);
        rel[row][u_in] += LaurentPoly2::term(0, e, -1);
        rel[row][o_in] += LaurentPoly2::term(e, e, 1) + LaurentPoly2::term(0, 0, -1);
        ++row;
        // over-out = s^e over-in
        rel[row][o_out] += LaurentPoly2::term(0, 0, 1);
        rel[row][o_in] += LaurentPoly2::term(e, 0, -1);
        ++row;
    }
    return normalize_units(fraction_free_det(rel));
}

SkeinTriple skein_triple(const KnotCode& code, int id) {
    const Component& w = code.tokens();
    std::size_t pu = w.size(), po = w.size();
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (w[p].id != id) continue;
        (w[p].passage == Passage::Under ? pu : po) = p;
    }
    if (pu == w.size()) throw Error(ErrorKind::UnknownId, "no crossing " + std::to_string(id));

    const int sign = w[pu].sign;
    const auto switched = [&] {
        Component c = w;
        c[pu] = {id, Passage::Over, -sign};
        c[po] = {id, Passage::Under, -sign};
        return KnotCode(c);
    };

    SkeinTriple out{sign > 0 ? code : switched(), sign < 0 ? code : switched(), LinkCode()};

    const std::size_t p = std::min(pu, po), q = std::max(pu, po);
    Component a(w.begin() + p + 1, w.begin() + q);
    Component b(w.begin() + q + 1, w.end());
    b.insert(b.end(), w.begin(), w.begin() + p);
    out.zero = LinkCode({a, b});
    return out;
}

}  // namespace vk
