#include <doctest.h>

#include <random>

#include "enumerate.hpp"
#include "vk/moves.hpp"
#include "vk/surface.hpp"

using namespace vk;

TEST_CASE("move sites serialize and parse") {
    for (const std::string text : {"R1-@0.3", "R2-@0.2,1.0", "R3@0.2,0.5,1.1", "R1+@0.3[+,OU]",
                                   "R1+@2.0[-,UO]", "R2+@0.1,0.4[+,over,par]",
                                   "R2+@0.0,0.0[-,under,anti]"}) {
        CHECK(serialize(parse_move(text)) == text);
    }
    CHECK(parse_move("R1-@0.3").kind == MoveKind::R1Minus);
    CHECK(parse_move("R2+@0.1,0.4[-,under,anti]").sign == -1);
    CHECK_FALSE(parse_move("R2+@0.1,0.4[-,under,anti]").over_first);
    CHECK_FALSE(parse_move("R2+@0.1,0.4[-,under,anti]").parallel);

    CHECK_THROWS_AS(parse_move("R4@0.0"), Error);
    CHECK_THROWS_AS(parse_move("R1-"), Error);
    CHECK_THROWS_AS(parse_move("R1-@0"), Error);
    CHECK_THROWS_AS(parse_move("R1-@0.0[+,OU]"), Error);
    CHECK_THROWS_AS(parse_move("R1+@0.0"), Error);
    CHECK_THROWS_AS(parse_move("R1+@0.0[+,XX]"), Error);
}

TEST_CASE("kink removal and insertion") {
    const KnotCode kink = parse_knot("O1+ U1+");
    const MoveSite at0 = parse_move("R1-@0.0");
    const MoveSite at1 = parse_move("R1-@0.1");
    CHECK(apply(kink, at0) == parse_knot(""));
    CHECK(apply(kink, at1) == parse_knot(""));

    const auto moves = legal_moves(kink.as_link());
    CHECK(std::count_if(moves.begin(), moves.end(),
                        [](const MoveSite& m) { return m.kind == MoveKind::R1Minus; }) == 2);

    CHECK(apply(parse_knot(""), parse_move("R1+@0.0[+,OU]")) == kink);
    CHECK(apply(parse_knot(""), parse_move("R1+@0.0[-,UO]")) == parse_knot("U1- O1-"));
    CHECK_THROWS_AS(apply(kink, parse_move("R1-@0.2")), Error);
    CHECK_THROWS_AS(apply(parse_knot("O1+ O2+ U1+ U2+"), parse_move("R1-@0.0")), Error);
}

TEST_CASE("unknot offers only insertions") {
    for (const MoveSite& m : legal_moves(LinkCode()))
        CHECK((m.kind == MoveKind::R1Plus || m.kind == MoveKind::R2Plus));
}

TEST_CASE("bigon removal patterns") {
    // Interleaved chords with opposite signs form an R2 bigon.
    const KnotCode bigon = parse_knot("O1+ O2- U1+ U2-");
    const auto moves = legal_moves(bigon.as_link());
    const auto it = std::find_if(moves.begin(), moves.end(),
                                 [](const MoveSite& m) { return m.kind == MoveKind::R2Minus; });
    REQUIRE(it != moves.end());
    CHECK(apply(bigon, *it) == parse_knot(""));

    // Equal signs (virtual trefoil) admit no R2 removal.
    for (const MoveSite& m : legal_moves(parse_link("O1+ O2+ U1+ U2+")))
        CHECK(m.kind != MoveKind::R2Minus);

    // Either pair order works: nested opposite-sign bigon.
    const KnotCode nested = parse_knot("O1+ O2- U2- U1+");
    const auto nmoves = legal_moves(nested.as_link());
    const auto nit = std::find_if(nmoves.begin(), nmoves.end(),
                                  [](const MoveSite& m) { return m.kind == MoveKind::R2Minus; });
    REQUIRE(nit != nmoves.end());
    CHECK(apply(nested, *nit) == parse_knot(""));

    // Cross-component bigon.
    const LinkCode two = parse_link("O1+ O2- / U1+ U2-");
    const auto lmoves = legal_moves(two);
    const auto lit = std::find_if(lmoves.begin(), lmoves.end(),
                                  [](const MoveSite& m) { return m.kind == MoveKind::R2Minus; });
    REQUIRE(lit != lmoves.end());
    CHECK(serialize(apply(two, *lit)) == "/");
}

TEST_CASE("every R2 insertion undoes by an R2 removal") {
    const std::vector<LinkCode> bases = {LinkCode(), parse_link("O1+ O2+ U1+ U2+"),
                                         parse_link("O1+ / U1+"), parse_link("O1+ U1+ /")};
    for (const LinkCode& base : bases) {
        for (const MoveSite& m : legal_moves(base)) {
            if (m.kind != MoveKind::R2Plus) continue;
            const LinkCode grown = apply(base, m);
            CHECK(grown.crossing_count() == base.crossing_count() + 2);
            bool undone = false;
            for (const MoveSite& r : legal_moves(grown)) {
                if (r.kind != MoveKind::R2Minus) continue;
                if (apply(grown, r) == base) {
                    undone = true;
                    break;
                }
            }
            CHECK(undone);
        }
    }
}

TEST_CASE("every R1 insertion undoes by an R1 removal") {
    const LinkCode base = parse_link("O1+ O2+ U1+ U2+");
    for (const MoveSite& m : legal_moves(base)) {
        if (m.kind != MoveKind::R1Plus) continue;
        const LinkCode grown = apply(base, m);
        CHECK(grown.crossing_count() == base.crossing_count() + 1);
        bool undone = false;
        for (const MoveSite& r : legal_moves(grown)) {
            if (r.kind != MoveKind::R1Minus) continue;
            if (apply(grown, r) == base) {
                undone = true;
                break;
            }
        }
        CHECK(undone);
    }
}

namespace {

// Builds the 6-token triangle word for a given orientation case, with signs
// taken from the admissible table row (A=1, B=2, C=3).
KnotCode triangle_word(bool e1, bool e2, bool e3, int sa, int sb, int sc) {
    const Token oa{1, Passage::Over, sa}, ua{1, Passage::Under, sa};
    const Token ob{2, Passage::Over, sb}, ub{2, Passage::Under, sb};
    const Token oc{3, Passage::Over, sc}, uc{3, Passage::Under, sc};
    Component w;
    if (e1) {
        w.push_back(oa);
        w.push_back(ob);
    } else {
        w.push_back(ob);
        w.push_back(oa);
    }
    if (e2) {
        w.push_back(ua);
        w.push_back(oc);
    } else {
        w.push_back(oc);
        w.push_back(ua);
    }
    if (e3) {
        w.push_back(uc);
        w.push_back(ub);
    } else {
        w.push_back(ub);
        w.push_back(uc);
    }
    return KnotCode(w);
}

struct TableRow {
    bool e1, e2, e3;
    int sa, sb, sc;
};

constexpr TableRow kRows[8] = {
    {true, true, true, +1, -1, -1},   {true, true, false, +1, +1, +1},
    {true, false, true, -1, -1, +1},  {true, false, false, -1, +1, -1},
    {false, true, true, -1, +1, -1},  {false, true, false, -1, -1, +1},
    {false, false, true, +1, +1, +1}, {false, false, false, +1, -1, -1},
};

}  // namespace

TEST_CASE("the eight R3 orientation cases are exactly the legal ones") {
    const MoveSite site = parse_move("R3@0.0,0.2,0.4");
    for (const TableRow& row : kRows) {
        const KnotCode good = triangle_word(row.e1, row.e2, row.e3, row.sa, row.sb, row.sc);
        const auto moves = legal_moves(good.as_link());
        CHECK(std::find(moves.begin(), moves.end(), site) != moves.end());

        // The same word with any other sign triple is not an R3 triangle.
        for (int mask = 0; mask < 8; ++mask) {
            const int sa = mask & 1 ? +1 : -1;
            const int sb = mask & 2 ? +1 : -1;
            const int sc = mask & 4 ? +1 : -1;
            if (sa == row.sa && sb == row.sb && sc == row.sc) continue;
            const KnotCode bad = triangle_word(row.e1, row.e2, row.e3, sa, sb, sc);
            CHECK_THROWS_AS(apply(bad, site), Error);
        }

        // Involution: applying twice restores the word exactly.
        const KnotCode once = apply(good, site);
        CHECK(once.crossing_count() == 3);
        CHECK(once != good);
        CHECK(apply(once, site) == good);

        // The Euler characteristic of the surface is untouched.
        CHECK(carter_genus(once) == carter_genus(good));
    }
}

TEST_CASE("simplify reduces what it can and returns canonical forms") {
    CHECK(simplify(parse_knot("O1+ U1+")) == parse_knot(""));
    CHECK(simplify(parse_knot("O1+ O2- U1+ U2-")) == parse_knot(""));
    CHECK(simplify(parse_knot("O1+ O2+ U2+ U1+")) == parse_knot(""));

    const KnotCode vtref = parse_knot("O1+ O2+ U1+ U2+");
    CHECK(simplify(vtref, 2) == vtref);

    // A kinked trefoil drops back to the trefoil.
    const KnotCode trefoil = parse_knot("O1+ U2+ O3+ U1+ O2+ U3+");
    const KnotCode kinked = apply(trefoil, parse_move("R1+@0.2[-,UO]"));
    CHECK(kinked.crossing_count() == 4);
    CHECK(simplify(kinked, 1) == trefoil);
}

TEST_CASE("equivalence search finds short paths and honest failures") {
    const KnotCode unknot = parse_knot("");
    const KnotCode kink = parse_knot("O1+ U1+");
    const KnotCode vtref = parse_knot("O1+ O2+ U1+ U2+");

    auto self = equivalent_search(vtref, vtref, 0);
    REQUIRE(self.has_value());
    CHECK(self->empty());

    auto shrink = equivalent_search(kink, unknot, 1);
    REQUIRE(shrink.has_value());
    REQUIRE(shrink->size() == 1);
    CHECK((*shrink)[0].kind == MoveKind::R1Minus);

    auto grow = equivalent_search(unknot, kink, 1);
    REQUIRE(grow.has_value());
    REQUIRE(grow->size() == 1);
    CHECK((*grow)[0].kind == MoveKind::R1Plus);

    CHECK_FALSE(equivalent_search(vtref, unknot, 3).has_value());
}

TEST_CASE("replaying a found path reaches the target") {
    const KnotCode a = parse_knot("O1+ O2+ U1+ U2+");
    const KnotCode b = apply(apply(a, parse_move("R1+@0.1[-,OU]")), parse_move("R1+@0.0[+,UO]"));
    auto path = equivalent_search(a, b, 2);
    REQUIRE(path.has_value());
    CHECK(path->size() == 2);
    LinkCode cur = canonicalize(a.as_link());
    for (const MoveSite& m : *path) cur = canonicalize(apply(cur, m));
    CHECK(cur == canonicalize(b.as_link()));
}

TEST_CASE("random move walks keep codes valid") {
    std::mt19937 rng(20240817);
    const std::vector<std::string> seeds = {"", "O1+ U1+", "O1+ O2+ U1+ U2+",
                                            "O1+ U2+ O3+ U1+ O2+ U3+", "O1+ / U1+"};
    for (const std::string& seed : seeds) {
        for (int trial = 0; trial < 40; ++trial) {
            LinkCode code = parse_link(seed);
            const std::size_t comps = code.component_count();
            for (int step = 0; step < 6; ++step) {
                const auto moves = legal_moves(code);
                REQUIRE(!moves.empty());
                const MoveSite& m = moves[rng() % moves.size()];
                const int before = code.crossing_count();
                code = apply(code, m);  // constructor revalidates pairing
                CHECK(code.component_count() == comps);
                const int delta = code.crossing_count() - before;
                switch (m.kind) {
                    case MoveKind::R1Plus: CHECK(delta == 1); break;
                    case MoveKind::R1Minus: CHECK(delta == -1); break;
                    case MoveKind::R2Plus: CHECK(delta == 2); break;
                    case MoveKind::R2Minus: CHECK(delta == -2); break;
                    case MoveKind::R3: CHECK(delta == 0); break;
                }
            }
        }
    }
}
