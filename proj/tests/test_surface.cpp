#include <doctest.h>

#include "enumerate.hpp"
#include "numbering_oracle.hpp"
#include "vk/surface.hpp"

using namespace vk;

TEST_CASE("ribbon graph shape") {
    RibbonGraph g = ribbon_graph(parse_link("O1+ O2+ U1+ U2+"));
    CHECK(g.vertex_count == 2);
    CHECK(g.arcs.size() == 4);
    CHECK(g.circle_count == 0);
    CHECK(g.face_count == 2);  // V=2, E=4, F=2

    RibbonGraph unknot = ribbon_graph(parse_link(""));
    CHECK(unknot.vertex_count == 0);
    CHECK(unknot.circle_count == 1);
    CHECK(unknot.face_count == 0);
}

TEST_CASE("carter genus of named diagrams") {
    CHECK(carter_genus(parse_knot("")) == 0);
    CHECK(carter_genus(parse_knot("O1+ U1+")) == 0);
    CHECK(carter_genus(parse_knot("O1- U1-")) == 0);
    CHECK(carter_genus(parse_knot("O1+ O2+ U1+ U2+")) == 1);  // virtual trefoil
    CHECK(carter_genus(parse_knot("O1+ U2+ O3+ U1+ O2+ U3+")) == 0);  // classical trefoil
    CHECK(carter_genus(parse_link("O1+ / U1+")) == 1);  // virtual Hopf link
    CHECK(carter_genus(parse_link("O1+ U2+ / U1+ O2+")) == 0);  // classical Hopf link
}

TEST_CASE("carter genus adds over split pieces") {
    CHECK(carter_genus(parse_link("O1+ O2+ U1+ U2+ / O3+ O4+ U3+ U4+")) == 2);
    CHECK(carter_genus(parse_link("O1+ O2+ U1+ U2+ //")) == 1);
    CHECK(carter_genus(parse_link("/")) == 0);
}

TEST_CASE("carter genus is a reading invariant") {
    for (const auto& code : vktest::all_knot_codes_up_to(3)) {
        const int g = carter_genus(code);
        CHECK(carter_genus(canonicalize(code)) == g);
        CHECK(carter_genus(mirror(code)) == g);
        CHECK(carter_genus(reverse(code)) == g);
    }
}

TEST_CASE("chord indices of named diagrams") {
    const KnotCode vtref = parse_knot("O1+ O2+ U1+ U2+");
    CHECK(chord_index(vtref, 1) == -1);
    CHECK(chord_index(vtref, 2) == +1);
    CHECK(index_table(vtref) == ChordIndexTable{{1, -1}, {2, +1}});

    CHECK(index_table(parse_knot("O1+ U2+ O3+ U1+ O2+ U3+")) ==
          ChordIndexTable{{1, 0}, {2, 0}, {3, 0}});
    CHECK(index_table(parse_knot("")).empty());
    CHECK_THROWS_AS(chord_index(vtref, 3), Error);
}

TEST_CASE("index tables negate under mirror and reverse") {
    for (const auto& code : vktest::all_knot_codes_up_to(3)) {
        const ChordIndexTable table = index_table(code);

        ChordIndexTable negated;
        for (auto [id, idx] : table) negated[id] = -idx;
        CHECK(index_table(mirror(code)) == negated);

        // reverse keeps ids, negates every index
        CHECK(index_table(reverse(code)) == negated);
    }
}

TEST_CASE("almost-classical detection on named diagrams") {
    CHECK(is_almost_classical(parse_knot("")));
    CHECK(is_almost_classical(parse_knot("O1+ U1+")));
    CHECK(is_almost_classical(parse_knot("O1+ U2+ O3+ U1+ O2+ U3+")));
    CHECK_FALSE(is_almost_classical(parse_knot("O1+ O2+ U1+ U2+")));
}

TEST_CASE("index-zero criterion matches the numbering oracle") {
    int numerable = 0, total = 0;
    for (const auto& code : vktest::all_knot_codes_up_to(3)) {
        ++total;
        const bool byindex = is_almost_classical(code);
        const bool byfaces = vktest::alexander_numerable(code);
        CHECK(byindex == byfaces);
        numerable += byfaces;
    }
    CHECK(total == 1 + 4 + 48 + 960);
    CHECK(numerable > 0);
    CHECK(numerable < total);
}

TEST_CASE("linking numbers in the thickened surface") {
    const LinkCode vhopf = parse_link("O1+ / U1+");
    CHECK(linking_number(vhopf, 1, 2) == 1);
    CHECK(linking_number(vhopf, 2, 1) == 0);

    const LinkCode hopf = parse_link("O1+ U2+ / U1+ O2+");
    CHECK(linking_number(hopf, 1, 2) == 1);
    CHECK(linking_number(hopf, 2, 1) == 1);

    CHECK(linking_number(parse_link("O1+ U1+ /"), 1, 2) == 0);
    CHECK(linking_number(parse_link("O1- / U1-"), 1, 2) == -1);

    CHECK_THROWS_AS(linking_number(vhopf, 1, 1), Error);
    CHECK_THROWS_AS(linking_number(vhopf, 0, 1), Error);
    CHECK_THROWS_AS(linking_number(vhopf, 1, 3), Error);
}
