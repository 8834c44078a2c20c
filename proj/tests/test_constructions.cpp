#include <doctest.h>

#include <functional>

#include "vk/constructions.hpp"
#include "vk/invariants.hpp"
#include "vk/moves.hpp"
#include "vk/surface.hpp"

using namespace vk;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    throw std::logic_error("expected a vk::Error");
}

const char* const kCatalog[] = {
    "",
    "O1+ U1+",
    "O1+ U2+ O3+ U1+ O2+ U3+",
    "O1+ U2+ O3- U4- O2+ U1+ O4- U3-",
    "O1+ O2+ U1+ U2+",
    "O2- U1+ U2- O1+ O4+ U3- U4+ O3-",
};

}  // namespace

TEST_CASE("connected sum with the unknot is the identity") {
    KnotCode unknot = parse_knot("");
    for (const char* text : kCatalog) {
        KnotCode a = parse_knot(text);
        for (std::size_t gap = 0; gap <= a.size(); ++gap) {
            CHECK(canonicalize(connected_sum(a, gap, unknot, 0)) == canonicalize(a));
            CHECK(canonicalize(connected_sum(unknot, 0, a, gap)) == canonicalize(a));
        }
    }
}

TEST_CASE("granny knot") {
    KnotCode trefoil = parse_knot("O1+ U2+ O3+ U1+ O2+ U3+");
    KnotCode granny = connected_sum(trefoil, 0, trefoil, 0);
    CHECK(serialize(granny) == "O1+ U2+ O3+ U1+ O2+ U3+ O4+ U5+ O6+ U4+ O5+ U6+");
    CHECK(granny.crossing_count() == 6);
    CHECK(carter_genus(granny) == 0);
    CHECK(simplify(granny, 1).crossing_count() == 6);
}

TEST_CASE("two trivial summands give Kishino's knot") {
    KnotCode left = parse_knot("O2- U1+ U2- O1+");
    KnotCode right = parse_knot("O2+ U1- U2+ O1-");
    CHECK(serialize(simplify(left, 2)) == "");
    CHECK(serialize(simplify(right, 2)) == "");

    KnotCode sum = connected_sum(left, 0, right, 0);
    KnotCode kishino = parse_knot("O2- U1+ U2- O1+ O4+ U3- U4+ O3-");
    CHECK(canonicalize(sum) == canonicalize(kishino));

    // bounded search never gets below its four crossings
    CHECK(simplify(kishino, 2).crossing_count() == 4);
}

TEST_CASE("connected sum respects the additive invariants") {
    for (const char* ta : kCatalog) {
        for (const char* tb : kCatalog) {
            KnotCode a = parse_knot(ta);
            KnotCode b = parse_knot(tb);
            std::size_t ga = a.size() / 2;
            std::size_t gb = b.empty() ? 0 : 1;
            KnotCode c = connected_sum(a, ga, b, gb);
            CHECK(c.crossing_count() == a.crossing_count() + b.crossing_count());
            CHECK(odd_writhe(c) == odd_writhe(a) + odd_writhe(b));
            CHECK(writhe_polynomial(c) == writhe_polynomial(a) + writhe_polynomial(b));
            CHECK(carter_genus(c) <= carter_genus(a) + carter_genus(b));
        }
    }
    CHECK(kind_of([] {
              connected_sum(parse_knot("O1+ U1+"), 3, parse_knot(""), 0);
          }) == ErrorKind::IllegalSite);
}

TEST_CASE("tangle words round-trip through text") {
    for (const char* text : {"", "X A B + A\n", "X A B + A\nX B B - 2\n",
                             "X A3 B3 - B\nX A1 B2 + A\nX A2 B1 - B\n"}) {
        TangleWord w = parse_tangle(text);
        CHECK(serialize(w) == text);
        CHECK(parse_tangle(serialize(w)) == w);
    }
    // bare events take list order on both strands; parsing resolves positions
    TangleWord bare = parse_tangle("X A B + A\nX A B - B\n");
    CHECK(bare.events[0].first_pos == 1);
    CHECK(bare.events[1].first_pos == 2);
    CHECK(bare.events[1].second_pos == 2);
    CHECK(bare.crossing_count() == 2);

    TangleWord self = parse_tangle("X B B - 2\n");
    CHECK(self.events[0].first == 'B');
    CHECK(self.events[0].second == 'B');
    CHECK_FALSE(self.events[0].first_over);
    CHECK(self.events[0].sign == -1);

    CHECK(kind_of([] { parse_tangle("X A C + A\n"); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { parse_tangle("X A0 B + A\n"); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { parse_tangle("X A B + C\n"); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { parse_tangle("X A B +\n"); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { parse_tangle("X A1 B + A\nX A1 B + B\n"); }) ==
          ErrorKind::IllegalEvent);
    CHECK(kind_of([] { parse_tangle("X A7 B + A\n"); }) == ErrorKind::IllegalEvent);
}

TEST_CASE("splicing the trivial tangle is the identity") {
    TangleWord trivial;
    for (const char* text : kCatalog) {
        KnotCode k = parse_knot(text);
        std::size_t arc2 = k.size() / 2;
        if (k.empty()) {
            CHECK(tangle_splice(k, 0, 0, trivial) == k);
        } else {
            CHECK(tangle_splice(k, 0, arc2, trivial) == k);
        }
    }
}

TEST_CASE("tangle splice rejects bad sites") {
    KnotCode trefoil = parse_knot("O1+ U2+ O3+ U1+ O2+ U3+");
    TangleWord one = parse_tangle("X A B + A\n");
    CHECK(kind_of([&] { tangle_splice(trefoil, 2, 2, one); }) ==
          ErrorKind::OrientationMismatch);
    CHECK(kind_of([&] { tangle_splice(trefoil, 0, 9, one); }) == ErrorKind::IllegalSite);
}

TEST_CASE("splicing a one-event tangle into the unknot closes it up") {
    TangleWord one = parse_tangle("X A B + A\n");
    KnotCode closed = tangle_splice(parse_knot(""), 0, 0, one);
    CHECK(serialize(closed) == "U1+ O1+");
    CHECK(serialize(simplify(closed, 1)) == "");
}

TEST_CASE("the satellite of the unknot closes the pattern") {
    KnotCode sat = livingston_satellite(parse_knot(""));
    CHECK(serialize(sat) == "U3+ U1+ O2+ U2+ O1+ O3+");
    // the pattern is unknotted as a knot in its own right
    CHECK(serialize(simplify(sat, 2)) == "");
    CHECK(carter_genus(simplify(sat, 2)) == 0);
}

TEST_CASE("satellite invariant table") {
    // columns: crossings, genus, odd writhe, almost classical
    struct Row {
        const char* code;
        int crossings, genus, ow;
        bool ac;
    };
    const Row rows[] = {
        {"", 3, 0, 0, true},
        {"O1+ U1+", 21, 0, 0, true},
        {"O1+ U2+ O3+ U1+ O2+ U3+", 57, 0, 0, true},
        {"O1+ U2+ O3- U4- O2+ U1+ O4- U3-", 39, 0, 0, true},
        {"O1+ O2+ U1+ U2+", 21, 1, 2, false},
        {"O2- U1+ U2- O1+ O4+ U3- U4+ O3-", 39, 2, 0, false},
    };
    for (const Row& r : rows) {
        KnotCode in = parse_knot(r.code);
        KnotCode sat = livingston_satellite(in);
        CHECK(sat.crossing_count() == r.crossings);
        CHECK(carter_genus(sat) == r.genus);
        CHECK(odd_writhe(sat) == r.ow);
        CHECK(is_almost_classical(sat) == r.ac);
        // the satellite is concordant to its companion, so the writhe
        // obstructions agree
        CHECK(writhe_polynomial(sat) == writhe_polynomial(in));
        CHECK(odd_writhe(sat) == odd_writhe(in));
    }
}

TEST_CASE("satellite framing tracks the homological longitude") {
    // An almost classical companion is cabled along its homological
    // longitude, so the Alexander polynomial survives even on diagrams with
    // nonzero writhe. The kink is the smallest such diagram.
    KnotCode kink = parse_knot("O1+ U1+");
    CHECK(ac_alexander(livingston_satellite(kink)).poly.is_one());

    // A companion that is not almost classical has no preferred longitude
    // and keeps the blackboard framing; its satellite is a genuinely
    // different knot, which the generalized Alexander polynomial sees.
    KnotCode vtref = parse_knot("O1+ O2+ U1+ U2+");
    CHECK_FALSE(normalize_units(generalized_alexander(livingston_satellite(vtref))) ==
                normalize_units(generalized_alexander(vtref)));
}
