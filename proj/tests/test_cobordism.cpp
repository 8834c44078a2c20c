#include <doctest.h>

#include <fstream>
#include <functional>
#include <sstream>

#include "vk/cobordism.hpp"
#include "vk/invariants.hpp"
#include "vk/moves.hpp"

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

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(VK_TEST_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("birth and death edit the component list") {
    LinkCode unknot;
    LinkCode two = apply_event(unknot, MovieEvent::birth(1));
    CHECK(two.component_count() == 2);
    CHECK(serialize(two) == "/");
    CHECK(serialize(apply_event(two, MovieEvent::death(0))) == "");

    CHECK(kind_of([&] { apply_event(unknot, MovieEvent::birth(5)); }) == ErrorKind::IllegalEvent);
    CHECK(kind_of([&] { apply_event(two, MovieEvent::death(3)); }) == ErrorKind::IllegalEvent);
    // the last component may not die
    CHECK(kind_of([&] { apply_event(unknot, MovieEvent::death(0)); }) == ErrorKind::IllegalEvent);
    // only crossing-free components may die
    LinkCode kink = parse_link("O1+ U1+");
    CHECK(kind_of([&] { apply_event(kink, MovieEvent::death(0)); }) == ErrorKind::IllegalEvent);
}

TEST_CASE("saddles split and merge") {
    LinkCode two = parse_link("/");
    LinkCode merged = apply_event(two, MovieEvent::saddle({0, 0}, {1, 0}));
    CHECK(serialize(merged) == "");

    LinkCode pinched = apply_event(LinkCode(), MovieEvent::saddle({0, 0}, {0, 0}));
    CHECK(serialize(pinched) == "/");

    // a parallel band would reverse a strand
    CHECK(kind_of([&] {
              apply_event(two, MovieEvent::saddle({0, 0}, {1, 0}, false));
          }) == ErrorKind::IllegalEvent);
    CHECK(kind_of([&] {
              apply_event(two, MovieEvent::saddle({0, 0}, {2, 0}));
          }) == ErrorKind::IllegalEvent);

    LinkCode hopf = parse_link("O1+ U2+ / U1+ O2+");
    LinkCode joined = apply_event(hopf, MovieEvent::saddle({0, 0}, {1, 0}));
    CHECK(serialize(joined) == "O1+ U2+ U1+ O2+");
}

TEST_CASE("a saddle across a crossing realizes the oriented smoothing") {
    // band attached at the two gaps flanking crossing 1 of the trefoil: the
    // result is the skein triple's zero resolution plus one kink
    KnotCode trefoil = parse_knot("O1+ U2+ O3+ U1+ O2+ U3+");
    LinkCode after = apply_event(trefoil.as_link(), MovieEvent::saddle({0, 0}, {0, 4}));
    CHECK(serialize(after) == "O1+ U2+ O3+ U1+ / O2+ U3+");
    LinkCode reduced = apply(after, parse_move("R1-@0.3"));
    CHECK(canonicalize(reduced) == canonicalize(skein_triple(trefoil, 1).zero));
    CHECK(simplify(after, 0) == canonicalize(skein_triple(trefoil, 1).zero));
}

TEST_CASE("rmove events delegate to the moves module") {
    LinkCode kink = parse_link("O1+ U1+");
    LinkCode flat = apply_event(kink, MovieEvent::rmove(parse_move("R1-@0.0")));
    CHECK(serialize(flat) == "");
    CHECK(kind_of([&] {
              apply_event(LinkCode(), MovieEvent::rmove(parse_move("R1-@0.0")));
          }) == ErrorKind::IllegalEvent);
}

TEST_CASE("the empty movie certifies the identity concordance") {
    Movie m;
    Certificate cert = verify_movie(m, parse_knot(""), parse_knot(""));
    CHECK(cert.births == 0);
    CHECK(cert.saddles == 0);
    CHECK(cert.deaths == 0);
    CHECK(cert.euler_ok);
    CHECK(cert.connected);
    CHECK(cert.lifelines == 1);
    CHECK(cert.genealogy_edges.empty());
}

TEST_CASE("a single saddle is not a concordance") {
    // unknot to unknot through one pinch: Euler count 0 - 1 + 0 breaks
    Movie m;
    m.events = {MovieEvent::saddle({0, 0}, {0, 0})};
    CHECK(kind_of([&] { verify_movie(m, parse_knot(""), parse_knot("")); }) ==
          ErrorKind::CountFailure);
}

TEST_CASE("verify_movie checks endpoints canonically") {
    Movie m;
    m.initial = parse_link("O1+ O2+ U1+ U2+");
    // relabeled and rotated initial frame still matches
    verify_movie(m, parse_knot("O2+ O1+ U2+ U1+"), parse_knot("U1+ U2+ O1+ O2+"));
    CHECK(kind_of([&] {
              verify_movie(m, parse_knot(""), parse_knot("O1+ O2+ U1+ U2+"));
          }) == ErrorKind::EndpointMismatch);
    CHECK(kind_of([&] {
              verify_movie(m, parse_knot("O1+ O2+ U1+ U2+"), parse_knot(""));
          }) == ErrorKind::EndpointMismatch);

    Movie bad;
    bad.events = {MovieEvent::rmove(parse_move("R1-@0.0"))};
    CHECK(kind_of([&] { verify_movie(bad, parse_knot(""), parse_knot("")); }) ==
          ErrorKind::IllegalEvent);
}

TEST_CASE("balanced counts with a floating closed piece are rejected") {
    // birth a circle, pinch it, merge the halves, kill the result: the counts
    // balance (1 - 2 + 1 = 0) but the piece never touches the main lifeline
    Movie m;
    m.events = {MovieEvent::birth(1), MovieEvent::saddle({1, 0}, {1, 0}),
                MovieEvent::saddle({1, 0}, {2, 0}), MovieEvent::death(1)};
    CHECK(kind_of([&] { verify_movie(m, parse_knot(""), parse_knot("")); }) ==
          ErrorKind::Disconnected);
}

TEST_CASE("genealogy tracks splits and merges") {
    // birth, merge into the main component, pinch it apart, death: connected
    Movie m;
    m.events = {MovieEvent::birth(1), MovieEvent::saddle({0, 0}, {1, 0}),
                MovieEvent::saddle({0, 0}, {0, 0}), MovieEvent::death(1)};
    Certificate cert = verify_movie(m, parse_knot(""), parse_knot(""));
    CHECK(cert.births == 1);
    CHECK(cert.saddles == 2);
    CHECK(cert.deaths == 1);
    CHECK(cert.lifelines == 5);
    CHECK(cert.genealogy_edges.size() == 4);
    CHECK(cert.connected);
}

TEST_CASE("movie files round-trip") {
    const std::string text =
        "# a loop that undoes itself\n"
        "FROM O1+ U1+\n"
        "TO O1+ U1+\n"
        "\n"
        "R R1-@0.0\n"
        "B 1\n"
        "S 0.0 1.0 anti\n"
        "S 0.0 0.0 anti\n"
        "D 1\n"
        "R R1+@0.0[+,OU]  # put the kink back\n";
    MovieFile file = parse_movie(text);
    CHECK(serialize(file.from) == "O1+ U1+");
    CHECK(file.movie.events.size() == 6);
    CHECK(file.movie.events[0].kind == EventKind::RMove);
    CHECK(file.movie.events[2].kind == EventKind::Saddle);
    CHECK(file.movie.events[2].gap2 == Pos{1, 0});
    verify_movie(file.movie, file.from, file.to);

    MovieFile again = parse_movie(serialize(file));
    CHECK(serialize(again) == serialize(file));

    CHECK(kind_of([] { parse_movie("TO \n"); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { parse_movie("FROM \nFROM \nTO \n"); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { parse_movie("FROM \nTO \nS 0.x 0.0 anti\n"); }) ==
          ErrorKind::SyntaxError);
    CHECK(kind_of([] { parse_movie("FROM \nTO \nQ 1\n"); }) == ErrorKind::SyntaxError);
    // parallel saddles parse; verification rejects them
    MovieFile par = parse_movie("FROM \nTO \nS 0.0 0.0 par\n");
    CHECK_FALSE(par.movie.events[0].anti);
    CHECK(kind_of([&] { verify_movie(par.movie, par.from, par.to); }) ==
          ErrorKind::IllegalEvent);
}

TEST_CASE("slice obstructions") {
    SliceReport unknot = slice_obstructions(parse_knot(""));
    CHECK_FALSE(unknot.not_slice);
    REQUIRE(unknot.items.size() == 3);
    for (const auto& item : unknot.items) {
        CHECK_FALSE(item.obstructs);
        CHECK(item.value == "0");
    }

    SliceReport vt = slice_obstructions(parse_knot("O1+ O2+ U1+ U2+"));
    CHECK(vt.not_slice);
    CHECK(vt.items[0].name == "odd-writhe");
    CHECK(vt.items[0].value == "2");
    CHECK(vt.items[0].obstructs);
    CHECK(vt.items[1].name == "writhe-polynomial");
    CHECK(vt.items[1].value == "t^-1-2+t");

    // classical knots evade every virtual obstruction
    CHECK_FALSE(slice_obstructions(parse_knot("O1+ U2+ O3+ U1+ O2+ U3+")).not_slice);
    // so does Kishino's knot: all zero is inconclusive, not a certificate
    SliceReport kishino = slice_obstructions(parse_knot("O2- U1+ U2- O1+ O4+ U3- U4+ O3-"));
    CHECK_FALSE(kishino.not_slice);
}

TEST_CASE("shipped movie: a composite is concordant to its prime summand") {
    MovieFile file = parse_movie(slurp("composite_to_prime.movie"));
    Certificate cert = verify_movie(file.movie, file.from, file.to);
    CHECK(cert.births == 0);
    CHECK(cert.saddles == 2);
    CHECK(cert.deaths == 2);
    CHECK(cert.connected);

    // concordance preserves the writhe obstructions, and the summand that
    // gets sliced away contributes nothing to them
    CHECK(odd_writhe(file.from) == odd_writhe(file.to));
    CHECK(writhe_polynomial(file.from).to_string() ==
          writhe_polynomial(file.to).to_string());
}

TEST_CASE("shipped movie: the tangle closure is slice") {
    MovieFile file = parse_movie(slurp("kt_closure_slice.movie"));
    Certificate cert = verify_movie(file.movie, file.from, file.to);
    CHECK(cert.births == 0);
    CHECK(cert.saddles == 1);
    CHECK(cert.deaths == 1);
    CHECK(serialize(file.to) == "");
    CHECK_FALSE(slice_obstructions(file.from).not_slice);
}
