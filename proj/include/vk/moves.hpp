#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "vk/gauss_code.hpp"

namespace vk {

enum class MoveKind { R1Plus, R1Minus, R2Plus, R2Minus, R3 };
const char* to_string(MoveKind k);

// Token or gap address inside a link code.
struct Pos {
    int comp = 0;
    int index = 0;
    friend bool operator==(const Pos&, const Pos&) = default;
    friend auto operator<=>(const Pos&, const Pos&) = default;
};

// A Reidemeister move site. Removal and R3 sites address existing tokens:
// R1- the first of the two cyclically adjacent tokens of one chord, R2- the
// starts of the over pair and of the under pair, R3 the starts of its three
// adjacent pairs (over/over, mixed, under/under). Insertion sites address
// gaps: gap i sits before token i, an empty component has the single gap 0.
struct MoveSite {
    MoveKind kind = MoveKind::R1Minus;
    std::vector<Pos> positions;

    // Insertion parameters. sign is the sign of the first new crossing (its
    // R2 partner gets the opposite sign). over_first puts the over token
    // (R1+) or over block (R2+) first/at positions[0]. parallel keeps the
    // under block in the same strand order as the over block.
    int sign = +1;
    bool over_first = true;
    bool parallel = true;

    friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

// Text form: R1-@0.3, R2-@0.2,1.0, R3@0.2,0.5,1.1, R1+@0.3[+,OU],
// R2+@0.1,0.4[-,under,anti].
std::string serialize(const MoveSite& site);
MoveSite parse_move(const std::string& text);

// Every matching removal/R3 site plus the finite generating family of
// insertions: R1+ at every gap with every sign/order, R2+ at every ordered
// gap pair with every block order, strand orientation and sign.
// Deterministic order.
std::vector<MoveSite> legal_moves(const LinkCode& code);

LinkCode apply(const LinkCode& code, const MoveSite& site);
KnotCode apply(const KnotCode& code, const MoveSite& site);

// Deterministic bounded simplification: exhaustive greedy R1-/R2- removal
// (lowest site first), then `budget` breadth-first layers over all legal
// moves with the crossing count capped two above the best code seen.
// Returns the (crossing count, canonical text)-least code found, in
// canonical form.
LinkCode simplify(const LinkCode& code, int budget = 4);
KnotCode simplify(const KnotCode& code, int budget = 4);

using MovePath = std::vector<MoveSite>;

// Breadth-first search for a move path from a to b, at most `depth` moves,
// crossing counts capped two above max(a, b). Each recorded site applies to
// the canonical form of the previous step's result. An empty result means
// no path was found within the bounds; it is not a proof of inequivalence.
std::optional<MovePath> equivalent_search(const LinkCode& a, const LinkCode& b, int depth);
std::optional<MovePath> equivalent_search(const KnotCode& a, const KnotCode& b, int depth);

}  // namespace vk
