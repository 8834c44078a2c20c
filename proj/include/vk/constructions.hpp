#pragma once

#include <string>
#include <vector>

#include "vk/gauss_code.hpp"

namespace vk {

// Cuts each code at the named gap and joins the ends, relabeling the second
// summand to keep ids disjoint. Basepoint-dependent by design: different gap
// choices can produce inequivalent results.
KnotCode connected_sum(const KnotCode& a, std::size_t gap_a, const KnotCode& b, std::size_t gap_b);

// One crossing of a two-string tangle. An event carries two passages: the
// first on strand `first`, the second on strand `second`. first_over marks
// the first-listed passage as the over one. Each passage sits at a position
// along its strand (1-based travel order); position 0 means "assign
// automatically", which gives bare events the event-list order on both
// strands. Explicit positions let a strand revisit crossings out of list
// order, which general tangles need.
struct TangleEvent {
    char first = 'A';
    char second = 'B';
    int sign = 1;
    bool first_over = true;
    int first_pos = 0;
    int second_pos = 0;

    friend bool operator==(const TangleEvent&, const TangleEvent&) = default;
};

// A two-string tangle as a crossing-event sequence. Restricted to either
// strand, the resolved positions give that strand's travel order; bare
// (auto-positioned) events fall back to event-list order.
struct TangleWord {
    std::vector<TangleEvent> events;

    int crossing_count() const { return static_cast<int>(events.size()); }
    friend bool operator==(const TangleWord&, const TangleWord&) = default;
};

// One event per line: "X <first> <second> <sign> <over>", e.g. "X A B + A"
// or, with explicit strand positions, "X A3 B7 - B". <over> names the over
// strand; self-crossings use slot digits 1 or 2 instead, e.g. "X B B - 2".
// Blank lines and #-comments are skipped. Positions on each strand must
// resolve to 1..n with no clashes; violations raise IllegalEvent.
TangleWord parse_tangle(const std::string& text);
std::string serialize(const TangleWord& t);

// The Kinoshita-Terasaka tangle: eleven crossings, both strands woven.
TangleWord kt_tangle();

// Replaces two trivial arcs of the code with the tangle's strands: strand A
// enters at arc1, strand B at arc2, with fresh crossing ids. Coincident cuts
// are only meaningful on the empty word (the two arcs of a round circle);
// elsewhere they cannot be oriented and raise OrientationMismatch.
KnotCode tangle_splice(const KnotCode& code, std::size_t arc1, std::size_t arc2,
                       const TangleWord& t);

// Satellite with the Livingston pattern: the companion is traversed three
// times (core, finger out, finger back) under blackboard framing, and the
// finger tip clasps through the core at the basepoint. Winding number one,
// wrapping number three, single component.
KnotCode livingston_satellite(const KnotCode& code);

}  // namespace vk
