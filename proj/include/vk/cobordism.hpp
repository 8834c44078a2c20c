#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vk/gauss_code.hpp"
#include "vk/laurent.hpp"
#include "vk/moves.hpp"

namespace vk {

enum class EventKind { RMove, Birth, Death, Saddle };
const char* to_string(EventKind k);

// One step of a movie. Saddles carry the band's two attachment gaps and its
// orientation: an oriented band joins arcs running antiparallel across it,
// so anti=false is never legal and is kept only so transcriptions can state
// what they meant and be rejected loudly.
struct MovieEvent {
    EventKind kind = EventKind::RMove;
    MoveSite move;       // RMove
    int birth_pos = 0;   // Birth: insertion index in the component list
    int death_comp = 0;  // Death: component index, must be crossing-free
    Pos gap1, gap2;      // Saddle attachment gaps
    bool anti = true;    // Saddle orientation flag

    static MovieEvent rmove(MoveSite site);
    static MovieEvent birth(int pos);
    static MovieEvent death(int comp);
    static MovieEvent saddle(Pos g1, Pos g2, bool anti = true);
};

// Event-sourced movie: the initial frame plus events; later frames are
// recomputed, never stored.
struct Movie {
    LinkCode initial;
    std::vector<MovieEvent> events;
};

// Movie file with its claimed endpoints.
struct MovieFile {
    Movie movie;
    KnotCode from, to;
};

struct Certificate {
    int births = 0;
    int deaths = 0;
    int saddles = 0;
    bool euler_ok = false;
    bool connected = false;
    // Component lifelines: one node per component lifetime, edges where a
    // saddle splits or merges lifelines.
    int lifelines = 0;
    std::vector<std::pair<int, int>> genealogy_edges;
};

// Applies one event. Birth inserts a crossing-free component; Death removes
// one (it must be crossing-free and not the last component); a saddle on one
// component splits it at the two gaps, on two components it merges them;
// RMove delegates to the moves module. All failures raise IllegalEvent.
LinkCode apply_event(const LinkCode& frame, const MovieEvent& e);

// Checks, in order: initial frame matches `from` (else EndpointMismatch),
// every event is legal (else IllegalEvent with its index), births - saddles
// + deaths = 0 (else CountFailure), final frame matches `to` (else
// EndpointMismatch), and the lifeline genealogy is connected (else
// Disconnected). Frames are compared canonically. Returns the certificate
// of a verified concordance.
Certificate verify_movie(const Movie& m, const KnotCode& from, const KnotCode& to);

// Text form: "FROM <code>" and "TO <code>" headers, then one event per
// line: "R <kind>@<site>", "B <pos>", "D <component>", or
// "S <gap1> <gap2> <orient>" with gaps as component.index and orient
// "anti" or "par". Blank lines and #-comments are skipped.
MovieFile parse_movie(const std::string& text);
std::string serialize(const MovieFile& file);

struct SliceObstruction {
    std::string name;
    std::string value;
    bool obstructs = false;
};

// Concordance-invariant obstructions to sliceness. Any nonzero value rules
// sliceness out; all zero is inconclusive, never a certificate.
struct SliceReport {
    std::vector<SliceObstruction> items;
    bool not_slice = false;
};

SliceReport slice_obstructions(const KnotCode& code);

}  // namespace vk
