// Acceptance gate: one check per release criterion, one line of output each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "numbering_oracle.hpp"
#include "vk/cobordism.hpp"
#include "vk/constructions.hpp"
#include "vk/invariants.hpp"
#include "vk/moves.hpp"
#include "vk/surface.hpp"

using namespace vk;
using Clock = std::chrono::steady_clock;

namespace {

const char* kKink = "O1+ U1+";
const char* kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
const char* kFigure8 = "O1+ U2+ O3- U4- O2+ U1+ O4- U3-";
const char* kVtref = "O1+ O2+ U1+ U2+";
const char* kKishino = "O2- U1+ U2- O1+ O4+ U3- U4+ O3-";
const char* kKishinoHalfA = "O2- U1+ U2- O1+";
const char* kKishinoHalfB = "O2+ U1- U2+ O1-";

struct Outcome {
    bool pass = true;
    std::string detail;
};

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

LaurentPoly with_exponent(const LaurentPoly& p, int factor) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) out += LaurentPoly::term(e * factor, c);
    return out;
}

// Half-power form of the skein balance: units u, v with
// u*P(t^2) - v*Q(t^2) = (t - t^-1) * R(t^2) up to a third unit.
bool skein_balanced(const LaurentPoly& dplus, const LaurentPoly& dminus, const LaurentPoly& dzero) {
    const LaurentPoly p = with_exponent(dplus, 2);
    const LaurentPoly q = with_exponent(dminus, 2);
    const LaurentPoly rhs = (LaurentPoly::t(1) - LaurentPoly::t(-1)) * with_exponent(dzero, 2);
    if (rhs.is_zero()) return normalize_units(p) == normalize_units(q);
    const LaurentPoly target = normalize_units(rhs);
    for (int d = -40; d <= 40; ++d)
        for (const int sign : {1, -1}) {
            const LaurentPoly lhs = p - with_exponent(q, 1).shifted(d) * LaurentPoly(Int(sign));
            if (normalize_units(lhs) == target) return true;
        }
    return false;
}

KnotCode random_code(std::mt19937& rng, int max_crossings) {
    const int n = static_cast<int>(rng() % static_cast<unsigned>(max_crossings + 1));
    std::vector<int> slots(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) slots[static_cast<std::size_t>(i)] = i;
    std::shuffle(slots.begin(), slots.end(), rng);
    Component word(static_cast<std::size_t>(2 * n), Token{0, Passage::Over, +1});
    for (int c = 0; c < n; ++c) {
        const bool first_over = (rng() & 1) != 0;
        const int sign = (rng() & 1) ? +1 : -1;
        word[static_cast<std::size_t>(slots[static_cast<std::size_t>(2 * c)])] =
            Token{c + 1, first_over ? Passage::Over : Passage::Under, sign};
        word[static_cast<std::size_t>(slots[static_cast<std::size_t>(2 * c + 1)])] =
            Token{c + 1, first_over ? Passage::Under : Passage::Over, sign};
    }
    return KnotCode(std::move(word));
}

std::vector<KnotCode> classical_corpus(std::size_t want, int max_crossings, std::mt19937& rng) {
    const std::vector<KnotCode> seeds = {parse_knot(kTrefoil), parse_knot(kFigure8),
                                         parse_knot(kKink), parse_knot("")};
    std::vector<KnotCode> out;
    while (out.size() < want) {
        KnotCode cur = seeds[rng() % seeds.size()];
        for (int step = 0; step < 5; ++step) {
            const auto moves = legal_moves(cur.as_link());
            for (int attempt = 0; attempt < 16; ++attempt) {
                const KnotCode next = apply(cur, moves[rng() % moves.size()]);
                if (next.crossing_count() <= max_crossings && carter_genus(next) == 0) {
                    cur = next;
                    break;
                }
            }
        }
        if (cur.crossing_count() >= 1) out.push_back(cur);
    }
    return out;
}

std::string data_path(const char* name) {
    return std::string(VK_DATA_DIR) + "/" + name;
}

Outcome genus_spot_values() {
    struct Row {
        const char* code;
        int genus;
    };
    const Row rows[] = {{kVtref, 1}, {kTrefoil, 0}, {kFigure8, 0}};
    Outcome out;
    double worst = 0.0;
    for (const Row& r : rows) {
        const KnotCode code = parse_knot(r.code);
        double best = 1e9;
        int got = -1;
        for (int rep = 0; rep < 3; ++rep) {
            const auto t0 = Clock::now();
            got = carter_genus(code);
            best = std::min(best, ms_since(t0));
        }
        worst = std::max(worst, best);
        if (got != r.genus) {
            out.pass = false;
            out.detail += std::string("genus(") + r.code + ") = " + std::to_string(got) +
                          ", want " + std::to_string(r.genus) + "; ";
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst best-of-3 %.3f ms", worst);
    if (worst >= 1.0) {
        out.pass = false;
        out.detail += std::string(buf) + " exceeds 1 ms";
    } else if (out.pass) {
        out.detail = std::string("virtual trefoil 1, trefoil 0, figure-8 0; ") + buf;
    }
    return out;
}

Outcome numbering_oracle_equivalence() {
    const auto t0 = Clock::now();
    std::size_t checked = 0;
    for (const KnotCode& code : vktest::all_knot_codes_up_to(4)) {
        ++checked;
        if (is_almost_classical(code) != vktest::alexander_numerable(code)) {
            Outcome out;
            out.pass = false;
            out.detail = "disagreement on " + serialize(code);
            return out;
        }
    }
    Outcome out;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu codes with up to 4 crossings in %.0f ms", checked,
                  ms_since(t0));
    out.detail = buf;
    if (ms_since(t0) > 60000.0) {
        out.pass = false;
        out.detail += " (over the one-minute budget)";
    }
    return out;
}

Outcome move_invariance_suite() {
    std::mt19937 rng(2026);
    struct Tracker {
        const char* name;
        int failures = 0;
        std::string example;
    };
    Tracker tracked[] = {{"odd_writhe"},
                         {"writhe_polynomial"},
                         {"is_almost_classical"},
                         {"ac_alexander"},
                         {"generalized_alexander"}};
    const int pairs = 1000;
    for (int trial = 0; trial < pairs; ++trial) {
        const KnotCode a = random_code(rng, 6);
        KnotCode b = a;
        std::string script;
        const int steps = static_cast<int>(rng() % 7);
        for (int step = 0; step < steps; ++step) {
            const auto moves = legal_moves(b.as_link());
            if (moves.empty()) break;
            for (int attempt = 0; attempt < 16; ++attempt) {
                const MoveSite& site = moves[rng() % moves.size()];
                const KnotCode next = apply(b, site);
                if (next.crossing_count() > 8) continue;
                if (!script.empty()) script += ", ";
                script += serialize(site);
                b = next;
                break;
            }
        }
        const bool bad[] = {
            odd_writhe(a) != odd_writhe(b),
            !(writhe_polynomial(a) == writhe_polynomial(b)),
            is_almost_classical(a) != is_almost_classical(b),
            !(normalize_units(ac_alexander(a).poly) == normalize_units(ac_alexander(b).poly)),
            !(normalize_units(generalized_alexander(a)) ==
              normalize_units(generalized_alexander(b))),
        };
        for (std::size_t i = 0; i < 5; ++i) {
            if (!bad[i]) continue;
            ++tracked[i].failures;
            if (tracked[i].example.empty())
                tracked[i].example = "\"" + serialize(a) + "\" --[" + script + "]--> \"" +
                                     serialize(b) + "\"";
        }
    }
    Outcome out;
    std::string detail;
    for (const Tracker& t : tracked) {
        if (t.failures == 0) continue;
        out.pass = false;
        detail += std::string(t.name) + " changed on " + std::to_string(t.failures) + "/" +
                  std::to_string(pairs) + " pairs, e.g. " + t.example + "; ";
    }
    out.detail = out.pass ? "all five invariants held on 1000 random move-sequence pairs"
                          : detail;
    return out;
}

Outcome seifert_oracle() {
    // det(tV^T - V) for hand-coded genus-1 Seifert matrices.
    auto det2 = [](const LaurentPoly m[2][2]) {
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    };
    auto entry = [](int v, int vt) {
        return LaurentPoly::term(1, Int(vt)) - LaurentPoly::term(0, Int(v));
    };
    // trefoil V = [[-1, 1], [0, -1]]
    const LaurentPoly tref[2][2] = {{entry(-1, -1), entry(1, 0)}, {entry(0, 1), entry(-1, -1)}};
    // figure-8 V = [[1, 1], [0, -1]]
    const LaurentPoly fig8[2][2] = {{entry(1, 1), entry(1, 0)}, {entry(0, 1), entry(-1, -1)}};
    const LaurentPoly dtref = det2(tref), dfig8 = det2(fig8);

    Outcome out;
    if (!(normalize_units(dtref) == normalize_units(ac_alexander(parse_knot(kTrefoil)).poly))) {
        out.pass = false;
        out.detail += "trefoil: Fox " + ac_alexander(parse_knot(kTrefoil)).poly.to_string() +
                      " vs Seifert " + dtref.to_string() + "; ";
    }
    if (!(normalize_units(dfig8) == normalize_units(ac_alexander(parse_knot(kFigure8)).poly))) {
        out.pass = false;
        out.detail += "figure-8: Fox " + ac_alexander(parse_knot(kFigure8)).poly.to_string() +
                      " vs Seifert " + dfig8.to_string() + "; ";
    }
    const LaurentPoly want_tref = LaurentPoly::term(2, Int(1)) - LaurentPoly::t(1) + LaurentPoly(Int(1));
    const LaurentPoly want_fig8 = LaurentPoly::term(2, Int(1)) - LaurentPoly::term(1, Int(3)) + LaurentPoly(Int(1));
    if (!(normalize_units(dtref) == normalize_units(want_tref)) ||
        !(normalize_units(dfig8) == normalize_units(want_fig8))) {
        out.pass = false;
        out.detail += "Seifert determinants off the pinned polynomials; ";
    }
    if (out.pass) out.detail = "Fox calculus matches det(tV^T - V) on both genus-1 matrices";
    return out;
}

Outcome skein_relation() {
    const auto t0 = Clock::now();
    std::mt19937 rng(515);
    const auto corpus = classical_corpus(50, 6, rng);
    int checked = 0;
    for (const KnotCode& code : corpus) {
        std::vector<int> ids;
        for (const Token& t : code.tokens())
            if (t.passage == Passage::Over) ids.push_back(t.id);
        const SkeinTriple triple = skein_triple(code, ids[rng() % ids.size()]);
        ++checked;
        if (!skein_balanced(ac_alexander(triple.plus).poly, ac_alexander(triple.minus).poly,
                            link_alexander(triple.zero))) {
            Outcome out;
            out.pass = false;
            out.detail = "unbalanced on " + serialize(code);
            return out;
        }
    }
    Outcome out;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d random classical codes balanced in %.0f ms", checked,
                  ms_since(t0));
    out.detail = buf;
    if (ms_since(t0) > 60000.0) {
        out.pass = false;
        out.detail += " (over the one-minute budget)";
    }
    return out;
}

Outcome movie_calculus() {
    Outcome out;
    std::ifstream in(data_path("composite_to_prime.movie"));
    if (!in) {
        out.pass = false;
        out.detail = "missing data/composite_to_prime.movie";
        return out;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const MovieFile file = parse_movie(buf.str());
    const Certificate cert = verify_movie(file.movie, file.from, file.to);
    if (cert.births != 0 || cert.saddles != 2 || cert.deaths != 2 || !cert.connected) {
        out.pass = false;
        char msg[128];
        std::snprintf(msg, sizeof msg, "movie certificate births=%d saddles=%d deaths=%d connected=%d; ",
                      cert.births, cert.saddles, cert.deaths, int(cert.connected));
        out.detail += msg;
    }
    Movie one_saddle;
    one_saddle.initial = parse_link("");
    one_saddle.events.push_back(MovieEvent::saddle({0, 0}, {0, 0}, true));
    bool rejected = false;
    try {
        verify_movie(one_saddle, parse_knot(""), parse_knot(""));
    } catch (const Error& e) {
        rejected = e.kind() == ErrorKind::CountFailure;
    }
    if (!rejected) {
        out.pass = false;
        out.detail += "lone saddle not rejected with a count failure";
    }
    if (out.pass)
        out.detail = "shipped movie verifies 0-2+2 = 0 with connected lifeline graph; lone saddle rejected";
    return out;
}

Outcome satellite_concordance() {
    Outcome out;
    const char* catalog[] = {"", kKink, kTrefoil, kFigure8, kVtref, kKishino};
    for (const char* c : catalog) {
        const KnotCode in = parse_knot(c);
        const KnotCode sat = livingston_satellite(in);
        if (!(writhe_polynomial(sat) == writhe_polynomial(in)) ||
            odd_writhe(sat) != odd_writhe(in)) {
            out.pass = false;
            out.detail += std::string("writhe data moved on \"") + c + "\"; ";
        }
    }
    const KnotCode vtref = parse_knot(kVtref);
    if (normalize_units(generalized_alexander(livingston_satellite(vtref))) ==
        normalize_units(generalized_alexander(vtref))) {
        out.pass = false;
        out.detail += "generalized Alexander failed to separate the virtual trefoil from its satellite";
    }
    if (out.pass)
        out.detail = "writhe invariants preserved on all six catalog entries; satellite of the "
                     "virtual trefoil has a new generalized Alexander polynomial";
    return out;
}

Outcome alexander_preservation() {
    Outcome out;
    const KnotCode trefoil = parse_knot(kTrefoil);
    const LaurentPoly want = normalize_units(ac_alexander(trefoil).poly);
    const LaurentPoly sat = normalize_units(ac_alexander(livingston_satellite(trefoil)).poly);
    if (!(sat == want)) {
        out.pass = false;
        out.detail += "satellite: " + sat.to_string() + " vs " + want.to_string() + "; ";
    }
    const KnotCode spliced = tangle_splice(trefoil, 0, 3, kt_tangle());
    const LaurentPoly spl = normalize_units(ac_alexander(spliced).poly);
    if (!(spl == want)) {
        out.pass = false;
        out.detail += "tangle splice: " + spl.to_string() + " vs " + want.to_string() + "; ";
    }
    if (out.pass)
        out.detail = "satellite and spliced trefoil both keep the trefoil polynomial up to units";
    return out;
}

Outcome kishino_connected_sum() {
    Outcome out;
    const KnotCode sum = connected_sum(parse_knot(kKishinoHalfA), 0, parse_knot(kKishinoHalfB), 0);
    if (sum.crossing_count() != 4) {
        out.pass = false;
        out.detail += "sum has " + std::to_string(sum.crossing_count()) + " crossings; ";
    }
    if (!(canonicalize(sum) == canonicalize(parse_knot(kKishino)))) {
        out.pass = false;
        out.detail += "sum is not the pinned 4-crossing code; ";
    }
    const auto t0 = Clock::now();
    const auto path = equivalent_search(parse_knot(kKishino), parse_knot(""), 6);
    if (path.has_value()) {
        out.pass = false;
        out.detail += "bounded search unexpectedly reached the unknot";
    }
    if (out.pass) {
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "4-crossing sum of trivial halves; depth-6 search found no unknotting (%.0f ms)",
                      ms_since(t0));
        out.detail = buf;
    }
    return out;
}

Outcome slice_obstruction_report() {
    Outcome out;
    const SliceReport vtref = slice_obstructions(parse_knot(kVtref));
    if (!vtref.not_slice || vtref.items.empty() || vtref.items[0].name != "odd-writhe" ||
        vtref.items[0].value != "2" || !vtref.items[0].obstructs) {
        out.pass = false;
        out.detail += "virtual trefoil report wrong; ";
    }
    for (const char* c : {"", kTrefoil}) {
        const SliceReport r = slice_obstructions(parse_knot(c));
        if (r.not_slice) {
            out.pass = false;
            out.detail += std::string("\"") + c + "\" reported not slice; ";
        }
    }
    std::size_t classical = 0;
    for (const KnotCode& code : vktest::all_knot_codes_up_to(3)) {
        if (carter_genus(code) != 0) continue;
        ++classical;
        if (!generalized_alexander(code).is_zero()) {
            out.pass = false;
            out.detail += "nonzero generalized Alexander on classical " + serialize(code) + "; ";
            break;
        }
    }
    if (!generalized_alexander(parse_knot(kFigure8)).is_zero()) {
        out.pass = false;
        out.detail += "nonzero generalized Alexander on the figure-8; ";
    }
    if (out.pass) {
        out.detail = "virtual trefoil obstructed by odd writhe 2; unknot and trefoil inconclusive; "
                     "generalized Alexander vanished on all " +
                     std::to_string(classical) + " enumerated classical codes";
    }
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        const char* title;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"surface genus spot values", genus_spot_values},
        {"almost-classical detection vs numbering oracle", numbering_oracle_equivalence},
        {"move-invariance master suite", move_invariance_suite},
        {"Fox calculus vs Seifert matrix oracle", seifert_oracle},
        {"Alexander skein relation on classical codes", skein_relation},
        {"concordance movie calculus", movie_calculus},
        {"satellite concordance consistency", satellite_concordance},
        {"Alexander preservation under satellite and splice", alexander_preservation},
        {"Kishino connected sum", kishino_connected_sum},
        {"slice obstruction report", slice_obstruction_report},
    };
    int failures = 0;
    int index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        if (!out.pass) ++failures;
        std::printf("[%2d] %s  %s%s%s\n", index, out.pass ? "PASS" : "FAIL", c.title,
                    out.detail.empty() ? "" : " | ", out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %d/10 criteria passed\n", 10 - failures);
    return failures;
}
