#include "vk/cobordism.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vk/invariants.hpp"

namespace vk {

namespace {

std::string pos_str(Pos p) { return std::to_string(p.comp) + "." + std::to_string(p.index); }

Pos parse_pos(const std::string& s, const std::string& where) {
    const auto dot = s.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == s.size())
        throw Error(ErrorKind::SyntaxError, where + ": expected <component>.<gap>, got '" + s + "'");
    Pos p;
    try {
        p.comp = std::stoi(s.substr(0, dot));
        p.index = std::stoi(s.substr(dot + 1));
    } catch (const std::exception&) {
        throw Error(ErrorKind::SyntaxError, where + ": bad position '" + s + "'");
    }
    return p;
}

Component rotated(const Component& w, std::size_t gap) {
    Component out;
    out.reserve(w.size());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(gap), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(gap));
    return out;
}

void check_gap(const LinkCode& frame, Pos g, const char* which) {
    if (g.comp < 0 || g.comp >= static_cast<int>(frame.component_count()))
        throw Error(ErrorKind::IllegalEvent,
                    std::string(which) + " saddle gap names component " + std::to_string(g.comp) +
                        " of a " + std::to_string(frame.component_count()) + "-component frame");
    const auto len = frame.components()[static_cast<std::size_t>(g.comp)].size();
    if (g.index < 0 || g.index > static_cast<int>(len))
        throw Error(ErrorKind::IllegalEvent, std::string(which) + " saddle gap " + pos_str(g) +
                                                 " is outside the component (length " +
                                                 std::to_string(len) + ")");
}

}  // namespace

const char* to_string(EventKind k) {
    switch (k) {
        case EventKind::RMove: return "R";
        case EventKind::Birth: return "B";
        case EventKind::Death: return "D";
        case EventKind::Saddle: return "S";
    }
    return "?";
}

MovieEvent MovieEvent::rmove(MoveSite site) {
    MovieEvent e;
    e.kind = EventKind::RMove;
    e.move = std::move(site);
    return e;
}

MovieEvent MovieEvent::birth(int pos) {
    MovieEvent e;
    e.kind = EventKind::Birth;
    e.birth_pos = pos;
    return e;
}

MovieEvent MovieEvent::death(int comp) {
    MovieEvent e;
    e.kind = EventKind::Death;
    e.death_comp = comp;
    return e;
}

MovieEvent MovieEvent::saddle(Pos g1, Pos g2, bool anti) {
    MovieEvent e;
    e.kind = EventKind::Saddle;
    e.gap1 = g1;
    e.gap2 = g2;
    e.anti = anti;
    return e;
}

LinkCode apply_event(const LinkCode& frame, const MovieEvent& e) {
    switch (e.kind) {
        case EventKind::RMove:
            try {
                return apply(frame, e.move);
            } catch (const Error& err) {
                throw Error(ErrorKind::IllegalEvent,
                            std::string("move rejected: ") + err.what());
            }
        case EventKind::Birth: {
            if (e.birth_pos < 0 || e.birth_pos > static_cast<int>(frame.component_count()))
                throw Error(ErrorKind::IllegalEvent,
                            "birth insertion point " + std::to_string(e.birth_pos) +
                                " out of range");
            std::vector<Component> comps = frame.components();
            comps.insert(comps.begin() + e.birth_pos, Component{});
            return LinkCode(std::move(comps));
        }
        case EventKind::Death: {
            if (e.death_comp < 0 || e.death_comp >= static_cast<int>(frame.component_count()))
                throw Error(ErrorKind::IllegalEvent,
                            "death names component " + std::to_string(e.death_comp) + " of a " +
                                std::to_string(frame.component_count()) + "-component frame");
            if (!frame.components()[static_cast<std::size_t>(e.death_comp)].empty())
                throw Error(ErrorKind::IllegalEvent,
                            "death of component " + std::to_string(e.death_comp) +
                                ", which still has crossings");
            if (frame.component_count() == 1)
                throw Error(ErrorKind::IllegalEvent, "death would empty the diagram");
            std::vector<Component> comps = frame.components();
            comps.erase(comps.begin() + e.death_comp);
            return LinkCode(std::move(comps));
        }
        case EventKind::Saddle: {
            if (!e.anti)
                throw Error(ErrorKind::IllegalEvent,
                            "saddle with parallel band orientation reverses a strand");
            check_gap(frame, e.gap1, "first");
            check_gap(frame, e.gap2, "second");
            std::vector<Component> comps = frame.components();
            if (e.gap1.comp == e.gap2.comp) {
                const auto c = static_cast<std::size_t>(e.gap1.comp);
                const Component w = comps[c];
                const auto i = static_cast<std::size_t>(std::min(e.gap1.index, e.gap2.index));
                const auto j = static_cast<std::size_t>(std::max(e.gap1.index, e.gap2.index));
                Component piece1(w.begin() + static_cast<std::ptrdiff_t>(i),
                                 w.begin() + static_cast<std::ptrdiff_t>(j));
                Component piece2 = rotated(w, j % std::max<std::size_t>(w.size(), 1));
                piece2.resize(w.size() - piece1.size());
                comps[c] = std::move(piece1);
                comps.insert(comps.begin() + static_cast<std::ptrdiff_t>(c) + 1,
                             std::move(piece2));
            } else {
                const auto a = static_cast<std::size_t>(e.gap1.comp);
                const auto b = static_cast<std::size_t>(e.gap2.comp);
                Component merged = rotated(comps[a], static_cast<std::size_t>(e.gap1.index));
                Component tail = rotated(comps[b], static_cast<std::size_t>(e.gap2.index));
                merged.insert(merged.end(), tail.begin(), tail.end());
                comps[a] = std::move(merged);
                comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(b));
            }
            return LinkCode(std::move(comps));
        }
    }
    throw Error(ErrorKind::IllegalEvent, "unknown event kind");
}

Certificate verify_movie(const Movie& m, const KnotCode& from, const KnotCode& to) {
    if (!(canonicalize(m.initial) == canonicalize(from.as_link())))
        throw Error(ErrorKind::EndpointMismatch,
                    "initial frame " + serialize(m.initial) + " is not the claimed source " +
                        serialize(from));

    Certificate cert;
    std::vector<int> lifeline(m.initial.component_count());
    std::iota(lifeline.begin(), lifeline.end(), 0);
    int next_lifeline = static_cast<int>(lifeline.size());

    LinkCode frame = m.initial;
    for (std::size_t k = 0; k < m.events.size(); ++k) {
        const MovieEvent& e = m.events[k];
        try {
            frame = apply_event(frame, e);
        } catch (const Error& err) {
            throw Error(ErrorKind::IllegalEvent,
                        "event " + std::to_string(k) + ": " + err.what());
        }
        switch (e.kind) {
            case EventKind::RMove:
                break;
            case EventKind::Birth:
                ++cert.births;
                lifeline.insert(lifeline.begin() + e.birth_pos, next_lifeline++);
                break;
            case EventKind::Death:
                ++cert.deaths;
                lifeline.erase(lifeline.begin() + e.death_comp);
                break;
            case EventKind::Saddle: {
                ++cert.saddles;
                if (e.gap1.comp == e.gap2.comp) {
                    const int parent = lifeline[static_cast<std::size_t>(e.gap1.comp)];
                    const int c1 = next_lifeline++, c2 = next_lifeline++;
                    cert.genealogy_edges.push_back({parent, c1});
                    cert.genealogy_edges.push_back({parent, c2});
                    lifeline[static_cast<std::size_t>(e.gap1.comp)] = c1;
                    lifeline.insert(lifeline.begin() + e.gap1.comp + 1, c2);
                } else {
                    const int pa = lifeline[static_cast<std::size_t>(e.gap1.comp)];
                    const int pb = lifeline[static_cast<std::size_t>(e.gap2.comp)];
                    const int child = next_lifeline++;
                    cert.genealogy_edges.push_back({pa, child});
                    cert.genealogy_edges.push_back({pb, child});
                    lifeline[static_cast<std::size_t>(e.gap1.comp)] = child;
                    lifeline.erase(lifeline.begin() + e.gap2.comp);
                }
                break;
            }
        }
    }

    cert.lifelines = next_lifeline;
    cert.euler_ok = cert.births - cert.saddles + cert.deaths == 0;
    if (!cert.euler_ok)
        throw Error(ErrorKind::CountFailure,
                    "births - saddles + deaths = " + std::to_string(cert.births) + " - " +
                        std::to_string(cert.saddles) + " + " + std::to_string(cert.deaths) +
                        " != 0");

    if (!(canonicalize(frame) == canonicalize(to.as_link())))
        throw Error(ErrorKind::EndpointMismatch,
                    "final frame " + serialize(frame) + " is not the claimed target " +
                        serialize(to));

    std::vector<int> parent(static_cast<std::size_t>(next_lifeline));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (auto [a, b] : cert.genealogy_edges) parent[static_cast<std::size_t>(find(a))] = find(b);
    int roots = 0;
    for (int x = 0; x < next_lifeline; ++x) roots += find(x) == x;
    cert.connected = roots <= 1;
    if (!cert.connected)
        throw Error(ErrorKind::Disconnected,
                    "movie surface has " + std::to_string(roots) + " pieces");
    return cert;
}

MovieFile parse_movie(const std::string& text) {
    MovieFile out;
    bool saw_from = false, saw_to = false;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::string head;
        if (!(fields >> head)) continue;
        const std::string where = "movie line " + std::to_string(lineno);
        std::string rest;
        std::getline(fields, rest);
        const auto start = rest.find_first_not_of(" \t");
        rest = start == std::string::npos ? std::string{} : rest.substr(start);
        while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t')) rest.pop_back();
        if (head == "FROM") {
            if (saw_from) throw Error(ErrorKind::SyntaxError, where + ": duplicate FROM");
            saw_from = true;
            out.from = parse_knot(rest);
            out.movie.initial = out.from.as_link();
        } else if (head == "TO") {
            if (saw_to) throw Error(ErrorKind::SyntaxError, where + ": duplicate TO");
            saw_to = true;
            out.to = parse_knot(rest);
        } else if (head == "R") {
            out.movie.events.push_back(MovieEvent::rmove(parse_move(rest)));
        } else if (head == "B" || head == "D") {
            int v;
            try {
                v = std::stoi(rest);
            } catch (const std::exception&) {
                throw Error(ErrorKind::SyntaxError, where + ": expected an index, got '" + rest + "'");
            }
            out.movie.events.push_back(head == "B" ? MovieEvent::birth(v) : MovieEvent::death(v));
        } else if (head == "S") {
            std::istringstream sf(rest);
            std::string g1, g2, orient;
            if (!(sf >> g1 >> g2 >> orient))
                throw Error(ErrorKind::SyntaxError, where + ": expected S <gap> <gap> <orient>");
            bool anti;
            if (orient == "anti")
                anti = true;
            else if (orient == "par")
                anti = false;
            else
                throw Error(ErrorKind::SyntaxError,
                            where + ": orientation must be anti or par, got '" + orient + "'");
            out.movie.events.push_back(
                MovieEvent::saddle(parse_pos(g1, where), parse_pos(g2, where), anti));
        } else {
            throw Error(ErrorKind::SyntaxError, where + ": unknown directive '" + head + "'");
        }
    }
    if (!saw_from) throw Error(ErrorKind::SyntaxError, "movie has no FROM header");
    if (!saw_to) throw Error(ErrorKind::SyntaxError, "movie has no TO header");
    return out;
}

std::string serialize(const MovieFile& file) {
    std::string out = "FROM " + serialize(file.from) + "\nTO " + serialize(file.to) + "\n";
    for (const MovieEvent& e : file.movie.events) {
        switch (e.kind) {
            case EventKind::RMove:
                out += "R " + serialize(e.move) + "\n";
                break;
            case EventKind::Birth:
                out += "B " + std::to_string(e.birth_pos) + "\n";
                break;
            case EventKind::Death:
                out += "D " + std::to_string(e.death_comp) + "\n";
                break;
            case EventKind::Saddle:
                out += "S " + pos_str(e.gap1) + " " + pos_str(e.gap2) +
                       (e.anti ? " anti\n" : " par\n");
                break;
        }
    }
    return out;
}

SliceReport slice_obstructions(const KnotCode& code) {
    SliceReport report;
    const int ow = odd_writhe(code);
    report.items.push_back({"odd-writhe", std::to_string(ow), ow != 0});
    const LaurentPoly w = writhe_polynomial(code);
    report.items.push_back({"writhe-polynomial", w.to_string(), !w.is_zero()});
    const LaurentPoly2 g = generalized_alexander(code);
    report.items.push_back({"generalized-alexander", g.to_string(), !g.is_zero()});
    for (const SliceObstruction& item : report.items) report.not_slice |= item.obstructs;
    return report;
}

}  // namespace vk
