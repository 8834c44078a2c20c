#include "vk/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace vk {

const char* to_string(MoveKind k) {
    switch (k) {
        case MoveKind::R1Plus: return "R1+";
        case MoveKind::R1Minus: return "R1-";
        case MoveKind::R2Plus: return "R2+";
        case MoveKind::R2Minus: return "R2-";
        case MoveKind::R3: return "R3";
    }
    return "?";
}

std::string serialize(const MoveSite& site) {
    std::string out = to_string(site.kind);
    out += '@';
    for (std::size_t i = 0; i < site.positions.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(site.positions[i].comp);
        out += '.';
        out += std::to_string(site.positions[i].index);
    }
    if (site.kind == MoveKind::R1Plus) {
        out += site.sign > 0 ? "[+," : "[-,";
        out += site.over_first ? "OU]" : "UO]";
    } else if (site.kind == MoveKind::R2Plus) {
        out += site.sign > 0 ? "[+," : "[-,";
        out += site.over_first ? "over," : "under,";
        out += site.parallel ? "par]" : "anti]";
    }
    return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_int(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw Error(ErrorKind::SyntaxError, "bad number in move site: '" + s + "'");
    return std::stoi(s);
}

}  // namespace

MoveSite parse_move(const std::string& text) {
    const auto at = text.find('@');
    if (at == std::string::npos)
        throw Error(ErrorKind::SyntaxError, "move site needs '@': '" + text + "'");
    const std::string kind = text.substr(0, at);
    std::string rest = text.substr(at + 1);

    MoveSite site;
    if (kind == "R1+")
        site.kind = MoveKind::R1Plus;
    else if (kind == "R1-")
        site.kind = MoveKind::R1Minus;
    else if (kind == "R2+")
        site.kind = MoveKind::R2Plus;
    else if (kind == "R2-")
        site.kind = MoveKind::R2Minus;
    else if (kind == "R3")
        site.kind = MoveKind::R3;
    else
        throw Error(ErrorKind::SyntaxError, "unknown move kind: '" + kind + "'");

    std::string params;
    const auto br = rest.find('[');
    if (br != std::string::npos) {
        if (rest.back() != ']')
            throw Error(ErrorKind::SyntaxError, "unterminated move parameters: '" + text + "'");
        params = rest.substr(br + 1, rest.size() - br - 2);
        rest = rest.substr(0, br);
    }

    for (const std::string& p : split(rest, ',')) {
        const auto dot = p.find('.');
        if (dot == std::string::npos)
            throw Error(ErrorKind::SyntaxError, "position needs comp.index: '" + p + "'");
        site.positions.push_back({parse_int(p.substr(0, dot)), parse_int(p.substr(dot + 1))});
    }

    const bool wants_params = site.kind == MoveKind::R1Plus || site.kind == MoveKind::R2Plus;
    if (wants_params != !params.empty())
        throw Error(ErrorKind::SyntaxError, "move parameter mismatch: '" + text + "'");
    if (!params.empty()) {
        const auto fields = split(params, ',');
        const std::size_t want = site.kind == MoveKind::R1Plus ? 2 : 3;
        if (fields.size() != want || (fields[0] != "+" && fields[0] != "-"))
            throw Error(ErrorKind::SyntaxError, "bad move parameters: '" + text + "'");
        site.sign = fields[0] == "+" ? +1 : -1;
        if (site.kind == MoveKind::R1Plus) {
            if (fields[1] != "OU" && fields[1] != "UO")
                throw Error(ErrorKind::SyntaxError, "bad move parameters: '" + text + "'");
            site.over_first = fields[1] == "OU";
        } else {
            if ((fields[1] != "over" && fields[1] != "under") ||
                (fields[2] != "par" && fields[2] != "anti"))
                throw Error(ErrorKind::SyntaxError, "bad move parameters: '" + text + "'");
            site.over_first = fields[1] == "over";
            site.parallel = fields[2] == "par";
        }
    }
    return site;
}

namespace {

using Comps = std::vector<Component>;

const Token& token_at(const Comps& comps, Pos p) {
    if (p.comp < 0 || static_cast<std::size_t>(p.comp) >= comps.size())
        throw Error(ErrorKind::IllegalSite, "component out of range");
    const Component& c = comps[p.comp];
    if (p.index < 0 || static_cast<std::size_t>(p.index) >= c.size())
        throw Error(ErrorKind::IllegalSite, "token index out of range");
    return c[p.index];
}

Pos pair_second(const Comps& comps, Pos p) {
    const auto len = comps[p.comp].size();
    return {p.comp, static_cast<int>((p.index + 1) % len)};
}

void check_gap(const Comps& comps, Pos g) {
    if (g.comp < 0 || static_cast<std::size_t>(g.comp) >= comps.size())
        throw Error(ErrorKind::IllegalSite, "component out of range");
    const auto gaps = std::max<std::size_t>(comps[g.comp].size(), 1);
    if (g.index < 0 || static_cast<std::size_t>(g.index) >= gaps)
        throw Error(ErrorKind::IllegalSite, "gap index out of range");
}

int next_id(const Comps& comps) {
    int top = 0;
    for (const auto& c : comps)
        for (const auto& t : c) top = std::max(top, t.id);
    return top + 1;
}

// The eight orientation cases of R3. A triangle of crossings A (top/middle),
// B (top/bottom), C (middle/bottom) appears in the code as three adjacent
// pairs: the top strand carries (O_A, O_B), the middle (U_A, O_C), the
// bottom (U_B, U_C). Flipping strand directions permutes each pair and fixes
// the admissible sign triple (sign A, sign B, sign C).
struct R3Case {
    bool e1, e2, e3;  // pair orders: (A,B) vs (B,A); (A,C) vs (C,A); (C,B) vs (B,C)
    int sa, sb, sc;
};

constexpr std::array<R3Case, 8> kR3Cases{{
    {true, true, true, +1, -1, -1},
    {true, true, false, +1, +1, +1},
    {true, false, true, -1, -1, +1},
    {true, false, false, -1, +1, -1},
    {false, true, true, -1, +1, -1},
    {false, true, false, -1, -1, +1},
    {false, false, true, +1, +1, +1},
    {false, false, false, +1, -1, -1},
}};

bool r1_matches(const Comps& comps, const MoveSite& s) {
    if (s.positions.size() != 1) return false;
    const Pos p = s.positions[0];
    if (p.comp < 0 || static_cast<std::size_t>(p.comp) >= comps.size()) return false;
    if (p.index < 0 || static_cast<std::size_t>(p.index) >= comps[p.comp].size()) return false;
    if (comps[p.comp].size() < 2) return false;
    return token_at(comps, p).id == token_at(comps, pair_second(comps, p)).id;
}

bool pair_in_range(const Comps& comps, Pos p) {
    return p.comp >= 0 && static_cast<std::size_t>(p.comp) < comps.size() &&
           comps[p.comp].size() >= 2 && p.index >= 0 &&
           static_cast<std::size_t>(p.index) < comps[p.comp].size();
}

bool r2_matches(const Comps& comps, const MoveSite& s) {
    if (s.positions.size() != 2) return false;
    const Pos po = s.positions[0], pu = s.positions[1];
    if (!pair_in_range(comps, po) || !pair_in_range(comps, pu)) return false;
    const Token &o1 = token_at(comps, po), &o2 = token_at(comps, pair_second(comps, po));
    const Token &u1 = token_at(comps, pu), &u2 = token_at(comps, pair_second(comps, pu));
    if (o1.passage != Passage::Over || o2.passage != Passage::Over) return false;
    if (u1.passage != Passage::Under || u2.passage != Passage::Under) return false;
    if (o1.id == o2.id) return false;
    if (std::set<int>{o1.id, o2.id} != std::set<int>{u1.id, u2.id}) return false;
    return o1.sign == -o2.sign;
}

bool r3_matches(const Comps& comps, const MoveSite& s) {
    if (s.positions.size() != 3) return false;
    for (const Pos& p : s.positions)
        if (!pair_in_range(comps, p)) return false;

    std::set<Pos> six;
    std::array<std::pair<Token, Token>, 3> pairs;
    for (int i = 0; i < 3; ++i) {
        const Pos a = s.positions[i], b = pair_second(comps, s.positions[i]);
        six.insert(a);
        six.insert(b);
        pairs[i] = {token_at(comps, a), token_at(comps, b)};
    }
    if (six.size() != 6) return false;

    const auto& [t1f, t1s] = pairs[0];  // top strand: O_A, O_B in some order
    const auto& [t2f, t2s] = pairs[1];  // middle strand: U_A, O_C in some order
    const auto& [t3f, t3s] = pairs[2];  // bottom strand: U_B, U_C in some order

    if (t1f.passage != Passage::Over || t1s.passage != Passage::Over) return false;
    if (t1f.id == t1s.id) return false;
    if (t3f.passage != Passage::Under || t3s.passage != Passage::Under) return false;
    if (t3f.id == t3s.id) return false;
    const bool e2 = t2f.passage == Passage::Under;
    if (!((t2f.passage == Passage::Under && t2s.passage == Passage::Over) ||
          (t2f.passage == Passage::Over && t2s.passage == Passage::Under)))
        return false;

    const Token& mid_under = e2 ? t2f : t2s;
    const Token& mid_over = e2 ? t2s : t2f;
    const int a = mid_under.id;
    if (a != t1f.id && a != t1s.id) return false;
    const int b = t1f.id == a ? t1s.id : t1f.id;
    const int c = mid_over.id;
    if (c == a || c == b) return false;
    if (std::set<int>{t3f.id, t3s.id} != std::set<int>{b, c}) return false;

    const bool e1 = t1f.id == a;
    const bool e3 = t3f.id == c;
    const int sa = mid_under.sign;
    const int sb = t1f.id == b ? t1f.sign : t1s.sign;
    const int sc = mid_over.sign;
    for (const R3Case& k : kR3Cases)
        if (k.e1 == e1 && k.e2 == e2 && k.e3 == e3)
            return k.sa == sa && k.sb == sb && k.sc == sc;
    return false;
}

void erase_positions(Comps& comps, std::vector<Pos> ps) {
    std::sort(ps.begin(), ps.end());
    for (auto it = ps.rbegin(); it != ps.rend(); ++it)
        comps[it->comp].erase(comps[it->comp].begin() + it->index);
}

Comps apply_impl(const Comps& in, const MoveSite& site) {
    Comps comps = in;
    switch (site.kind) {
        case MoveKind::R1Minus: {
            if (!r1_matches(comps, site))
                throw Error(ErrorKind::IllegalSite, "no R1 kink at " + serialize(site));
            erase_positions(comps, {site.positions[0], pair_second(comps, site.positions[0])});
            break;
        }
        case MoveKind::R2Minus: {
            if (!r2_matches(comps, site))
                throw Error(ErrorKind::IllegalSite, "no R2 bigon at " + serialize(site));
            erase_positions(comps, {site.positions[0], pair_second(comps, site.positions[0]),
                                    site.positions[1], pair_second(comps, site.positions[1])});
            break;
        }
        case MoveKind::R3: {
            if (!r3_matches(comps, site))
                throw Error(ErrorKind::IllegalSite, "no R3 triangle at " + serialize(site));
            for (const Pos& p : site.positions) {
                const Pos q = pair_second(comps, p);
                std::swap(comps[p.comp][p.index], comps[q.comp][q.index]);
            }
            break;
        }
        case MoveKind::R1Plus: {
            if (site.positions.size() != 1)
                throw Error(ErrorKind::IllegalSite, "R1+ needs one gap");
            check_gap(comps, site.positions[0]);
            const int id = next_id(comps);
            const Token over{id, Passage::Over, site.sign};
            const Token under{id, Passage::Under, site.sign};
            Component& c = comps[site.positions[0].comp];
            const auto at = c.begin() + site.positions[0].index;
            if (site.over_first)
                c.insert(at, {over, under});
            else
                c.insert(at, {under, over});
            break;
        }
        case MoveKind::R2Plus: {
            if (site.positions.size() != 2)
                throw Error(ErrorKind::IllegalSite, "R2+ needs two gaps");
            check_gap(comps, site.positions[0]);
            check_gap(comps, site.positions[1]);
            const int x = next_id(comps);
            const int y = x + 1;
            const Component over_block{{x, Passage::Over, site.sign},
                                       {y, Passage::Over, -site.sign}};
            const Component under_block =
                site.parallel ? Component{{x, Passage::Under, site.sign},
                                          {y, Passage::Under, -site.sign}}
                              : Component{{y, Passage::Under, -site.sign},
                                          {x, Passage::Under, site.sign}};
            const Component& b1 = site.over_first ? over_block : under_block;
            const Component& b2 = site.over_first ? under_block : over_block;
            const Pos g1 = site.positions[0], g2 = site.positions[1];
            if (g1.comp == g2.comp) {
                Component& c = comps[g1.comp];
                if (g1.index == g2.index) {
                    c.insert(c.begin() + g1.index, b2.begin(), b2.end());
                    c.insert(c.begin() + g1.index, b1.begin(), b1.end());
                } else if (g1.index > g2.index) {
                    c.insert(c.begin() + g1.index, b1.begin(), b1.end());
                    c.insert(c.begin() + g2.index, b2.begin(), b2.end());
                } else {
                    c.insert(c.begin() + g2.index, b2.begin(), b2.end());
                    c.insert(c.begin() + g1.index, b1.begin(), b1.end());
                }
            } else {
                comps[g1.comp].insert(comps[g1.comp].begin() + g1.index, b1.begin(), b1.end());
                comps[g2.comp].insert(comps[g2.comp].begin() + g2.index, b2.begin(), b2.end());
            }
            break;
        }
    }
    return comps;
}

}  // namespace

std::vector<MoveSite> legal_moves(const LinkCode& code) {
    const Comps& comps = code.components();
    std::vector<MoveSite> out;

    std::vector<Pos> over_pairs, mixed_pairs, under_pairs;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto len = comps[c].size();
        if (len < 2) continue;
        for (std::size_t i = 0; i < len; ++i) {
            const Token& t1 = comps[c][i];
            const Token& t2 = comps[c][(i + 1) % len];
            const Pos p{static_cast<int>(c), static_cast<int>(i)};
            if (t1.id == t2.id) {
                if (t1.passage != t2.passage) out.push_back({MoveKind::R1Minus, {p}});
                continue;
            }
            if (t1.passage == Passage::Over && t2.passage == Passage::Over)
                over_pairs.push_back(p);
            else if (t1.passage == Passage::Under && t2.passage == Passage::Under)
                under_pairs.push_back(p);
            else
                mixed_pairs.push_back(p);
        }
    }

    for (const Pos& po : over_pairs)
        for (const Pos& pu : under_pairs) {
            MoveSite s{MoveKind::R2Minus, {po, pu}};
            if (r2_matches(comps, s)) out.push_back(s);
        }

    for (const Pos& po : over_pairs)
        for (const Pos& pm : mixed_pairs)
            for (const Pos& pu : under_pairs) {
                MoveSite s{MoveKind::R3, {po, pm, pu}};
                if (r3_matches(comps, s)) out.push_back(s);
            }

    for (std::size_t c = 0; c < comps.size(); ++c) {
        const int gaps = static_cast<int>(std::max<std::size_t>(comps[c].size(), 1));
        for (int g = 0; g < gaps; ++g)
            for (int sign : {+1, -1})
                for (bool of : {true, false}) {
                    MoveSite s{MoveKind::R1Plus, {{static_cast<int>(c), g}}};
                    s.sign = sign;
                    s.over_first = of;
                    out.push_back(s);
                }
    }

    std::vector<Pos> all_gaps;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const int gaps = static_cast<int>(std::max<std::size_t>(comps[c].size(), 1));
        for (int g = 0; g < gaps; ++g) all_gaps.push_back({static_cast<int>(c), g});
    }
    for (const Pos& g1 : all_gaps)
        for (const Pos& g2 : all_gaps)
            for (int sign : {+1, -1})
                for (bool of : {true, false})
                    for (bool par : {true, false}) {
                        MoveSite s{MoveKind::R2Plus, {g1, g2}};
                        s.sign = sign;
                        s.over_first = of;
                        s.parallel = par;
                        out.push_back(s);
                    }
    return out;
}

LinkCode apply(const LinkCode& code, const MoveSite& site) {
    return LinkCode(apply_impl(code.components(), site));
}

KnotCode apply(const KnotCode& code, const MoveSite& site) {
    return apply(code.as_link(), site).as_knot();
}

namespace {

// Apply the first matching removal until none matches, lowest site first.
LinkCode greedy_reduce(LinkCode code) {
    for (;;) {
        bool reduced = false;
        for (const MoveSite& s : legal_moves(code)) {
            if (s.kind == MoveKind::R1Minus || s.kind == MoveKind::R2Minus) {
                code = apply(code, s);
                reduced = true;
                break;
            }
        }
        if (!reduced) return code;
    }
}

int crossing_delta(MoveKind k) {
    switch (k) {
        case MoveKind::R1Plus: return +1;
        case MoveKind::R1Minus: return -1;
        case MoveKind::R2Plus: return +2;
        case MoveKind::R2Minus: return -2;
        case MoveKind::R3: return 0;
    }
    return 0;
}

}  // namespace

LinkCode simplify(const LinkCode& code, int budget) {
    auto rank = [](const LinkCode& c) {
        return std::pair<int, std::string>(c.crossing_count(), serialize(c));
    };

    LinkCode best = canonicalize(greedy_reduce(code));
    auto best_rank = rank(best);

    constexpr std::size_t kNodeCap = 4000;
    std::vector<LinkCode> frontier{best};
    std::set<std::string> seen{best_rank.second};

    for (int layer = 0; layer < budget && !frontier.empty(); ++layer) {
        if (best_rank.first == 0) break;
        std::vector<LinkCode> next;
        for (const LinkCode& node : frontier) {
            const int cap = best_rank.first + 2;
            for (const MoveSite& m : legal_moves(node)) {
                if (node.crossing_count() + crossing_delta(m.kind) > cap) continue;
                LinkCode child = canonicalize(greedy_reduce(apply(node, m)));
                if (child.crossing_count() > best_rank.first + 2) continue;
                auto r = rank(child);
                if (!seen.insert(r.second).second) continue;
                if (r < best_rank) {
                    best = child;
                    best_rank = r;
                }
                if (seen.size() <= kNodeCap) next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    return best;
}

KnotCode simplify(const KnotCode& code, int budget) {
    return simplify(code.as_link(), budget).as_knot();
}

std::optional<MovePath> equivalent_search(const LinkCode& a, const LinkCode& b, int depth) {
    const LinkCode start = canonicalize(a);
    const std::string target = serialize(canonicalize(b));
    if (serialize(start) == target) return MovePath{};

    const int cap = std::max(a.crossing_count(), b.crossing_count()) + 2;
    constexpr std::size_t kNodeCap = 60000;

    struct Node {
        LinkCode code;
        int parent;
        MoveSite via;
    };
    std::vector<Node> nodes;
    nodes.push_back({start, -1, {}});
    std::set<std::string> seen{serialize(start)};

    auto path_to = [&nodes](int i) {
        MovePath path;
        for (; nodes[i].parent != -1; i = nodes[i].parent) path.push_back(nodes[i].via);
        std::reverse(path.begin(), path.end());
        return path;
    };

    std::size_t lo = 0, hi = 1;
    for (int layer = 0; layer < depth && lo < hi; ++layer) {
        for (std::size_t i = lo; i < hi; ++i) {
            const LinkCode node = nodes[i].code;
            for (const MoveSite& m : legal_moves(node)) {
                if (node.crossing_count() + crossing_delta(m.kind) > cap) continue;
                LinkCode child = canonicalize(apply(node, m));
                std::string key = serialize(child);
                if (!seen.insert(key).second) continue;
                nodes.push_back({std::move(child), static_cast<int>(i), m});
                if (key == target) return path_to(static_cast<int>(nodes.size()) - 1);
                if (nodes.size() >= kNodeCap) break;
            }
            if (nodes.size() >= kNodeCap) break;
        }
        lo = hi;
        hi = nodes.size();
    }
    return std::nullopt;
}

std::optional<MovePath> equivalent_search(const KnotCode& a, const KnotCode& b, int depth) {
    return equivalent_search(a.as_link(), b.as_link(), depth);
}

}  // namespace vk
