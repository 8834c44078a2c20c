#include "vk/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "vk/detail/pattern_layout.hpp"
#include "vk/surface.hpp"

namespace vk {

namespace {

int max_id(const Component& tokens) {
    int m = 0;
    for (const Token& t : tokens) m = std::max(m, t.id);
    return m;
}

// Provisional; replaced by the pinned transcription before freeze.
constexpr const char* kKtTangleText = "X A B + A\n";

}  // namespace

KnotCode connected_sum(const KnotCode& a, std::size_t gap_a, const KnotCode& b,
                       std::size_t gap_b) {
    if (gap_a > a.size()) throw Error(ErrorKind::IllegalSite, "first gap out of range");
    if (gap_b > b.size()) throw Error(ErrorKind::IllegalSite, "second gap out of range");
    const int offset = max_id(a.tokens());
    Component out;
    out.reserve(a.size() + b.size());
    for (std::size_t p = 0; p < a.size(); ++p) out.push_back(a.tokens()[(gap_a + p) % std::max<std::size_t>(a.size(), 1)]);
    for (std::size_t p = 0; p < b.size(); ++p) {
        Token t = b.tokens()[(gap_b + p) % b.size()];
        t.id += offset;
        out.push_back(t);
    }
    return KnotCode(std::move(out));
}

// Resolved travel orders: for each strand, the (event, end) references sorted
// by position. Auto positions (0) take the unused slots in increasing order.
struct StrandOrders {
    std::vector<std::pair<int, int>> a, b;
};

StrandOrders resolve_positions(const TangleWord& t) {
    struct End {
        int event, end, pos;
    };
    std::vector<End> ends[2];
    for (int k = 0; k < static_cast<int>(t.events.size()); ++k) {
        const TangleEvent& ev = t.events[k];
        ends[ev.first == 'A' ? 0 : 1].push_back({k, 1, ev.first_pos});
        ends[ev.second == 'A' ? 0 : 1].push_back({k, 2, ev.second_pos});
    }
    StrandOrders out;
    for (int s = 0; s < 2; ++s) {
        const int n = static_cast<int>(ends[s].size());
        const std::string name = s == 0 ? "strand A" : "strand B";
        std::vector<int> claimed(n + 1, 0);
        for (const End& e : ends[s]) {
            if (e.pos == 0) continue;
            if (e.pos < 0 || e.pos > n)
                throw Error(ErrorKind::IllegalEvent,
                            name + " position " + std::to_string(e.pos) + " out of range 1.." +
                                std::to_string(n));
            if (claimed[e.pos]++)
                throw Error(ErrorKind::IllegalEvent,
                            name + " position " + std::to_string(e.pos) + " used twice");
        }
        int next_free = 1;
        std::vector<std::pair<int, int>> order(n);
        for (End& e : ends[s]) {
            if (e.pos == 0) {
                while (claimed[next_free]) ++next_free;
                e.pos = next_free;
                claimed[next_free] = 1;
            }
            order[e.pos - 1] = {e.event, e.end};
        }
        (s == 0 ? out.a : out.b) = std::move(order);
    }
    return out;
}

TangleWord parse_tangle(const std::string& text) {
    TangleWord out;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        std::istringstream fields(line);
        std::string head;
        if (!(fields >> head) || head[0] == '#') continue;
        const std::string where = "tangle line " + std::to_string(lineno);
        if (head != "X") throw Error(ErrorKind::SyntaxError, where + ": expected X event");
        std::string first, second, sign, over;
        if (!(fields >> first >> second >> sign >> over))
            throw Error(ErrorKind::SyntaxError, where + ": expected X <strand> <strand> <sign> <over>");
        std::string extra;
        if (fields >> extra) throw Error(ErrorKind::SyntaxError, where + ": trailing field '" + extra + "'");
        auto strand = [&](const std::string& s, int& pos) {
            if (s.empty() || (s[0] != 'A' && s[0] != 'B'))
                throw Error(ErrorKind::SyntaxError, where + ": strand must be A or B, got '" + s + "'");
            pos = 0;
            for (std::size_t i = 1; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9')
                    throw Error(ErrorKind::SyntaxError, where + ": bad strand position in '" + s + "'");
                pos = pos * 10 + (s[i] - '0');
            }
            if (s.size() > 1 && pos == 0)
                throw Error(ErrorKind::SyntaxError, where + ": strand position must be positive in '" + s + "'");
            return s[0];
        };
        TangleEvent ev;
        ev.first = strand(first, ev.first_pos);
        ev.second = strand(second, ev.second_pos);
        if (sign == "+")
            ev.sign = 1;
        else if (sign == "-")
            ev.sign = -1;
        else
            throw Error(ErrorKind::SyntaxError, where + ": sign must be + or -, got '" + sign + "'");
        if (ev.first == ev.second) {
            if (over == "1")
                ev.first_over = true;
            else if (over == "2")
                ev.first_over = false;
            else
                throw Error(ErrorKind::SyntaxError,
                            where + ": self-crossing over slot must be 1 or 2, got '" + over + "'");
        } else {
            if (over.size() == 1 && over[0] == ev.first)
                ev.first_over = true;
            else if (over.size() == 1 && over[0] == ev.second)
                ev.first_over = false;
            else
                throw Error(ErrorKind::SyntaxError, where + ": over strand must be " +
                                                        std::string(1, ev.first) + " or " +
                                                        std::string(1, ev.second) + ", got '" + over + "'");
        }
        out.events.push_back(ev);
    }
    StrandOrders orders = resolve_positions(out);
    for (int p = 0; p < static_cast<int>(orders.a.size()); ++p) {
        auto [k, end] = orders.a[p];
        (end == 1 ? out.events[k].first_pos : out.events[k].second_pos) = p + 1;
    }
    for (int p = 0; p < static_cast<int>(orders.b.size()); ++p) {
        auto [k, end] = orders.b[p];
        (end == 1 ? out.events[k].first_pos : out.events[k].second_pos) = p + 1;
    }
    return out;
}

std::string serialize(const TangleWord& t) {
    StrandOrders orders = resolve_positions(t);
    std::vector<std::pair<int, int>> pos(t.events.size(), {0, 0});
    bool bare = true;
    for (int s = 0; s < 2; ++s) {
        const auto& order = s == 0 ? orders.a : orders.b;
        int list_rank = 0;
        std::vector<std::pair<int, int>> by_list = order;
        std::sort(by_list.begin(), by_list.end());
        for (int p = 0; p < static_cast<int>(order.size()); ++p) {
            auto [k, end] = order[p];
            (end == 1 ? pos[k].first : pos[k].second) = p + 1;
            if (order[p] != by_list[list_rank++]) bare = false;
        }
    }
    std::string out;
    for (std::size_t k = 0; k < t.events.size(); ++k) {
        const TangleEvent& ev = t.events[k];
        out += "X ";
        out += ev.first;
        if (!bare) out += std::to_string(pos[k].first);
        out += ' ';
        out += ev.second;
        if (!bare) out += std::to_string(pos[k].second);
        out += ev.sign > 0 ? " + " : " - ";
        if (ev.first == ev.second)
            out += ev.first_over ? '1' : '2';
        else
            out += ev.first_over ? ev.first : ev.second;
        out += '\n';
    }
    return out;
}

KnotCode tangle_splice(const KnotCode& code, std::size_t arc1, std::size_t arc2,
                       const TangleWord& t) {
    if (arc1 > code.size()) throw Error(ErrorKind::IllegalSite, "first arc gap out of range");
    if (arc2 > code.size()) throw Error(ErrorKind::IllegalSite, "second arc gap out of range");
    if (arc1 == arc2 && !code.empty())
        throw Error(ErrorKind::OrientationMismatch,
                    "coincident cuts on a nonempty code leave no oriented site for two strands");
    StrandOrders orders = resolve_positions(t);
    const int base = max_id(code.tokens());
    auto block = [&](const std::vector<std::pair<int, int>>& order) {
        Component out;
        out.reserve(order.size());
        for (auto [k, end] : order) {
            const TangleEvent& ev = t.events[static_cast<std::size_t>(k)];
            const bool over = (end == 1) == ev.first_over;
            out.push_back({base + k + 1, over ? Passage::Over : Passage::Under, ev.sign});
        }
        return out;
    };
    Component block_a = block(orders.a), block_b = block(orders.b);
    Component out = code.tokens();
    if (arc1 >= arc2) {
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(arc1), block_a.begin(), block_a.end());
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(arc2), block_b.begin(), block_b.end());
    } else {
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(arc2), block_b.begin(), block_b.end());
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(arc1), block_a.begin(), block_a.end());
    }
    return KnotCode(std::move(out));
}

namespace detail {

KnotCode cable_satellite(const KnotCode& code, const PatternLayout& layout) {
    const Component& word = code.tokens();
    std::map<int, int> rank;
    for (const Token& t : word) rank.emplace(t.id, 0);
    int next = 0;
    for (auto& [id, r] : rank) r = next++;
    const int n = static_cast<int>(rank.size());

    // Sheet q of the satellite copies the companion; sheet 3 runs backward.
    auto eta = [](int q) { return q == 3 ? -1 : 1; };
    auto nid = [&](int id, int over_sheet, int under_sheet) {
        return 9 * rank.at(id) + 3 * (over_sheet - 1) + (under_sheet - 1) + 1;
    };

    int sheet_at_offset[4] = {0, 0, 0, 0};
    for (int s = 1; s <= 3; ++s) sheet_at_offset[layout.offset_of_sheet[s - 1]] = s;

    Component out;
    out.reserve(word.size() * 9 + 6);
    auto emit_sheet = [&](int self) {
        const bool fwd = self != 3;
        for (std::size_t p = 0; p < word.size(); ++p) {
            const Token& tok = word[fwd ? p : word.size() - 1 - p];
            bool descending = (tok.passage == Passage::Over) == (tok.sign > 0);
            if (layout.meets_flipped) descending = !descending;
            if (!fwd) descending = !descending;
            for (int step = 0; step < 3; ++step) {
                const int other = sheet_at_offset[descending ? 3 - step : step + 1];
                const int sign = tok.sign * eta(self) * eta(other);
                if (tok.passage == Passage::Over)
                    out.push_back({nid(tok.id, self, other), Passage::Over, sign});
                else
                    out.push_back({nid(tok.id, other, self), Passage::Under, sign});
            }
        }
    };

    // Site crossings: the tip of the finger (the u-turn joining sheets 2 and
    // 3) pierces one connector of the core, and the two core connectors cross
    // each other once.
    const int aid = 9 * n + 1;  // tip's outgoing leg through the target
    const int bid = 9 * n + 2;  // tip's returning leg through the target
    const int xid = 9 * n + 3;  // connector crossing between core-out and core-in

    const Passage a_beta = layout.clasp_out_over ? Passage::Over : Passage::Under;
    const Passage b_beta = layout.clasp_out_over ? Passage::Under : Passage::Over;
    auto flip = [](Passage p) { return p == Passage::Over ? Passage::Under : Passage::Over; };

    Component target_tokens;
    if (layout.target_meets_out_first) {
        target_tokens.push_back({aid, flip(a_beta), layout.clasp_sign});
        target_tokens.push_back({bid, flip(b_beta), layout.clasp_sign});
    } else {
        target_tokens.push_back({bid, flip(b_beta), layout.clasp_sign});
        target_tokens.push_back({aid, flip(a_beta), layout.clasp_sign});
    }

    Component alpha, beta, gamma;
    alpha.push_back({xid, layout.connector_core_over ? Passage::Over : Passage::Under,
                     layout.connector_sign});
    gamma.push_back({xid, layout.connector_core_over ? Passage::Under : Passage::Over,
                     layout.connector_sign});
    beta.push_back({aid, a_beta, layout.clasp_sign});
    beta.push_back({bid, b_beta, layout.clasp_sign});
    Component& target = layout.clasp_on_return ? gamma : alpha;
    const std::size_t at = layout.connector_crossing_last ? 0 : target.size();
    target.insert(target.begin() + static_cast<std::ptrdiff_t>(at), target_tokens.begin(),
                  target_tokens.end());

    emit_sheet(1);
    out.insert(out.end(), alpha.begin(), alpha.end());
    emit_sheet(2);
    out.insert(out.end(), beta.begin(), beta.end());
    emit_sheet(3);
    out.insert(out.end(), gamma.begin(), gamma.end());
    return KnotCode(std::move(out));
}

}  // namespace detail

KnotCode livingston_satellite(const KnotCode& code) {
    // A blackboard cable inherits the diagram's writhe as framing. An almost
    // classical companion has a homological longitude, so kink such a
    // companion back to writhe zero first: each compensating kink cables to a
    // full twist of the bundle plus removable per-sheet kinks, steering the
    // embedding to that canonical framing. Other companions have no preferred
    // longitude and keep the blackboard framing.
    Component word = code.tokens();
    if (is_almost_classical(code)) {
        int writhe = 0;
        for (const Token& t : word) writhe += t.sign;
        writhe /= 2;
        int next = max_id(word);
        for (; writhe != 0; writhe += writhe > 0 ? -1 : 1) {
            const int sign = writhe > 0 ? -1 : +1;
            const int id = ++next;
            word.insert(word.begin(),
                        {Token{id, Passage::Over, sign}, Token{id, Passage::Under, sign}});
        }
    }
    return detail::cable_satellite(KnotCode(std::move(word)), detail::PatternLayout{});
}

TangleWord kt_tangle() {
    return parse_tangle(kKtTangleText);
}

}  // namespace vk
