#include "vk/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace vk {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnpairedCrossing: return "UnpairedCrossing";
        case ErrorKind::SignMismatch: return "SignMismatch";
        case ErrorKind::IllegalSite: return "IllegalSite";
        case ErrorKind::UnknownId: return "UnknownId";
        case ErrorKind::BadComponent: return "BadComponent";
        case ErrorKind::SizeError: return "SizeError";
        case ErrorKind::OrientationMismatch: return "OrientationMismatch";
        case ErrorKind::IllegalEvent: return "IllegalEvent";
        case ErrorKind::EndpointMismatch: return "EndpointMismatch";
        case ErrorKind::CountFailure: return "CountFailure";
        case ErrorKind::Disconnected: return "Disconnected";
    }
    return "Error";
}

namespace {

// Each crossing id must occur exactly twice, once over and once under, with
// equal signs.
void validate(const std::vector<Component>& comps) {
    struct Seen {
        int over = 0, under = 0;
        int sign = 0;
        bool sign_conflict = false;
    };
    std::map<int, Seen> seen;
    for (const auto& comp : comps) {
        for (const auto& t : comp) {
            if (t.sign != 1 && t.sign != -1)
                throw Error(ErrorKind::SyntaxError, "crossing sign must be +1 or -1");
            auto& s = seen[t.id];
            (t.passage == Passage::Over ? s.over : s.under)++;
            if (s.sign == 0)
                s.sign = t.sign;
            else if (s.sign != t.sign)
                s.sign_conflict = true;
        }
    }
    for (const auto& [id, s] : seen) {
        if (s.over != 1 || s.under != 1)
            throw Error(ErrorKind::UnpairedCrossing,
                        "crossing " + std::to_string(id) + " must appear exactly once over and once under");
        if (s.sign_conflict)
            throw Error(ErrorKind::SignMismatch,
                        "crossing " + std::to_string(id) + " has conflicting signs");
    }
}

}  // namespace

KnotCode::KnotCode(Component tokens) : tokens_(std::move(tokens)) {
    validate({tokens_});
}

LinkCode KnotCode::as_link() const {
    return LinkCode(std::vector<Component>{tokens_});
}

LinkCode::LinkCode(std::vector<Component> components) : components_(std::move(components)) {
    if (components_.empty()) components_.emplace_back();
    validate(components_);
}

int LinkCode::crossing_count() const {
    return static_cast<int>(total_tokens() / 2);
}

std::size_t LinkCode::total_tokens() const {
    std::size_t n = 0;
    for (const auto& c : components_) n += c.size();
    return n;
}

KnotCode LinkCode::as_knot() const {
    if (components_.size() != 1)
        throw Error(ErrorKind::BadComponent, "expected a single-component code");
    return KnotCode(components_[0]);
}

namespace {

Token parse_token(const std::string& word) {
    if (word.size() < 3)
        throw Error(ErrorKind::SyntaxError, "malformed token '" + word + "'");
    Token t;
    if (word[0] == 'O')
        t.passage = Passage::Over;
    else if (word[0] == 'U')
        t.passage = Passage::Under;
    else
        throw Error(ErrorKind::SyntaxError, "token must start with O or U: '" + word + "'");
    char last = word.back();
    if (last == '+')
        t.sign = +1;
    else if (last == '-')
        t.sign = -1;
    else
        throw Error(ErrorKind::SyntaxError, "token must end with + or -: '" + word + "'");
    const std::string digits = word.substr(1, word.size() - 2);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](unsigned char c) { return std::isdigit(c); }))
        throw Error(ErrorKind::SyntaxError, "crossing id must be a positive integer: '" + word + "'");
    try {
        t.id = std::stoi(digits);
    } catch (const std::exception&) {
        throw Error(ErrorKind::SyntaxError, "crossing id out of range: '" + word + "'");
    }
    if (t.id <= 0)
        throw Error(ErrorKind::SyntaxError, "crossing id must be positive: '" + word + "'");
    return t;
}

std::vector<Component> parse_components(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == '/') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);

    std::vector<Component> comps;
    for (const auto& part : parts) {
        Component comp;
        std::istringstream in(part);
        std::string word;
        while (in >> word) comp.push_back(parse_token(word));
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace

KnotCode parse_knot(const std::string& text) {
    auto comps = parse_components(text);
    if (comps.size() != 1)
        throw Error(ErrorKind::BadComponent, "knot code must have a single component");
    return KnotCode(std::move(comps[0]));
}

LinkCode parse_link(const std::string& text) {
    return LinkCode(parse_components(text));
}

std::string serialize(const Token& t) {
    std::string s(1, t.passage == Passage::Over ? 'O' : 'U');
    s += std::to_string(t.id);
    s += (t.sign > 0 ? '+' : '-');
    return s;
}

namespace {

std::string serialize_component(const Component& comp) {
    std::string out;
    for (std::size_t i = 0; i < comp.size(); ++i) {
        if (i) out += ' ';
        out += serialize(comp[i]);
    }
    return out;
}

}  // namespace

std::string serialize(const KnotCode& code) {
    return serialize_component(code.tokens());
}

std::string serialize(const LinkCode& code) {
    std::string out;
    for (std::size_t i = 0; i < code.components().size(); ++i) {
        if (i) out += " / ";
        out += serialize_component(code.components()[i]);
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    while (!out.empty() && out.front() == ' ') out.erase(out.begin());
    return out;
}

namespace {

// Comparable key of a candidate reading: tokens as (id, passage, sign)
// triples with component breaks marked, ids relabeled 1..n in first
// appearance order.
using Key = std::vector<int>;

Key reading_key(const std::vector<const Component*>& order, const std::vector<std::size_t>& rot) {
    std::map<int, int> relabel;
    int next = 1;
    Key key;
    for (std::size_t c = 0; c < order.size(); ++c) {
        const Component& comp = *order[c];
        key.push_back(-1);  // component break, sorts before any token
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const Token& t = comp[(i + rot[c]) % comp.size()];
            auto [it, inserted] = relabel.try_emplace(t.id, next);
            if (inserted) ++next;
            key.push_back(it->second * 8 + (t.passage == Passage::Over ? 0 : 4) + (t.sign > 0 ? 0 : 1));
        }
    }
    return key;
}

std::vector<Component> rebuild(const std::vector<const Component*>& order,
                               const std::vector<std::size_t>& rot) {
    std::map<int, int> relabel;
    int next = 1;
    std::vector<Component> out;
    for (std::size_t c = 0; c < order.size(); ++c) {
        const Component& comp = *order[c];
        Component built;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            Token t = comp[(i + rot[c]) % comp.size()];
            auto [it, inserted] = relabel.try_emplace(t.id, next);
            if (inserted) ++next;
            t.id = it->second;
            built.push_back(t);
        }
        out.push_back(std::move(built));
    }
    return out;
}

std::vector<Component> canonical_components(const std::vector<Component>& comps) {
    std::vector<std::size_t> perm(comps.size());
    std::iota(perm.begin(), perm.end(), 0);

    bool have_best = false;
    Key best_key;
    std::vector<const Component*> best_order;
    std::vector<std::size_t> best_rot;

    std::sort(perm.begin(), perm.end());
    do {
        std::vector<const Component*> order;
        for (auto i : perm) order.push_back(&comps[i]);

        // Enumerate rotation tuples (cartesian product over components).
        std::vector<std::size_t> rot(order.size(), 0);
        while (true) {
            Key key = reading_key(order, rot);
            if (!have_best || key < best_key) {
                have_best = true;
                best_key = std::move(key);
                best_order = order;
                best_rot = rot;
            }
            std::size_t i = 0;
            for (; i < rot.size(); ++i) {
                std::size_t len = std::max<std::size_t>(order[i]->size(), 1);
                if (++rot[i] < len) break;
                rot[i] = 0;
            }
            if (i == rot.size()) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    return rebuild(best_order, best_rot);
}

}  // namespace

KnotCode canonicalize(const KnotCode& code) {
    return KnotCode(canonical_components({code.tokens()})[0]);
}

LinkCode canonicalize(const LinkCode& code) {
    return LinkCode(canonical_components(code.components()));
}

namespace {

Component mirror_component(Component comp) {
    for (auto& t : comp) {
        t.passage = (t.passage == Passage::Over) ? Passage::Under : Passage::Over;
        t.sign = -t.sign;
    }
    return comp;
}

}  // namespace

KnotCode mirror(const KnotCode& code) {
    return KnotCode(mirror_component(code.tokens()));
}

LinkCode mirror(const LinkCode& code) {
    std::vector<Component> comps;
    for (const auto& c : code.components()) comps.push_back(mirror_component(c));
    return LinkCode(std::move(comps));
}

KnotCode reverse(const KnotCode& code) {
    Component comp = code.tokens();
    std::reverse(comp.begin(), comp.end());
    return KnotCode(std::move(comp));
}

LinkCode reverse(const LinkCode& code) {
    std::vector<Component> comps;
    for (auto c : code.components()) {
        std::reverse(c.begin(), c.end());
        comps.push_back(std::move(c));
    }
    return LinkCode(std::move(comps));
}

namespace {

int writhe_of(const std::vector<Component>& comps) {
    int w = 0;
    for (const auto& comp : comps)
        for (const auto& t : comp)
            if (t.passage == Passage::Over) w += t.sign;
    return w;
}

}  // namespace

int writhe(const KnotCode& code) {
    return writhe_of({code.tokens()});
}

int writhe(const LinkCode& code) {
    return writhe_of(code.components());
}

}  // namespace vk
