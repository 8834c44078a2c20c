#include "vk/group.hpp"

#include <cstdlib>

#include "vk/gauss_code.hpp"

namespace vk {

void GroupWord::push(int letter) {
    if (!letters_.empty() && letters_.back() == -letter)
        letters_.pop_back();
    else
        letters_.push_back(letter);
}

GroupWord GroupWord::generator(int index, int exp) {
    if (index <= 0)
        throw Error(ErrorKind::UnknownId, "generator index must be positive");
    GroupWord w;
    const int letter = exp >= 0 ? index : -index;
    for (int i = 0; i < std::abs(exp); ++i) w.letters_.push_back(letter);
    return w;
}

int GroupWord::exponent_sum() const {
    int s = 0;
    for (int l : letters_) s += l > 0 ? 1 : -1;
    return s;
}

GroupWord GroupWord::inverse() const {
    GroupWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back(-*it);
    return w;
}

GroupWord& GroupWord::operator*=(const GroupWord& o) {
    for (int l : o.letters_) push(l);
    return *this;
}

std::string GroupWord::to_string() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        int l = letters_[i];
        out += 'g';
        out += std::to_string(std::abs(l));
        if (l < 0) out += "^-1";
    }
    return out;
}

std::string Presentation::to_string() const {
    std::string out = "<";
    for (int i = 1; i <= generators; ++i) {
        if (i > 1) out += ", ";
        out += 'g';
        out += std::to_string(i);
    }
    out += " | ";
    for (size_t i = 0; i < relators.size(); ++i) {
        if (i) out += ", ";
        out += relators[i].to_string();
    }
    out += ">";
    return out;
}

GroupRingElem fox_derivative(const GroupWord& w, int k) {
    GroupRingElem d;
    GroupWord prefix;
    for (int l : w.letters()) {
        if (l == k) {
            d[prefix] += 1;
        } else if (l == -k) {
            d[prefix * GroupWord::generator(k, -1)] -= 1;
        }
        prefix *= GroupWord::generator(std::abs(l), l > 0 ? 1 : -1);
    }
    for (auto it = d.begin(); it != d.end();) {
        if (it->second == 0)
            it = d.erase(it);
        else
            ++it;
    }
    return d;
}

LaurentPoly abelianize(const GroupRingElem& e) {
    LaurentPoly p;
    for (const auto& [w, c] : e) p += LaurentPoly::term(w.exponent_sum(), c);
    return p;
}

PolyMatrix alexander_matrix(const Presentation& p) {
    if (p.generators <= 0)
        throw Error(ErrorKind::SizeError, "presentation needs at least one generator");
    const size_t n = static_cast<size_t>(p.generators);
    const size_t rows = std::max(n, p.relators.size());
    PolyMatrix m(rows, std::vector<LaurentPoly>(n));
    for (size_t i = 0; i < p.relators.size(); ++i)
        for (size_t j = 0; j < n; ++j)
            m[i][j] = abelianize(fox_derivative(p.relators[i], static_cast<int>(j) + 1));
    return m;
}

namespace {

bool next_combination(std::vector<size_t>& idx, size_t limit) {
    const size_t s = idx.size();
    for (size_t i = s; i-- > 0;) {
        if (idx[i] + (s - i) < limit) {
            ++idx[i];
            for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

LaurentPoly elementary_ideal_gcd(const PolyMatrix& m, int k, int drop_col) {
    if (m.empty() || m[0].empty())
        throw Error(ErrorKind::SizeError, "empty matrix");
    const size_t n = m[0].size();
    if (drop_col < 0) drop_col = static_cast<int>(n) - 1;
    if (static_cast<size_t>(drop_col) >= n)
        throw Error(ErrorKind::SizeError, "column index out of range");

    const int size = static_cast<int>(n) - k;
    if (size <= 0) return LaurentPoly(Int(1));
    const size_t s = static_cast<size_t>(size);

    std::vector<size_t> cols;
    for (size_t j = 0; j < n; ++j)
        if (j != static_cast<size_t>(drop_col)) cols.push_back(j);
    const size_t r = m.size();
    if (s > r || s > cols.size()) return LaurentPoly();

    std::vector<size_t> ri(s), ci(s);
    LaurentPoly g;
    for (size_t i = 0; i < s; ++i) ri[i] = i;
    do {
        for (size_t i = 0; i < s; ++i) ci[i] = i;
        do {
            PolyMatrix sub(s, std::vector<LaurentPoly>(s));
            for (size_t a = 0; a < s; ++a)
                for (size_t b = 0; b < s; ++b) sub[a][b] = m[ri[a]][cols[ci[b]]];
            g = gcd(g, fraction_free_det(sub));
            if (g.is_one()) return g;
        } while (next_combination(ci, cols.size()));
    } while (next_combination(ri, r));
    return g;
}

}  // namespace vk
