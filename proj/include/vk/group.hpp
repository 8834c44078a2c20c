#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "vk/laurent.hpp"

namespace vk {

// Freely reduced word in generators g1, g2, ... Letters are signed generator
// indices: +i for gi, -i for gi^-1.
class GroupWord {
  public:
    GroupWord() = default;
    static GroupWord generator(int index, int exp = 1);

    const std::vector<int>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    int exponent_sum() const;

    GroupWord inverse() const;
    GroupWord& operator*=(const GroupWord& o);
    friend GroupWord operator*(GroupWord a, const GroupWord& b) { return a *= b; }

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
    friend auto operator<=>(const GroupWord& a, const GroupWord& b) {
        return a.letters_ <=> b.letters_;
    }

    std::string to_string() const;  // "g2 g1 g2^-1"; identity prints "1"

  private:
    void push(int letter);
    std::vector<int> letters_;
};

// Element of the integral group ring of the free group.
using GroupRingElem = std::map<GroupWord, Int>;

struct Presentation {
    int generators = 0;
    std::vector<GroupWord> relators;

    std::string to_string() const;  // "<g1, g2 | r1, r2>"
};

// Fox derivative d(w)/d(g_k): d(gk) = 1, d(gk^-1) = -gk^-1,
// d(uv) = d(u) + u d(v).
GroupRingElem fox_derivative(const GroupWord& w, int k);

// Abelianization g_i -> t of a group ring element.
LaurentPoly abelianize(const GroupRingElem& e);

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// Square matrix of abelianized Fox derivatives, one row per relator, padded
// with zero rows when a presentation has fewer relators than generators.
// Every row sums to 0 at t = 1.
PolyMatrix alexander_matrix(const Presentation& p);

// Gcd of all (n-k) x (n-k) minors of m with the column drop_col deleted
// (default: the highest-index generator). Unit-normalized, integer content
// included; the gcd of an empty or all-zero minor set is 0; 0x0 minors are 1.
LaurentPoly elementary_ideal_gcd(const PolyMatrix& m, int k, int drop_col = -1);

}  // namespace vk
