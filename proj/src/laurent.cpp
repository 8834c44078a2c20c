#include "vk/laurent.hpp"

#include <boost/multiprecision/integer.hpp>

namespace vk {

LaurentPoly::LaurentPoly(Int constant) {
    set(0, std::move(constant));
}

LaurentPoly LaurentPoly::term(int exp, Int coeff) {
    LaurentPoly p;
    p.set(exp, std::move(coeff));
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw Error(ErrorKind::SizeError, "degree of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw Error(ErrorKind::SizeError, "degree of zero polynomial");
    return terms_.rbegin()->first;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

Int LaurentPoly::eval_at_one() const {
    Int acc = 0;
    for (const auto& [e, c] : terms_) acc += c;
    return acc;
}

LaurentPoly LaurentPoly::shifted(int dexp) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + dexp, c);
    return out;
}

void LaurentPoly::set(int exp, Int coeff) {
    if (coeff == 0)
        terms_.erase(exp);
    else
        terms_[exp] = std::move(coeff);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) set(e, coeff(e) + c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) set(e, coeff(e) - c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.set(ea + eb, out.coeff(ea + eb) + ca * cb);
    return out;
}

namespace {

std::string coeff_prefix(const Int& c, bool first) {
    // Sign, then magnitude unless it is 1 and a variable part follows.
    std::string out;
    if (c < 0)
        out += '-';
    else if (!first)
        out += '+';
    return out;
}

std::string power(const std::string& var, int exp) {
    if (exp == 1) return var;
    return var + "^" + std::to_string(exp);
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        out += coeff_prefix(c, first);
        Int mag = abs(c);
        if (e == 0) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += power("t", e);
        }
        first = false;
    }
    return out;
}

LaurentPoly normalize_units(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly out = p.shifted(-p.min_exp());
    if (out.coeff(0) < 0) out = -out;
    return out;
}

namespace {

Int content(const LaurentPoly& p) {
    Int g = 0;
    for (const auto& [e, c] : p.terms()) g = boost::multiprecision::gcd(g, c);
    return g < 0 ? Int(-g) : g;
}

LaurentPoly scale(const LaurentPoly& p, const Int& k) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) out += LaurentPoly::term(e, c * k);
    return out;
}

LaurentPoly divide_by_int(const LaurentPoly& p, const Int& k) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) out += LaurentPoly::term(e, c / k);
    return out;
}

// Pseudo-remainder of primitive polynomials with nonnegative exponents.
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
    const int db = b.max_exp();
    const Int lb = b.coeff(db);
    while (!a.is_zero() && a.max_exp() >= db) {
        const int da = a.max_exp();
        const Int la = a.coeff(da);
        a = scale(a, lb) - b.shifted(da - db) * LaurentPoly(la);
    }
    return a;
}

LaurentPoly primitive_part(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return divide_by_int(p.shifted(-p.min_exp()), content(p));
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return normalize_units(b);
    if (b.is_zero()) return normalize_units(a);
    const Int cont = boost::multiprecision::gcd(content(a), content(b));
    LaurentPoly x = primitive_part(a);
    LaurentPoly y = primitive_part(b);
    if (x.max_exp() < y.max_exp()) std::swap(x, y);
    while (!y.is_zero()) {
        LaurentPoly r = primitive_part(pseudo_rem(x, y));
        x = y;
        y = r;
    }
    return normalize_units(scale(x, cont));
}

LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::SizeError, "division by zero polynomial");
    if (a.is_zero()) return a;
    LaurentPoly rem = a;
    LaurentPoly quot;
    const int db = b.max_exp();
    const Int lb = b.coeff(db);
    // Exact quotient exponents are confined to [min(a)-min(b), max(a)-max(b)].
    const int floor_exp = a.min_exp() - b.min_exp();
    while (!rem.is_zero()) {
        const int e = rem.max_exp() - db;
        const Int c = rem.coeff(rem.max_exp());
        if (e < floor_exp || c % lb != 0)
            throw Error(ErrorKind::SizeError, "inexact polynomial division");
        LaurentPoly piece = LaurentPoly::term(e, c / lb);
        quot += piece;
        rem -= b * piece;
    }
    return quot;
}

LaurentPoly2::LaurentPoly2(Int constant) {
    set({0, 0}, std::move(constant));
}

LaurentPoly2 LaurentPoly2::term(int sexp, int texp, Int coeff) {
    LaurentPoly2 p;
    p.set({sexp, texp}, std::move(coeff));
    return p;
}

void LaurentPoly2::set(Exp e, Int coeff) {
    if (coeff == 0)
        terms_.erase(e);
    else
        terms_[e] = std::move(coeff);
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        Int next = (it == terms_.end() ? Int(0) : it->second) + c;
        set(e, std::move(next));
    }
    return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        Int next = (it == terms_.end() ? Int(0) : it->second) - c;
        set(e, std::move(next));
    }
    return *this;
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            LaurentPoly2::Exp e{ea.first + eb.first, ea.second + eb.second};
            auto it = out.terms_.find(e);
            Int next = (it == out.terms_.end() ? Int(0) : it->second) + ca * cb;
            out.set(e, std::move(next));
        }
    return out;
}

std::string LaurentPoly2::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        out += coeff_prefix(c, first);
        Int mag = abs(c);
        std::vector<std::string> parts;
        if (mag != 1 || (e.first == 0 && e.second == 0)) parts.push_back(mag.str());
        if (e.first != 0) parts.push_back(power("s", e.first));
        if (e.second != 0) parts.push_back(power("t", e.second));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += '*';
            out += parts[i];
        }
        first = false;
    }
    return out;
}

LaurentPoly2 normalize_units(const LaurentPoly2& p) {
    if (p.is_zero()) return p;
    int min_s = 0, min_t = 0;
    bool got = false;
    for (const auto& [e, c] : p.terms()) {
        if (!got) {
            min_s = e.first;
            min_t = e.second;
            got = true;
        } else {
            min_s = std::min(min_s, e.first);
            min_t = std::min(min_t, e.second);
        }
    }
    LaurentPoly2 out;
    for (const auto& [e, c] : p.terms())
        out += LaurentPoly2::term(e.first - min_s, e.second - min_t, c);
    if (out.terms().begin()->second < 0) out = -out;
    return out;
}

namespace {

struct ExpBox {
    int slo, shi, tlo, thi;
};

ExpBox exp_box(const LaurentPoly2& p) {
    ExpBox b{0, 0, 0, 0};
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            b = {e.first, e.first, e.second, e.second};
            first = false;
        } else {
            b.slo = std::min(b.slo, e.first);
            b.shi = std::max(b.shi, e.first);
            b.tlo = std::min(b.tlo, e.second);
            b.thi = std::max(b.thi, e.second);
        }
    }
    return b;
}

}  // namespace

LaurentPoly2 divexact(const LaurentPoly2& a, const LaurentPoly2& b) {
    if (b.is_zero()) throw Error(ErrorKind::SizeError, "division by zero polynomial");
    if (a.is_zero()) return a;
    // Divide by the lex-leading term of b repeatedly. Extremal slices of a
    // product never fully cancel, so each exponent of an exact quotient is
    // confined per variable to [min(a)-min(b), max(a)-max(b)]; a term falling
    // outside that finite box proves inexactness, and the box bounds the
    // strictly lex-decreasing remainder leads, forcing termination.
    const auto lead = std::prev(b.terms().end());
    const LaurentPoly2::Exp le = lead->first;
    const Int lc = lead->second;
    const ExpBox ab = exp_box(a), bb = exp_box(b);
    const ExpBox box{ab.slo - bb.slo, ab.shi - bb.shi, ab.tlo - bb.tlo, ab.thi - bb.thi};
    LaurentPoly2 rem = a;
    LaurentPoly2 quot;
    while (!rem.is_zero()) {
        const auto rl = std::prev(rem.terms().end());
        const LaurentPoly2::Exp e{rl->first.first - le.first, rl->first.second - le.second};
        if (e.first < box.slo || e.first > box.shi || e.second < box.tlo || e.second > box.thi ||
            rl->second % lc != 0)
            throw Error(ErrorKind::SizeError, "inexact polynomial division");
        LaurentPoly2 piece = LaurentPoly2::term(e.first, e.second, rl->second / lc);
        quot += piece;
        rem -= b * piece;
    }
    return quot;
}

}  // namespace vk
