#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vk/gauss_code.hpp"

namespace vk {

using Int = boost::multiprecision::cpp_int;

// Element of Z[t^1, t^-1]. Zero-coefficient terms are never stored.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(Int constant);
    static LaurentPoly term(int exp, Int coeff);
    static LaurentPoly one() { return LaurentPoly(Int(1)); }
    static LaurentPoly t(int exp = 1) { return term(exp, 1); }

    const std::map<int, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    int min_exp() const;  // requires nonzero
    int max_exp() const;
    Int coeff(int exp) const;
    Int eval_at_one() const;

    LaurentPoly shifted(int dexp) const;  // multiply by t^dexp

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    // Ascending exponents, e.g. "-1+2*t^3", "t^-1-2+t". Zero prints "0".
    std::string to_string() const;

  private:
    void set(int exp, Int coeff);
    std::map<int, Int> terms_;
};

// Representative of the orbit under multiplication by units +-t^k: lowest
// exponent shifted to 0 and lowest-degree coefficient positive.
LaurentPoly normalize_units(const LaurentPoly& p);

// Unit-normalized gcd over Z[t^1, t^-1], integer content included.
// gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact quotient a / b; throws Error(SizeError) when the division is not
// exact (callers rely on exactness, e.g. fraction-free elimination).
LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b);

// Element of Z[s^1, s^-1, t^1, t^-1].
class LaurentPoly2 {
  public:
    using Exp = std::pair<int, int>;  // (s exponent, t exponent)

    LaurentPoly2() = default;
    explicit LaurentPoly2(Int constant);
    static LaurentPoly2 term(int sexp, int texp, Int coeff);
    static LaurentPoly2 one() { return LaurentPoly2(Int(1)); }
    static LaurentPoly2 s(int exp = 1) { return term(exp, 0, 1); }
    static LaurentPoly2 t(int exp = 1) { return term(0, exp, 1); }

    const std::map<Exp, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentPoly2& operator+=(const LaurentPoly2& o);
    LaurentPoly2& operator-=(const LaurentPoly2& o);
    LaurentPoly2 operator-() const;
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
    friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

    // Ascending lexicographic (s, t) exponents, terms like "s^2*t", "-s*t^2".
    std::string to_string() const;

  private:
    void set(Exp e, Int coeff);
    std::map<Exp, Int> terms_;
};

// Units here are +-s^a*t^b: both minimal exponents shifted to 0, first term
// (lex order) made positive.
LaurentPoly2 normalize_units(const LaurentPoly2& p);

LaurentPoly2 divexact(const LaurentPoly2& a, const LaurentPoly2& b);

// Fraction-free (Bareiss) determinant over an integral domain with exact
// division. P must provide is_zero() and free divexact(a, b).
template <typename P>
P fraction_free_det(std::vector<std::vector<P>> m) {
    const std::size_t n = m.size();
    if (n == 0) return P(Int(1));
    for (const auto& row : m)
        if (row.size() != n) throw Error(ErrorKind::SizeError, "determinant of non-square matrix");
    P prev(Int(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return P();  // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                P num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divexact(num, prev);
            }
            m[i][k] = P();
        }
        prev = m[k][k];
    }
    P det = m[n - 1][n - 1];
    return sign > 0 ? det : -det;
}

}  // namespace vk
