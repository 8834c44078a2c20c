#pragma once

#include "vk/gauss_code.hpp"
#include "vk/group.hpp"
#include "vk/laurent.hpp"

namespace vk {

// Sum of crossing signs over chords of odd index. Zero on every classical
// code; flips sign under mirroring.
int odd_writhe(const KnotCode& code);

// W(t) = sum over chords c of sign(c) * (t^index(c) - 1). The "-1" makes the
// polynomial vanish on classical codes without a writhe correction.
LaurentPoly writhe_polynomial(const KnotCode& code);

// Wirtinger presentation: one generator per arc between consecutive under
// passages, one conjugation relator g_out = g_over^sign g_in g_over^-sign per
// crossing. The unknot gets the free group on one generator.
Presentation knot_group(const KnotCode& code);

// Same construction per component. A component never passing under anything
// contributes a single free generator.
Presentation link_group(const LinkCode& code);

struct ACAlexander {
    LaurentPoly poly;
    // True when the code is almost classical, in which case the first
    // elementary ideal is principal and poly generates it.
    bool principal = false;
};

// Unit-normalized gcd of the first elementary ideal of the Alexander matrix.
ACAlexander ac_alexander(const KnotCode& code);

// Same route for links; used for smoothings in skein triples.
LaurentPoly link_alexander(const LinkCode& code);

// Determinant of the Alexander biquandle relation system: two relations per
// crossing over the 2n short arcs. Vanishes identically on classical codes,
// so it is an obstruction to classicality and, suitably, to sliceness.
LaurentPoly2 generalized_alexander(const KnotCode& code);

struct SkeinTriple {
    KnotCode plus;
    KnotCode minus;
    LinkCode zero;
};

// plus/minus force the named crossing to the given sign by switching the
// strands when needed; zero is the oriented smoothing, which splits the
// component in two.
SkeinTriple skein_triple(const KnotCode& code, int id);

}  // namespace vk
