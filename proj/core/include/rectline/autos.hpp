#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "rectline/bipoly.hpp"

namespace rectline {

// (x, y) -> (x, y + h(x))
struct JonquieresY {
    UniPoly h;
    friend bool operator==(const JonquieresY&, const JonquieresY&) = default;
};

// (x, y) -> (x + g(y), y)
struct JonquieresX {
    UniPoly g;
    friend bool operator==(const JonquieresX&, const JonquieresX&) = default;
};

// (x, y) -> (a x + b y + e, c x + d y + f), requires ad - bc != 0
struct Affine {
    Rational a, b, c, d, e, f;
    Rational det() const { return a * d - b * c; }
    static Affine identity() { return {1, 0, 0, 1, 0, 0}; }
    static Affine swap_xy() { return {0, 1, 1, 0, 0, 0}; }
    friend bool operator==(const Affine&, const Affine&) = default;
};

using ElemAuto = std::variant<JonquieresY, JonquieresX, Affine>;

// p composed with the map, i.e. substitution of the coordinate images.
BiPoly apply_auto(const ElemAuto& a, const BiPoly& p);

ElemAuto invert_auto(const ElemAuto& a);

struct AutoSeq {
    std::vector<ElemAuto> steps;
    friend bool operator==(const AutoSeq&, const AutoSeq&) = default;
};

// Steps applied left to right: apply_seq([a1, a2], p) = apply_auto(a2, apply_auto(a1, p)).
BiPoly apply_seq(const AutoSeq& s, const BiPoly& p);

// Reversed list with each step inverted.
AutoSeq invert_seq(const AutoSeq& s);

AutoSeq concat(AutoSeq a, const AutoSeq& b);

struct GeneratedCoordinate {
    BiPoly p;  // = apply_seq(witness, x)
    AutoSeq witness;
};

// Deterministic disguised-coordinate generator. Jonquieres coefficients are
// integers bounded by coeff_bound, degrees drawn from 1..4; steps that would
// push deg(p) past degree_bound are resampled, then dropped.
GeneratedCoordinate random_coordinate(std::uint64_t seed, int steps, int coeff_bound,
                                      int degree_bound);

}  // namespace rectline
