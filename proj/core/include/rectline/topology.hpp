#pragma once

#include <map>

#include "rectline/newton.hpp"

namespace rectline {

struct ExponentTriple {
    int i = 0;  // x
    int j = 0;  // y
    int e = 0;  // z
    friend bool operator==(const ExponentTriple&, const ExponentTriple&) = default;
};

struct TripleGradedLexDesc {
    bool operator()(const ExponentTriple& a, const ExponentTriple& b) const {
        int da = a.i + a.j + a.e, db = b.i + b.j + b.e;
        if (da != db) return da > db;
        if (a.i != b.i) return a.i > b.i;
        if (a.j != b.j) return a.j > b.j;
        return a.e > b.e;
    }
};

// Sparse trivariate polynomial in x, y, z.
class TriPoly {
public:
    using TermMap = std::map<ExponentTriple, Rational, TripleGradedLexDesc>;

    TriPoly() = default;

    static TriPoly constant(const Rational& a);
    static TriPoly variable(char v);  // 'x', 'y' or 'z'

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    void add_term(int i, int j, int e, const Rational& a);

    TriPoly operator-() const;
    TriPoly operator+(const TriPoly& o) const;
    TriPoly operator-(const TriPoly& o) const;
    TriPoly operator*(const TriPoly& o) const;
    TriPoly operator*(const Rational& a) const;
    TriPoly pow(int n) const;
    bool operator==(const TriPoly& o) const { return terms_ == o.terms_; }

private:
    TermMap terms_;
};

// The homogenized family: each term a_ij x^i y^j of q becomes
// a_ij x^i y^j z^{D - l i - k j} with D the weighted degree of q.
struct DeformationFamily {
    TriPoly P;
    WeightPair weight;
    long d_value;
};

struct FiberSpec {
    BiPoly q;
    Rational c;
};

// 1 - (k-1)(l-1): Euler characteristic of the affine curve x^k + y^l = 1.
long euler_fermat(long k, long l);

// Same quantity via an l-sheeted branched cover of the plane: l - k(l-1).
long euler_fermat_by_cover(long k, long l);

// Euler-characteristic bookkeeping for the Fermat pencil: the generic fiber
// value plus the single special-fiber correction must sum to 1 (the plane).
bool suzuki_identity_check(long k, long l);

DeformationFamily deformation(const BiPoly& q, const WeightPair& w);

// Substitute z = a and drop the z coordinate.
BiPoly specialize(const TriPoly& P, const Rational& a);

// Number of connected components of {leading_part(q, w) = 1} over C when the
// spanning-edge leading form is a perfect power a (x^k - c y^l)^n; returns n.
int s0_component_count(const BiPoly& q, const WeightPair& w);

// Res_y(q - c, dq/dy): x-coordinates of the fiber's ramification points over
// the x-axis lie among its roots. Requires deg_y(q) >= 2.
UniPoly critical_x_locus(const FiberSpec& fs);

// Cauchy bound 1 + max|a_i| / |a_deg|: every complex root of R lies in the
// disc of this radius.
Rational cauchy_radius(const UniPoly& R);

}  // namespace rectline
