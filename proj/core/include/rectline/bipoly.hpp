#pragma once

#include <map>
#include <vector>

#include "rectline/rational.hpp"
#include "rectline/unipoly.hpp"

namespace rectline {

struct ExponentPair {
    int i = 0;  // exponent of x
    int j = 0;  // exponent of y
    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

// Graded-lex: higher total degree first, then higher i first. This is the
// canonical term order of every serialized form.
struct GradedLexDesc {
    bool operator()(const ExponentPair& a, const ExponentPair& b) const {
        int da = a.i + a.j, db = b.i + b.j;
        if (da != db) return da > db;
        if (a.i != b.i) return a.i > b.i;
        return a.j > b.j;
    }
};

// Sparse bivariate polynomial over the rationals: map from exponent pair
// to nonzero coefficient; the zero polynomial is the empty map.
class BiPoly {
public:
    using TermMap = std::map<ExponentPair, Rational, GradedLexDesc>;

    BiPoly() = default;

    static BiPoly zero() { return BiPoly(); }
    static BiPoly constant(const Rational& a) { return monomial(a, 0, 0); }
    static BiPoly var_x() { return monomial(1, 1, 0); }
    static BiPoly var_y() { return monomial(1, 0, 1); }
    static BiPoly monomial(const Rational& a, int i, int j);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const;  // -1 for zero
    int degree_x() const;      // -1 for zero
    int degree_y() const;      // -1 for zero
    const TermMap& terms() const { return terms_; }
    Rational coeff(int i, int j) const;

    void add_term(int i, int j, const Rational& a);  // accumulates, drops zeros

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Rational& a) const;
    BiPoly pow(int n) const;
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

private:
    TermMap terms_;
};

// p with x := image_x, y := image_y, fully expanded. Ring homomorphism in p.
BiPoly substitute(const BiPoly& p, const BiPoly& image_x, const BiPoly& image_y);

BiPoly partial_x(const BiPoly& p);
BiPoly partial_y(const BiPoly& p);

// Embed a univariate polynomial as a BiPoly in x (resp. y).
BiPoly lift_x(const UniPoly& f);
BiPoly lift_y(const UniPoly& f);

// Coefficients of p viewed as a polynomial in y over Q[x]; index = y-exponent.
std::vector<UniPoly> coeffs_in_y(const BiPoly& p);

// Sylvester resultant of p and q with respect to y; result lives in Q[x].
// Both inputs must have positive y-degree.
UniPoly resultant_y(const BiPoly& p, const BiPoly& q);

}  // namespace rectline
