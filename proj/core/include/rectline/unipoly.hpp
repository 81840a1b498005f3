#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rectline/rational.hpp"

namespace rectline {

// Dense univariate polynomial over the rationals. Index = exponent.
// The zero polynomial is the empty coefficient vector; otherwise the
// leading coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& a);
    static UniPoly monomial(const Rational& a, int exp);
    static UniPoly variable() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int exp) const;
    Rational leading() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& a) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly derivative() const;
    UniPoly monic() const;  // error on zero
    Rational eval(const Rational& t) const;

    // Quotient/remainder; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& divisor) const;
    // Division known to be exact; throws if a remainder shows up.
    UniPoly exact_divide(const UniPoly& divisor) const;

private:
    void normalize();
    std::vector<Rational> c_;
};

// Monic gcd via the Euclidean algorithm with per-step monic normalization.
UniPoly gcd(UniPoly a, UniPoly b);

struct SquarefreeData {
    UniPoly squarefree_part;   // f / gcd(f, f'), monic
    int distinct_root_count;   // = degree of squarefree_part
};

// f must be nonzero.
SquarefreeData squarefree_data(const UniPoly& f);

struct LinearPower {
    Rational c;  // f = a * (t - c)^n
    int n;
    Rational a;
};

// Detects f = a*(t - c)^n exactly (n = deg f, a = leading coefficient).
// The candidate c is read off the squarefree part and confirmed by
// re-expansion. Errors on zero or constant input.
std::optional<LinearPower> perfect_linear_power(const UniPoly& f);

}  // namespace rectline
