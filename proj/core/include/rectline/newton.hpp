#pragma once

#include <optional>
#include <vector>

#include "rectline/bipoly.hpp"

namespace rectline {

// Coprime grading weights. Convention: the monomial x^i y^j has weighted
// degree l*i + k*j, so k weights y and l weights x.
struct WeightPair {
    long k;  // weight of y
    long l;  // weight of x
    WeightPair(long k_, long l_);
    friend bool operator==(const WeightPair&, const WeightPair&) = default;
};

// One north-east hull edge of the support, running from (i_min, j_max) to
// (i_min + k*steps, j_max - l*steps).
struct Edge {
    WeightPair weight;
    long d_value;  // common weighted degree on the edge
    int i_min;
    int j_max;
    int steps;  // lattice steps, >= 1

    int j_min() const { return j_max - static_cast<int>(weight.l) * steps; }
    int i_max() const { return i_min + static_cast<int>(weight.k) * steps; }
};

// Structure of the edge's leading form
//   a_lead * x^i_min * y^j_min * prod_i (x^k - c_i y^l)^{n_i}
// with the c_i the roots of f and sum n_i = deg f = steps.
struct EdgeFactorization {
    Rational a_lead;
    int i_min;
    int j_min;
    UniPoly f;  // f(0) != 0, deg f = steps
    int m;      // number of distinct complex roots of f
    std::optional<LinearPower> perfect_power;  // set when f = a_lead*(t - c)^n
};

// max of l*i + k*j over the support; error on zero polynomial.
long weighted_degree(const BiPoly& p, const WeightPair& w);

// Sub-polynomial supported on the maximal-weighted-degree monomials.
BiPoly leading_part(const BiPoly& p, const WeightPair& w);

// All edges of the upper-right hull of the support whose primitive outward
// normal (l, k) is componentwise positive. Empty iff one support point
// dominates all others componentwise. Error on zero or constant input.
std::vector<Edge> ne_edges(const BiPoly& p);

EdgeFactorization edge_factorization(const BiPoly& p, const Edge& e);

// Lower bound on the number of punctures of the curve p = 0.
int infinity_lower_bound(const BiPoly& p);

// The componentwise-dominant support point when ne_edges(p) is empty.
std::optional<ExponentPair> dominant_vertex(const BiPoly& p);

}  // namespace rectline
