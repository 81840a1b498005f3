#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "rectline/autos.hpp"
#include "rectline/newton.hpp"

namespace rectline {

// A reduction opportunity: the unique spanning edge carries the leading form
// a * (x^k - c y^l)^n with min(k, l) = 1.
struct StepPlan {
    Edge edge;
    Rational c;  // nonzero
    int n;
};

struct UnivariateNonlinear {};

struct MultiplePointsAtInfinity {
    int count;  // >= 2
    std::optional<Edge> witness_edge;
    std::optional<ExponentPair> witness_vertex;  // dominant-monomial case
};

struct BothWeightsAtLeastTwo {
    long k, l;  // coprime, both >= 2
    int n;
    long chi;  // 1 - (k-1)(l-1), always <= -1 here
};

using Obstruction = std::variant<UnivariateNonlinear, MultiplePointsAtInfinity, BothWeightsAtLeastTwo>;

// Certificate for a positive decision; applying seq to the input gives
// exactly the polynomial y.
struct Certificate {
    AutoSeq seq;
};

struct Decision {
    bool is_coordinate;
    std::optional<Certificate> certificate;
    std::optional<Obstruction> obstruction;
};

struct Linear {};

using StructureResult = std::variant<Linear, StepPlan, Obstruction>;

// Classifies p: already linear, reducible via a spanning edge, or blocked.
// Error on zero or constant input.
StructureResult structure_test(const BiPoly& p);

// One de Jonquieres reduction; the measure (total degree, deg_x + deg_y)
// strictly decreases or a logic error is raised.
std::pair<BiPoly, ElemAuto> reduction_step(const BiPoly& p, const StepPlan& plan);

Decision rectify(const BiPoly& p);

// True iff apply_seq(cert.seq, p) = y and cert.seq composed with its
// inverse fixes both x and y.
bool verify_certificate(const BiPoly& p, const Certificate& cert);

}  // namespace rectline
