#include "rectline/rectify.hpp"

#include <stdexcept>

namespace rectline {

StructureResult structure_test(const BiPoly& p) {
    if (p.is_zero() || p.is_constant())
        throw std::invalid_argument("structure_test: need a non-constant polynomial");
    if (p.total_degree() == 1) return Linear{};
    if (p.degree_x() == 0 || p.degree_y() == 0) return Obstruction{UnivariateNonlinear{}};

    auto edges = ne_edges(p);
    if (edges.empty()) {
        auto v = dominant_vertex(p);
        return Obstruction{MultiplePointsAtInfinity{2, std::nullopt, v}};
    }

    const Edge* spanning = nullptr;
    EdgeFactorization spanning_fact;
    int worst_count = 1;
    std::optional<Edge> worst_edge;
    for (const auto& e : edges) {
        EdgeFactorization ef = edge_factorization(p, e);
        int count = ef.m + (ef.i_min > 0 ? 1 : 0) + (ef.j_min > 0 ? 1 : 0);
        if (count > worst_count) {
            worst_count = count;
            worst_edge = e;
        } else if (count == 1) {
            spanning = &e;
            spanning_fact = std::move(ef);
        }
    }
    if (worst_edge) return Obstruction{MultiplePointsAtInfinity{worst_count, worst_edge, std::nullopt}};

    // All edge counts are 1; only one edge can span both axes.
    if (!spanning || !spanning_fact.perfect_power)
        throw std::logic_error("structure_test: spanning edge without a perfect-power form");
    const LinearPower& pw = *spanning_fact.perfect_power;
    long k = spanning->weight.k, l = spanning->weight.l;
    if (k >= 2 && l >= 2)
        return Obstruction{BothWeightsAtLeastTwo{k, l, pw.n, 1 - (k - 1) * (l - 1)}};
    return StepPlan{*spanning, pw.c, pw.n};
}

std::pair<BiPoly, ElemAuto> reduction_step(const BiPoly& p, const StepPlan& plan) {
    const long k = plan.edge.weight.k, l = plan.edge.weight.l;
    if (plan.c == 0) throw std::invalid_argument("reduction_step: zero root in plan");
    ElemAuto step;
    if (k == 1) {
        // leading form a (x - c y^l)^n: shear x -> x + c y^l
        step = JonquieresX{UniPoly::monomial(plan.c, static_cast<int>(l))};
    } else {
        // l = 1, leading form a (x^k - c y)^n: shear y -> y + c^{-1} x^k
        step = JonquieresY{UniPoly::monomial(Rational(1) / plan.c, static_cast<int>(k))};
    }
    BiPoly next = apply_auto(step, p);
    auto measure = [](const BiPoly& q) {
        return std::pair<int, int>(q.total_degree(), q.degree_x() + q.degree_y());
    };
    if (!(measure(next) < measure(p)))
        throw std::logic_error("reduction_step: degree measure failed to decrease");
    return {std::move(next), std::move(step)};
}

namespace {

// Affine tail turning the linear polynomial alpha*x + beta*y + gamma into y.
void append_linear_normalization(AutoSeq& seq, BiPoly& cur) {
    Rational alpha = cur.coeff(1, 0);
    Rational beta = cur.coeff(0, 1);
    Rational gamma = cur.coeff(0, 0);
    if (beta == 0) {
        ElemAuto swap = Affine::swap_xy();
        cur = apply_auto(swap, cur);
        seq.steps.push_back(std::move(swap));
        std::swap(alpha, beta);
    }
    Affine fix = Affine::identity();
    fix.c = -alpha / beta;
    fix.d = Rational(1) / beta;
    fix.f = -gamma / beta;
    ElemAuto last = fix;
    cur = apply_auto(last, cur);
    seq.steps.push_back(std::move(last));
}

}  // namespace

Decision rectify(const BiPoly& p) {
    if (p.is_zero() || p.is_constant())
        throw std::invalid_argument("rectify: need a non-constant polynomial");
    AutoSeq seq;
    BiPoly cur = p;
    long guard = static_cast<long>(p.total_degree()) * p.total_degree() + 2;
    for (long iter = 0; iter <= guard; ++iter) {
        StructureResult res = structure_test(cur);
        if (std::holds_alternative<Linear>(res)) {
            append_linear_normalization(seq, cur);
            if (!(cur == BiPoly::var_y()))
                throw std::logic_error("rectify: normalization did not reach y");
            Certificate cert{std::move(seq)};
            if (!verify_certificate(p, cert))
                throw std::logic_error("rectify: certificate failed verification");
            return Decision{true, std::move(cert), std::nullopt};
        }
        if (auto* obs = std::get_if<Obstruction>(&res))
            return Decision{false, std::nullopt, std::move(*obs)};
        auto [next, step] = reduction_step(cur, std::get<StepPlan>(res));
        cur = std::move(next);
        seq.steps.push_back(std::move(step));
    }
    throw std::logic_error("rectify: iteration guard exceeded");
}

bool verify_certificate(const BiPoly& p, const Certificate& cert) {
    if (!(apply_seq(cert.seq, p) == BiPoly::var_y())) return false;
    AutoSeq round = concat(cert.seq, invert_seq(cert.seq));
    return apply_seq(round, BiPoly::var_x()) == BiPoly::var_x() &&
           apply_seq(round, BiPoly::var_y()) == BiPoly::var_y();
}

}  // namespace rectline
