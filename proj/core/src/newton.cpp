#include "rectline/newton.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rectline {

WeightPair::WeightPair(long k_, long l_) : k(k_), l(l_) {
    if (k < 1 || l < 1) throw std::invalid_argument("WeightPair: weights must be >= 1");
    if (std::gcd(k, l) != 1) throw std::invalid_argument("WeightPair: weights must be coprime");
}

long weighted_degree(const BiPoly& p, const WeightPair& w) {
    if (p.is_zero()) throw std::invalid_argument("weighted_degree: zero polynomial");
    long d = 0;
    bool first = true;
    for (const auto& [e, a] : p.terms()) {
        long s = w.l * e.i + w.k * e.j;
        if (first || s > d) d = s;
        first = false;
    }
    return d;
}

BiPoly leading_part(const BiPoly& p, const WeightPair& w) {
    long d = weighted_degree(p, w);
    BiPoly r;
    for (const auto& [e, a] : p.terms())
        if (w.l * e.i + w.k * e.j == d) r.add_term(e.i, e.j, a);
    return r;
}

namespace {

// Support points not NE-dominated by another point, sorted by i ascending
// (j strictly descending along the list).
std::vector<ExponentPair> pareto_frontier(const BiPoly& p) {
    std::vector<ExponentPair> pts;
    pts.reserve(p.terms().size());
    for (const auto& [e, a] : p.terms()) pts.push_back(e);
    std::sort(pts.begin(), pts.end(), [](const ExponentPair& a, const ExponentPair& b) {
        return a.i != b.i ? a.i > b.i : a.j > b.j;
    });
    std::vector<ExponentPair> frontier;
    int best_j = -1;
    for (const auto& e : pts) {
        if (!frontier.empty() && frontier.back().i == e.i) continue;  // keep max j per i
        if (e.j > best_j) {
            frontier.push_back(e);
            best_j = e.j;
        }
    }
    std::reverse(frontier.begin(), frontier.end());
    return frontier;
}

long cross(const ExponentPair& o, const ExponentPair& a, const ExponentPair& b) {
    return static_cast<long>(a.i - o.i) * (b.j - o.j) - static_cast<long>(a.j - o.j) * (b.i - o.i);
}

}  // namespace

std::optional<ExponentPair> dominant_vertex(const BiPoly& p) {
    if (p.is_zero() || p.is_constant())
        throw std::invalid_argument("dominant_vertex: need a non-constant polynomial");
    auto frontier = pareto_frontier(p);
    if (frontier.size() == 1) return frontier.front();
    return std::nullopt;
}

std::vector<Edge> ne_edges(const BiPoly& p) {
    if (p.is_zero() || p.is_constant())
        throw std::invalid_argument("ne_edges: need a non-constant polynomial");
    auto frontier = pareto_frontier(p);
    if (frontier.size() == 1) return {};

    // Upper convex chain over the frontier staircase; collinear runs merge.
    std::vector<ExponentPair> hull;
    for (const auto& e : frontier) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), e) >= 0)
            hull.pop_back();
        hull.push_back(e);
    }

    std::vector<Edge> edges;
    for (size_t t = 0; t + 1 < hull.size(); ++t) {
        const ExponentPair& a = hull[t];
        const ExponentPair& b = hull[t + 1];
        int di = b.i - a.i;       // > 0
        int dj = a.j - b.j;       // > 0
        int g = std::gcd(di, dj);
        WeightPair w(di / g, dj / g);
        edges.push_back(Edge{w, w.l * a.i + w.k * a.j, a.i, a.j, g});
    }
    return edges;
}

EdgeFactorization edge_factorization(const BiPoly& p, const Edge& e) {
    const long k = e.weight.k, l = e.weight.l;
    if (p.is_zero()) throw std::invalid_argument("edge_factorization: zero polynomial");
    if (weighted_degree(p, e.weight) != e.d_value)
        throw std::invalid_argument("edge_factorization: d_value does not match the polynomial");

    std::vector<Rational> fc(static_cast<size_t>(e.steps) + 1, Rational(0));
    BiPoly hat = leading_part(p, e.weight);
    for (const auto& [ep, a] : hat.terms()) {
        long num = ep.i - e.i_min;
        if (num < 0 || num % k != 0)
            throw std::invalid_argument("edge_factorization: not an edge of this polynomial");
        long s = num / k;
        if (s > e.steps || ep.j != e.j_max - l * s)
            throw std::invalid_argument("edge_factorization: not an edge of this polynomial");
        fc[static_cast<size_t>(s)] = a;
    }
    if (fc.front() == 0 || fc.back() == 0)
        throw std::invalid_argument("edge_factorization: endpoints missing from the support");

    UniPoly f{std::move(fc)};
    EdgeFactorization out;
    out.a_lead = f.leading();
    out.i_min = e.i_min;
    out.j_min = e.j_min();
    out.m = squarefree_data(f).distinct_root_count;
    out.perfect_power = perfect_linear_power(f);
    out.f = std::move(f);
    return out;
}

int infinity_lower_bound(const BiPoly& p) {
    if (p.is_zero() || p.is_constant())
        throw std::invalid_argument("infinity_lower_bound: need a non-constant polynomial");
    if (auto v = dominant_vertex(p))
        return (v->i > 0 ? 1 : 0) + (v->j > 0 ? 1 : 0);
    int best = 0;
    for (const auto& e : ne_edges(p)) {
        EdgeFactorization ef = edge_factorization(p, e);
        int count = ef.m + (ef.i_min > 0 ? 1 : 0) + (ef.j_min > 0 ? 1 : 0);
        best = std::max(best, count);
    }
    return best;
}

}  // namespace rectline
