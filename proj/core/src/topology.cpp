#include "rectline/topology.hpp"

#include <numeric>
#include <stdexcept>

namespace rectline {

void TriPoly::add_term(int i, int j, int e, const Rational& a) {
    if (a == 0) return;
    if (i < 0 || j < 0 || e < 0) throw std::invalid_argument("TriPoly: negative exponent");
    auto [it, inserted] = terms_.try_emplace({i, j, e}, a);
    if (!inserted) {
        it->second += a;
        if (it->second == 0) terms_.erase(it);
    }
}

TriPoly TriPoly::constant(const Rational& a) {
    TriPoly p;
    p.add_term(0, 0, 0, a);
    return p;
}

TriPoly TriPoly::variable(char v) {
    TriPoly p;
    switch (v) {
        case 'x': p.add_term(1, 0, 0, 1); break;
        case 'y': p.add_term(0, 1, 0, 1); break;
        case 'z': p.add_term(0, 0, 1, 1); break;
        default: throw std::invalid_argument("TriPoly::variable: unknown variable");
    }
    return p;
}

TriPoly TriPoly::operator-() const {
    TriPoly r = *this;
    for (auto& [e, a] : r.terms_) a = -a;
    return r;
}

TriPoly TriPoly::operator+(const TriPoly& o) const {
    TriPoly r = *this;
    for (const auto& [e, a] : o.terms_) r.add_term(e.i, e.j, e.e, a);
    return r;
}

TriPoly TriPoly::operator-(const TriPoly& o) const { return *this + (-o); }

TriPoly TriPoly::operator*(const TriPoly& o) const {
    TriPoly r;
    for (const auto& [e1, a1] : terms_)
        for (const auto& [e2, a2] : o.terms_)
            r.add_term(e1.i + e2.i, e1.j + e2.j, e1.e + e2.e, a1 * a2);
    return r;
}

TriPoly TriPoly::operator*(const Rational& a) const {
    if (a == 0) return TriPoly();
    TriPoly r = *this;
    for (auto& [e, c] : r.terms_) c *= a;
    return r;
}

TriPoly TriPoly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("TriPoly::pow: negative exponent");
    TriPoly r = constant(1);
    for (int i = 0; i < n; ++i) r = r * (*this);
    return r;
}

namespace {

void require_coprime(long k, long l) {
    if (k < 1 || l < 1 || std::gcd(k, l) != 1)
        throw std::invalid_argument("exponents must be coprime positive integers");
}

}  // namespace

long euler_fermat(long k, long l) {
    require_coprime(k, l);
    return 1 - (k - 1) * (l - 1);
}

long euler_fermat_by_cover(long k, long l) {
    require_coprime(k, l);
    // y^l = 1 - x^k as an l-sheeted cover of C, fully ramified over the
    // k simple roots of x^k = 1: chi = l * chi(C) - k * (l - 1).
    return l - k * (l - 1);
}

bool suzuki_identity_check(long k, long l) {
    long chi_gen = euler_fermat(k, l);
    // The cuspidal special fiber x^k + y^l = 0 is the image of a line under
    // t -> (t^l, -t^k), so its Euler characteristic is 1.
    long chi_special = 1;
    return chi_gen + (chi_special - chi_gen) == 1;
}

DeformationFamily deformation(const BiPoly& q, const WeightPair& w) {
    if (q.is_zero()) throw std::invalid_argument("deformation: zero polynomial");
    long d = weighted_degree(q, w);
    TriPoly P;
    for (const auto& [e, a] : q.terms()) {
        long ze = d - w.l * e.i - w.k * e.j;
        P.add_term(e.i, e.j, static_cast<int>(ze), a);
    }
    DeformationFamily fam{std::move(P), w, d};
    // Re-check the construction invariants.
    if (!(specialize(fam.P, 1) == q))
        throw std::logic_error("deformation: z=1 specialization mismatch");
    if (!(specialize(fam.P, 0) == leading_part(q, w)))
        throw std::logic_error("deformation: z=0 specialization mismatch");
    return fam;
}

BiPoly specialize(const TriPoly& P, const Rational& a) {
    BiPoly r;
    for (const auto& [e, coeff] : P.terms()) {
        Rational scale(1);
        for (int t = 0; t < e.e; ++t) scale *= a;
        r.add_term(e.i, e.j, coeff * scale);
    }
    return r;
}

int s0_component_count(const BiPoly& q, const WeightPair& w) {
    for (const auto& e : ne_edges(q)) {
        if (!(e.weight == w)) continue;
        EdgeFactorization ef = edge_factorization(q, e);
        if (ef.i_min == 0 && ef.j_min == 0 && ef.perfect_power)
            return ef.perfect_power->n;
        break;
    }
    throw std::invalid_argument(
        "s0_component_count: leading part is not a perfect power on a spanning edge");
}

UniPoly critical_x_locus(const FiberSpec& fs) {
    if (fs.q.degree_y() <= 1)
        throw std::invalid_argument("critical_x_locus: projection is unramified (deg_y <= 1)");
    BiPoly shifted = fs.q - BiPoly::constant(fs.c);
    return resultant_y(shifted, partial_y(fs.q));
}

Rational cauchy_radius(const UniPoly& R) {
    if (R.is_zero() || R.degree() < 1)
        throw std::invalid_argument("cauchy_radius: need degree >= 1");
    Rational lead = abs(R.leading());
    Rational best(0);
    for (int i = 0; i < R.degree(); ++i) {
        Rational v = abs(R.coeff(i)) / lead;
        if (v > best) best = v;
    }
    return best + 1;
}

}  // namespace rectline
