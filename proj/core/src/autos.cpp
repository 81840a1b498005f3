#include "rectline/autos.hpp"

#include <random>
#include <stdexcept>

namespace rectline {

BiPoly apply_auto(const ElemAuto& a, const BiPoly& p) {
    return std::visit(
        [&](const auto& step) -> BiPoly {
            using T = std::decay_t<decltype(step)>;
            if constexpr (std::is_same_v<T, JonquieresY>) {
                return substitute(p, BiPoly::var_x(), BiPoly::var_y() + lift_x(step.h));
            } else if constexpr (std::is_same_v<T, JonquieresX>) {
                return substitute(p, BiPoly::var_x() + lift_y(step.g), BiPoly::var_y());
            } else {
                if (step.det() == 0) throw std::invalid_argument("apply_auto: singular affine map");
                BiPoly ix = BiPoly::var_x() * step.a + BiPoly::var_y() * step.b +
                            BiPoly::constant(step.e);
                BiPoly iy = BiPoly::var_x() * step.c + BiPoly::var_y() * step.d +
                            BiPoly::constant(step.f);
                return substitute(p, ix, iy);
            }
        },
        a);
}

ElemAuto invert_auto(const ElemAuto& a) {
    return std::visit(
        [](const auto& step) -> ElemAuto {
            using T = std::decay_t<decltype(step)>;
            if constexpr (std::is_same_v<T, JonquieresY>) {
                return JonquieresY{-step.h};
            } else if constexpr (std::is_same_v<T, JonquieresX>) {
                return JonquieresX{-step.g};
            } else {
                Rational det = step.det();
                if (det == 0) throw std::invalid_argument("invert_auto: singular affine map");
                Affine inv;
                inv.a = step.d / det;
                inv.b = -step.b / det;
                inv.c = -step.c / det;
                inv.d = step.a / det;
                // v -> M^{-1} (v - t)
                inv.e = -(inv.a * step.e + inv.b * step.f);
                inv.f = -(inv.c * step.e + inv.d * step.f);
                return inv;
            }
        },
        a);
}

BiPoly apply_seq(const AutoSeq& s, const BiPoly& p) {
    BiPoly cur = p;
    for (const auto& step : s.steps) cur = apply_auto(step, cur);
    return cur;
}

AutoSeq invert_seq(const AutoSeq& s) {
    AutoSeq inv;
    inv.steps.reserve(s.steps.size());
    for (auto it = s.steps.rbegin(); it != s.steps.rend(); ++it)
        inv.steps.push_back(invert_auto(*it));
    return inv;
}

AutoSeq concat(AutoSeq a, const AutoSeq& b) {
    a.steps.insert(a.steps.end(), b.steps.begin(), b.steps.end());
    return a;
}

namespace {

long draw_int(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

UniPoly draw_unipoly(std::mt19937_64& rng, int coeff_bound) {
    int deg = static_cast<int>(draw_int(rng, 1, 4));
    std::vector<Rational> c(static_cast<size_t>(deg) + 1);
    for (auto& a : c) a = Rational(draw_int(rng, -coeff_bound, coeff_bound));
    while (c.back() == 0) c.back() = Rational(draw_int(rng, -coeff_bound, coeff_bound));
    return UniPoly(std::move(c));
}

ElemAuto draw_step(std::mt19937_64& rng, int coeff_bound) {
    switch (draw_int(rng, 0, 2)) {
        case 0:
            return JonquieresY{draw_unipoly(rng, coeff_bound)};
        case 1:
            return JonquieresX{draw_unipoly(rng, coeff_bound)};
        default: {
            Affine af;
            do {
                af.a = Rational(draw_int(rng, -coeff_bound, coeff_bound));
                af.b = Rational(draw_int(rng, -coeff_bound, coeff_bound));
                af.c = Rational(draw_int(rng, -coeff_bound, coeff_bound));
                af.d = Rational(draw_int(rng, -coeff_bound, coeff_bound));
            } while (af.det() == 0);
            af.e = Rational(draw_int(rng, -coeff_bound, coeff_bound));
            af.f = Rational(draw_int(rng, -coeff_bound, coeff_bound));
            return af;
        }
    }
}

// Cheap upper bound on deg(apply_auto(step, p)); affine maps preserve degree.
int degree_bound_after(const ElemAuto& step, const BiPoly& p) {
    int d = p.total_degree();
    if (const auto* jy = std::get_if<JonquieresY>(&step)) {
        int dh = std::max(jy->h.degree(), 1);
        int b = 0;
        for (const auto& [e, a] : p.terms()) b = std::max(b, e.i + e.j * dh);
        return b;
    }
    if (const auto* jx = std::get_if<JonquieresX>(&step)) {
        int dg = std::max(jx->g.degree(), 1);
        int b = 0;
        for (const auto& [e, a] : p.terms()) b = std::max(b, e.i * dg + e.j);
        return b;
    }
    return d;
}

}  // namespace

GeneratedCoordinate random_coordinate(std::uint64_t seed, int steps, int coeff_bound,
                                      int degree_bound) {
    if (degree_bound < 1) throw std::invalid_argument("random_coordinate: degree_bound < 1");
    if (steps < 0) throw std::invalid_argument("random_coordinate: negative step count");
    if (coeff_bound < 1) throw std::invalid_argument("random_coordinate: coeff_bound < 1");
    std::mt19937_64 rng(seed);
    GeneratedCoordinate out;
    out.p = BiPoly::var_x();
    for (int s = 0; s < steps; ++s) {
        bool placed = false;
        for (int attempt = 0; attempt < 32 && !placed; ++attempt) {
            ElemAuto cand = draw_step(rng, coeff_bound);
            if (degree_bound_after(cand, out.p) > degree_bound) continue;
            out.p = apply_auto(cand, out.p);
            out.witness.steps.push_back(std::move(cand));
            placed = true;
        }
        if (!placed) break;  // bound saturated, truncate
    }
    return out;
}

}  // namespace rectline
