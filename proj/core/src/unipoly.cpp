#include "rectline/unipoly.hpp"

#include <stdexcept>

namespace rectline {

void UniPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& a) {
    UniPoly p;
    if (a != 0) p.c_.push_back(a);
    return p;
}

UniPoly UniPoly::monomial(const Rational& a, int exp) {
    UniPoly p;
    if (a != 0) {
        p.c_.assign(static_cast<size_t>(exp) + 1, Rational(0));
        p.c_.back() = a;
    }
    return p;
}

Rational UniPoly::coeff(int exp) const {
    if (exp < 0 || exp >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(exp)];
}

Rational UniPoly::leading() const {
    if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rational& a) const {
    if (a == 0) return UniPoly();
    UniPoly r = *this;
    for (auto& x : r.c_) x *= a;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) throw std::invalid_argument("monic() of zero polynomial");
    return *this * (Rational(1) / c_.back());
}

Rational UniPoly::eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    UniPoly rem = *this;
    int dd = divisor.degree();
    if (rem.degree() < dd) return {UniPoly(), rem};
    std::vector<Rational> q(static_cast<size_t>(rem.degree() - dd) + 1, Rational(0));
    const Rational& lc = divisor.c_.back();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Rational factor = rem.c_.back() / lc;
        q[static_cast<size_t>(shift)] = factor;
        for (int i = 0; i <= dd; ++i)
            rem.c_[static_cast<size_t>(i + shift)] -= factor * divisor.c_[static_cast<size_t>(i)];
        rem.normalize();
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::exact_divide(const UniPoly& divisor) const {
    auto [q, r] = divrem(divisor);
    if (!r.is_zero()) throw std::logic_error("exact_divide: nonzero remainder");
    return q;
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divrem(b).second;
        a = std::move(b);
        b = r.is_zero() ? UniPoly() : r.monic();
    }
    if (a.is_zero()) return a;
    return a.monic();
}

SquarefreeData squarefree_data(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_data: zero polynomial");
    if (f.degree() == 0) return {UniPoly::constant(1), 0};
    UniPoly g = gcd(f, f.derivative());
    UniPoly sf = f.exact_divide(g).monic();
    return {sf, sf.degree()};
}

std::optional<LinearPower> perfect_linear_power(const UniPoly& f) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("perfect_linear_power: need degree >= 1");
    SquarefreeData sq = squarefree_data(f);
    if (sq.squarefree_part.degree() != 1) return std::nullopt;
    Rational c = -sq.squarefree_part.coeff(0);  // squarefree part is monic t - c
    int n = f.degree();
    Rational a = f.leading();
    UniPoly lin({-c, Rational(1)});
    UniPoly expansion = UniPoly::constant(a);
    for (int i = 0; i < n; ++i) expansion = expansion * lin;
    if (!(expansion == f)) return std::nullopt;
    return LinearPower{c, n, a};
}

}  // namespace rectline
