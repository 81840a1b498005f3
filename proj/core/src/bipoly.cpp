#include "rectline/bipoly.hpp"

#include <stdexcept>

namespace rectline {

BiPoly BiPoly::monomial(const Rational& a, int i, int j) {
    BiPoly p;
    if (a != 0) p.terms_[{i, j}] = a;
    return p;
}

bool BiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ExponentPair{0, 0});
}

int BiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // First key has maximal total degree under GradedLexDesc.
    const auto& e = terms_.begin()->first;
    return e.i + e.j;
}

int BiPoly::degree_x() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [e, a] : terms_) d = std::max(d, e.i);
    return d;
}

int BiPoly::degree_y() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [e, a] : terms_) d = std::max(d, e.j);
    return d;
}

Rational BiPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(int i, int j, const Rational& a) {
    if (a == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, a);
    if (!inserted) {
        it->second += a;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [e, a] : r.terms_) a = -a;
    return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [e, a] : o.terms_) r.add_term(e.i, e.j, a);
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

namespace {

// Dense accumulation buffer for products; falls back to the sparse map
// path when the degree box is too large.
class DenseGrid {
public:
    static constexpr long kMaxCells = 1 << 20;

    DenseGrid(int max_i, int max_j) : nx_(max_i + 1), ny_(max_j + 1) {
        cells_.resize(static_cast<size_t>(nx_) * ny_);
    }

    static bool fits(int max_i, int max_j) {
        return max_i >= 0 && max_j >= 0 &&
               static_cast<long>(max_i + 1) * (max_j + 1) <= kMaxCells;
    }

    Rational& at(int i, int j) { return cells_[static_cast<size_t>(i) * ny_ + j]; }

    BiPoly to_bipoly() const {
        BiPoly r;
        for (int i = 0; i < nx_; ++i)
            for (int j = 0; j < ny_; ++j) {
                const Rational& a = cells_[static_cast<size_t>(i) * ny_ + j];
                if (a != 0) r.add_term(i, j, a);
            }
        return r;
    }

private:
    int nx_, ny_;
    std::vector<Rational> cells_;
};

}  // namespace

BiPoly BiPoly::operator*(const BiPoly& o) const {
    if (is_zero() || o.is_zero()) return BiPoly();
    int mi = degree_x() + o.degree_x();
    int mj = degree_y() + o.degree_y();
    if (DenseGrid::fits(mi, mj)) {
        DenseGrid grid(mi, mj);
        for (const auto& [e1, a1] : terms_)
            for (const auto& [e2, a2] : o.terms_)
                grid.at(e1.i + e2.i, e1.j + e2.j) += a1 * a2;
        return grid.to_bipoly();
    }
    BiPoly r;
    for (const auto& [e1, a1] : terms_)
        for (const auto& [e2, a2] : o.terms_)
            r.add_term(e1.i + e2.i, e1.j + e2.j, a1 * a2);
    return r;
}

BiPoly BiPoly::operator*(const Rational& a) const {
    if (a == 0) return BiPoly();
    BiPoly r = *this;
    for (auto& [e, c] : r.terms_) c *= a;
    return r;
}

BiPoly BiPoly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("pow: negative exponent");
    BiPoly r = constant(1);
    for (int i = 0; i < n; ++i) r = r * (*this);
    return r;
}

BiPoly substitute(const BiPoly& p, const BiPoly& image_x, const BiPoly& image_y) {
    if (p.is_zero()) return BiPoly();
    int dx = p.degree_x(), dy = p.degree_y();
    std::vector<BiPoly> px(static_cast<size_t>(dx) + 1), py(static_cast<size_t>(dy) + 1);
    px[0] = BiPoly::constant(1);
    for (int i = 1; i <= dx; ++i) px[static_cast<size_t>(i)] = px[static_cast<size_t>(i - 1)] * image_x;
    py[0] = BiPoly::constant(1);
    for (int j = 1; j <= dy; ++j) py[static_cast<size_t>(j)] = py[static_cast<size_t>(j - 1)] * image_y;

    // Group terms by x-exponent so each x-power is multiplied in once.
    std::map<int, BiPoly> by_i;
    for (const auto& [e, a] : p.terms()) {
        BiPoly& part = by_i[e.i];
        for (const auto& [pe, pa] : py[static_cast<size_t>(e.j)].terms())
            part.add_term(pe.i, pe.j, pa * a);
    }

    int mi = 0, mj = 0;
    for (const auto& [i, part] : by_i) {
        if (part.is_zero()) continue;
        const BiPoly& power = px[static_cast<size_t>(i)];
        if (power.is_zero()) continue;
        mi = std::max(mi, power.degree_x() + part.degree_x());
        mj = std::max(mj, power.degree_y() + part.degree_y());
    }
    if (DenseGrid::fits(mi, mj)) {
        DenseGrid grid(mi, mj);
        for (const auto& [i, part] : by_i) {
            const BiPoly& power = px[static_cast<size_t>(i)];
            for (const auto& [e1, a1] : power.terms())
                for (const auto& [e2, a2] : part.terms())
                    grid.at(e1.i + e2.i, e1.j + e2.j) += a1 * a2;
        }
        return grid.to_bipoly();
    }
    BiPoly r;
    for (const auto& [i, part] : by_i) r = r + px[static_cast<size_t>(i)] * part;
    return r;
}

BiPoly partial_x(const BiPoly& p) {
    BiPoly r;
    for (const auto& [e, a] : p.terms())
        if (e.i > 0) r.add_term(e.i - 1, e.j, a * Rational(e.i));
    return r;
}

BiPoly partial_y(const BiPoly& p) {
    BiPoly r;
    for (const auto& [e, a] : p.terms())
        if (e.j > 0) r.add_term(e.i, e.j - 1, a * Rational(e.j));
    return r;
}

BiPoly lift_x(const UniPoly& f) {
    BiPoly r;
    for (int i = 0; i <= f.degree(); ++i) r.add_term(i, 0, f.coeff(i));
    return r;
}

BiPoly lift_y(const UniPoly& f) {
    BiPoly r;
    for (int j = 0; j <= f.degree(); ++j) r.add_term(0, j, f.coeff(j));
    return r;
}

std::vector<UniPoly> coeffs_in_y(const BiPoly& p) {
    int dy = std::max(p.degree_y(), 0);
    std::vector<std::vector<Rational>> raw(static_cast<size_t>(dy) + 1);
    for (const auto& [e, a] : p.terms()) {
        auto& row = raw[static_cast<size_t>(e.j)];
        if (static_cast<int>(row.size()) <= e.i) row.resize(static_cast<size_t>(e.i) + 1, Rational(0));
        row[static_cast<size_t>(e.i)] = a;
    }
    std::vector<UniPoly> out;
    out.reserve(raw.size());
    for (auto& row : raw) out.emplace_back(std::move(row));
    return out;
}

namespace {

// Fraction-free (Bareiss) determinant over Q[x]; all divisions are exact.
UniPoly poly_determinant(std::vector<std::vector<UniPoly>> m) {
    const size_t n = m.size();
    int sign = 1;
    UniPoly prev = UniPoly::constant(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return UniPoly();
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_divide(prev);
            m[i][k] = UniPoly();
        }
        prev = m[k][k];
    }
    UniPoly det = m[n - 1][n - 1];
    return sign == 1 ? det : -det;
}

}  // namespace

UniPoly resultant_y(const BiPoly& p, const BiPoly& q) {
    int dp = p.degree_y(), dq = q.degree_y();
    if (dp < 1 || dq < 1)
        throw std::invalid_argument("resultant_y: both inputs need positive y-degree");
    std::vector<UniPoly> pc = coeffs_in_y(p), qc = coeffs_in_y(q);
    const size_t n = static_cast<size_t>(dp + dq);
    std::vector<std::vector<UniPoly>> syl(n, std::vector<UniPoly>(n));
    // dq rows of p's coefficients, then dp rows of q's, leading coefficient first.
    for (int r = 0; r < dq; ++r)
        for (int c = 0; c <= dp; ++c)
            syl[static_cast<size_t>(r)][static_cast<size_t>(r + c)] = pc[static_cast<size_t>(dp - c)];
    for (int r = 0; r < dp; ++r)
        for (int c = 0; c <= dq; ++c)
            syl[static_cast<size_t>(dq + r)][static_cast<size_t>(r + c)] = qc[static_cast<size_t>(dq - c)];
    return poly_determinant(std::move(syl));
}

}  // namespace rectline
