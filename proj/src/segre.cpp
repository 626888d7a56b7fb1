#include "celestial/segre.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>

namespace celestial::segre {

namespace {

QI power(const QI& z, long e) {
    QI base = e < 0 ? z.inverse() : z;
    QI r = 1;
    for (long k = 0; k < (e < 0 ? -e : e); ++k) r *= base;
    return r;
}

std::size_t position(const std::vector<int>& labels, int label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::invalid_argument("label not present in frame");
    return static_cast<std::size_t>(it - labels.begin());
}

// Monomial coefficient vector of a form on the full y0..y8 frame restricted to
// the given labels; nullopt when the form uses a coordinate outside them.
std::optional<QuadraticForm> restrict_form(const QuadraticForm& q, const std::vector<int>& labels) {
    std::size_t n = labels.size();
    Matrix A(n, n);
    for (std::size_t i = 0; i < q.dim(); ++i)
        for (std::size_t j = 0; j < q.dim(); ++j) {
            if (q.A(i, j).is_zero()) continue;
            auto a = std::find(labels.begin(), labels.end(), q.labels[i]);
            auto b = std::find(labels.begin(), labels.end(), q.labels[j]);
            if (a == labels.end() || b == labels.end()) return std::nullopt;
            A(a - labels.begin(), b - labels.begin()) = q.A(i, j);
        }
    return QuadraticForm(A, q.frame, labels);
}

}  // namespace

const MonomialParam& double_segre() {
    static const MonomialParam p{
        {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}},
        {0, 1, 2, 3, 4, 5, 6, 7, 8},
    };
    return p;
}

Vec eval_param(const MonomialParam& p, const QI& s, const QI& u) {
    if (s.is_zero() || u.is_zero()) throw std::invalid_argument("eval_param: torus coordinates must be nonzero");
    Vec v;
    for (auto& e : p.exponents) v.push_back(power(s, e.x) * power(u, e.y));
    return v;
}

Vec eval_lift(const MonomialParam& p, const QI& s, const QI& t, const QI& u, const QI& w) {
    Vec v;
    for (auto& e : p.exponents) v.push_back(power(s, 1 + e.x) * power(t, 1 - e.x) * power(u, 1 + e.y) * power(w, 1 - e.y));
    return v;
}

Vec normalize_projective(const Vec& v) {
    for (auto& z : v)
        if (!z.is_zero()) {
            QI inv = z.inverse();
            Vec out;
            for (auto& c : v) out.push_back(c * inv);
            return out;
        }
    throw std::invalid_argument("zero vector is not a projective point");
}

bool projectively_equal(const Vec& a, const Vec& b) { return normalize_projective(a) == normalize_projective(b); }

FormSpan i2_segre() {
    static const FormSpan span = FormSpan::parse(
        {
            "y0^2-y1*y2", "y0^2-y3*y4", "y0^2-y5*y6", "y0^2-y7*y8",
            "y1^2-y5*y7", "y2^2-y6*y8", "y3^2-y5*y8", "y4^2-y6*y7",
            "y0*y1-y4*y5", "y0*y2-y3*y6", "y0*y3-y2*y5", "y0*y4-y1*y6",
            "y0*y1-y3*y7", "y0*y2-y4*y8", "y0*y3-y1*y8", "y0*y4-y2*y7",
            "y0*y5-y1*y3", "y0*y6-y2*y4", "y0*y7-y1*y4", "y0*y8-y2*y3",
        },
        'y', iota_labels(9));
    return span;
}

const std::array<int, 9>& sigma_perm(int i) {
    static const std::array<std::array<int, 9>, 4> perms{{
        {0, 1, 2, 3, 4, 5, 6, 7, 8},
        {0, 2, 1, 3, 4, 8, 7, 6, 5},
        {0, 2, 1, 4, 3, 6, 5, 8, 7},
        {0, 3, 4, 1, 2, 5, 6, 8, 7},
    }};
    if (i < 0 || i > 3) throw std::invalid_argument("real structure index must be 0..3");
    return perms[i];
}

Vec apply_sigma(int i, const Vec& y) {
    const auto& p = sigma_perm(i);
    if (y.size() != 9) throw std::invalid_argument("apply_sigma: point must have 9 coordinates");
    Vec out(9);
    for (int k = 0; k < 9; ++k) out[k] = y[p[k]].conj();
    return out;
}

QuadraticForm apply_sigma(int i, const QuadraticForm& q) {
    const auto& p = sigma_perm(i);
    std::size_t n = q.dim();
    Matrix B(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t pa = position(q.labels, p[q.labels[a]]);
            std::size_t pb = position(q.labels, p[q.labels[b]]);
            B(a, b) = q.A(pa, pb).conj();
        }
    return {B, q.frame, q.labels};
}

FormSpan apply_sigma(int i, const FormSpan& span) {
    FormSpan out{span.frame, span.labels, {}};
    for (auto& q : span.basis) out.basis.push_back(apply_sigma(i, q));
    return out;
}

Matrix sigma_matrix(int i) {
    const auto& p = sigma_perm(i);
    Matrix P(9, 9);
    for (int k = 0; k < 9; ++k) P(k, p[k]) = 1;
    return P;
}

Matrix mu_matrix(int i) {
    QI I = QI::i();
    Matrix M(9, 9);
    switch (i) {
        case 0:
            return Matrix::identity(9);
        case 1:
            M(0, 0) = 1;
            M(1, 1) = 1, M(1, 2) = I;
            M(2, 1) = 1, M(2, 2) = -I;
            M(3, 3) = 1;
            M(4, 4) = 1;
            M(5, 5) = 1, M(5, 8) = I;
            M(6, 7) = 1, M(6, 6) = -I;
            M(7, 7) = 1, M(7, 6) = I;
            M(8, 5) = 1, M(8, 8) = -I;
            return M;
        case 2:
            M(0, 0) = Rational(1, 2);
            M(1, 1) = 1, M(1, 2) = I;
            M(2, 1) = 1, M(2, 2) = -I;
            M(3, 3) = 1, M(3, 4) = I;
            M(4, 3) = 1, M(4, 4) = -I;
            M(5, 5) = 1, M(5, 6) = I;
            M(6, 5) = 1, M(6, 6) = -I;
            M(7, 7) = 1, M(7, 8) = -I;
            M(8, 7) = 1, M(8, 8) = I;
            return M;
        case 3:
            M(0, 0) = 1;
            M(1, 3) = 1, M(1, 1) = -I;
            M(2, 2) = 1, M(2, 4) = I;
            M(3, 3) = 1, M(3, 1) = I;
            M(4, 2) = 1, M(4, 4) = -I;
            M(5, 5) = 1;
            M(6, 6) = 1;
            M(7, 8) = 1, M(7, 7) = -I;
            M(8, 8) = 1, M(8, 7) = I;
            return M;
    }
    throw std::invalid_argument("frame index must be 0..3");
}

MuResult mu_transform(int i, const QuadraticForm& q) {
    Matrix M = mu_matrix(i);
    std::size_t n = q.dim();
    Matrix R(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (int c = 0; c < 9; ++c) {
            const QI& z = M(q.labels[a], c);
            if (z.is_zero()) continue;
            auto it = std::find(q.labels.begin(), q.labels.end(), c);
            if (it == q.labels.end()) throw std::invalid_argument("mu_transform: frame change does not preserve the coordinate subset");
            R(a, it - q.labels.begin()) = z;
        }
    QuadraticForm out = q.pullback(R, 'x', q.labels);
    return {out, !out.A.is_real()};
}

FormSpan mu_transform(int i, const FormSpan& span) {
    FormSpan out{'x', span.labels, {}};
    for (auto& q : span.basis) out.basis.push_back(mu_transform(i, q).form);
    return out;
}

Matrix sym2(const Matrix& g) {
    if (g.rows() != 2 || g.cols() != 2) throw std::invalid_argument("sym2: expected a 2x2 matrix");
    // Image of s is a s + b t, image of t is c s + d t; polynomials are stored by power of s.
    Vec ls{g(0, 1), g(0, 0)}, lt{g(1, 1), g(1, 0)};
    auto mul = [](const Vec& p, const Vec& q) {
        Vec r(p.size() + q.size() - 1);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
        return r;
    };
    Matrix M(3, 3);
    Vec rows[3] = {mul(lt, lt), mul(ls, lt), mul(ls, ls)};
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) M(k, j) = rows[k][j];
    return M;
}

std::pair<int, int> sym_index(const lattice::Point& e) { return {static_cast<int>(1 + e.x), static_cast<int>(1 + e.y)}; }

Matrix rep_S(const Pair& phi) {
    if (determinant(phi.first).is_zero() || determinant(phi.second).is_zero())
        throw std::invalid_argument("rep_S: factors must be invertible");
    Matrix A = sym2(phi.first), B = sym2(phi.second);
    const auto& ex = double_segre().exponents;
    Matrix S(9, 9);
    for (std::size_t k = 0; k < 9; ++k) {
        auto [ik, jk] = sym_index(ex[k]);
        for (std::size_t l = 0; l < 9; ++l) {
            auto [il, jl] = sym_index(ex[l]);
            S(k, l) = A(ik, il) * B(jk, jl);
        }
    }
    return S;
}

Projection toric_projection(const std::vector<int>& drop) {
    const auto& full = double_segre();
    MonomialParam p;
    for (std::size_t k = 0; k < 9; ++k)
        if (std::find(drop.begin(), drop.end(), full.labels[k]) == drop.end()) {
            p.exponents.push_back(full.exponents[k]);
            p.labels.push_back(full.labels[k]);
        }
    // Remaining exponents must span a 2-dimensional affine lattice.
    bool two_dim = false;
    for (std::size_t a = 1; a < p.exponents.size() && !two_dim; ++a)
        for (std::size_t b = a + 1; b < p.exponents.size() && !two_dim; ++b) {
            auto u = p.exponents[a], v = p.exponents[b], o = p.exponents[0];
            if ((u.x - o.x) * (v.y - o.y) - (u.y - o.y) * (v.x - o.x) != 0) two_dim = true;
        }
    if (!two_dim) throw std::invalid_argument("toric_projection: remaining exponents do not span a surface");
    std::vector<QuadraticForm> kept;
    for (auto& q : i2_segre().basis)
        if (auto r = restrict_form(q, p.labels)) kept.push_back(*r);
    return {p, FormSpan::of(kept, 'y', p.labels)};
}

MonomialParam param_for_polygon(const lattice::Polygon& poly) {
    const auto& full = double_segre();
    MonomialParam p;
    auto pts = lattice::lattice_points(poly);
    for (std::size_t k = 0; k < 9; ++k)
        if (std::find(pts.begin(), pts.end(), full.exponents[k]) != pts.end()) {
            p.exponents.push_back(full.exponents[k]);
            p.labels.push_back(full.labels[k]);
        }
    if (p.exponents.size() != pts.size()) {
        // Outside the 3x3 grid: fall back to sorted lattice points.
        p.exponents = pts;
        p.labels = iota_labels(pts.size());
    }
    return p;
}

int i2_dimension(const MonomialParam& p, std::uint64_t seed, std::size_t samples) {
    std::size_t n = p.exponents.size();
    std::vector<std::pair<std::size_t, std::size_t>> monos;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) monos.push_back({i, j});
    if (samples == 0) samples = std::max<std::size_t>(60, monos.size() + 15);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 30);
    auto draw = [&] {
        long a = 0;
        while (a == 0) a = num(rng);
        Rational q(mpz_class(a), mpz_class(den(rng)));
        q.canonicalize();
        return q;
    };
    Matrix E(samples, monos.size());
    for (std::size_t r = 0; r < samples; ++r) {
        Rational s = draw(), u = draw();
        Vec y = eval_param(p, s, u);
        for (std::size_t c = 0; c < monos.size(); ++c) E(r, c) = y[monos[c].first] * y[monos[c].second];
    }
    return static_cast<int>(monos.size() - rank(E));
}

int i2_dimension_check(char tag, std::uint64_t seed) {
    const auto& rows = lattice::reference_rows();
    std::string ref = std::string("L.") + tag;
    for (auto& r : rows)
        if (r.table_ref == ref) return i2_dimension(param_for_polygon(r.type.polygon), seed);
    throw std::invalid_argument("unknown lattice type tag");
}

}  // namespace celestial::segre
