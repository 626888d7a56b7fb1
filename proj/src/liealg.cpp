#include "celestial/liealg.hpp"

#include "celestial/segre.hpp"

#include <sstream>
#include <stdexcept>

namespace celestial::liealg {

namespace {

bool traceless2(const Matrix& m) { return m.rows() == 2 && m.cols() == 2 && (m(0, 0) + m(1, 1)).is_zero(); }

Matrix swap_conj(const Matrix& m) {
    // [[a,b],[c,d]] -> conj [[d,c],[b,a]]
    return Matrix{{m(1, 1).conj(), m(1, 0).conj()}, {m(0, 1).conj(), m(0, 0).conj()}};
}

std::string matrix_str(const Matrix& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

}  // namespace

LieElement::LieElement(Matrix l, Matrix r) : left(std::move(l)), right(std::move(r)) {
    if (!traceless2(left) || !traceless2(right)) throw std::invalid_argument("Lie element factors must be traceless 2x2 matrices");
}

Vec LieElement::flat() const {
    Vec v = left.entries();
    v.insert(v.end(), right.entries().begin(), right.entries().end());
    return v;
}

std::string LieElement::str() const { return "(" + matrix_str(left) + ", " + matrix_str(right) + ")"; }

namespace gens {
Matrix t() { return Matrix{{0, 1}, {0, 0}}; }
Matrix q() { return Matrix{{0, 0}, {1, 0}}; }
Matrix s() { return Matrix{{1, 0}, {0, -1}}; }
Matrix r() { return Matrix{{0, -1}, {1, 0}}; }
Matrix e() { return Matrix(2, 2); }
LieElement t1() { return {t(), e()}; }
LieElement q1() { return {q(), e()}; }
LieElement s1() { return {s(), e()}; }
LieElement r1() { return {r(), e()}; }
LieElement t2() { return {e(), t()}; }
LieElement q2() { return {e(), q()}; }
LieElement s2() { return {e(), s()}; }
LieElement r2() { return {e(), r()}; }
}  // namespace gens

LieElement bracket(const LieElement& x, const LieElement& y) {
    return {x.left * y.left - y.left * x.left, x.right * y.right - y.right * x.right};
}

LieElement lie_sigma(int i, const LieElement& m) {
    switch (i) {
        case 0: return {m.left.conj(), m.right.conj()};
        case 1: return {swap_conj(m.left), m.right.conj()};
        case 2: return {swap_conj(m.left), swap_conj(m.right)};
        case 3: return {m.right.conj(), m.left.conj()};
    }
    throw std::invalid_argument("real structure index must be 0..3");
}

Matrix d_sym2(const Matrix& m) {
    const QI &a = m(0, 0), &b = m(0, 1), &c = m(1, 0), &d = m(1, 1);
    Matrix D(3, 3);
    for (int i = 0; i < 3; ++i) {
        D(i, i) = QI(i) * a + QI(2 - i) * d;
        if (i > 0) D(i, i - 1) = QI(i) * b;
        if (i < 2) D(i, i + 1) = QI(2 - i) * c;
    }
    return D;
}

Matrix d_rep(const LieElement& m) {
    Matrix A = d_sym2(m.left), B = d_sym2(m.right);
    const auto& ex = segre::double_segre().exponents;
    Matrix D(9, 9);
    for (std::size_t k = 0; k < 9; ++k) {
        auto [ik, jk] = segre::sym_index(ex[k]);
        for (std::size_t l = 0; l < 9; ++l) {
            auto [il, jl] = segre::sym_index(ex[l]);
            QI v;
            if (jk == jl) v += A(ik, il);
            if (ik == il) v += B(jk, jl);
            D(k, l) = v;
        }
    }
    return D;
}

bool is_subalgebra(const std::vector<LieElement>& basis) {
    std::vector<Vec> span;
    for (auto& b : basis) span.push_back(b.flat());
    if (span.empty()) return true;
    if (span_rank(span) != span.size()) throw std::invalid_argument("is_subalgebra: basis is dependent");
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!in_span(span, bracket(basis[i], basis[j]).flat())) return false;
    return true;
}

std::vector<NamedSubalgebra> classification_list() {
    using namespace gens;
    std::vector<NamedSubalgebra> out;
    auto add = [&](std::string label, std::vector<LieElement> b) { out.push_back({std::move(label), std::move(b)}); };
    add("<t1>", {t1()});
    add("<s1>", {s1()});
    add("<t1+t2>", {t1() + t2()});
    add("<t1+s2>", {t1() + s2()});
    add("<t1,s1>", {t1(), s1()});
    add("<t1,t2>", {t1(), t2()});
    add("<t1,s2>", {t1(), s2()});
    add("<s1,s2>", {s1(), s2()});
    add("<s1+t2,t1>", {s1() + t2(), t1()});
    add("<t1+t2,s1+s2>", {t1() + t2(), s1() + s2()});
    add("<t1,q1,s1>", {t1(), q1(), s1()});
    add("<t1,s1,t2>", {t1(), s1(), t2()});
    add("<t1,s1,s2>", {t1(), s1(), s2()});
    add("<t1+t2,q1+q2,s1+s2>", {t1() + t2(), q1() + q2(), s1() + s2()});
    add("<t1,s1,t2,s2>", {t1(), s1(), t2(), s2()});
    add("<t1,q1,s1,t2>", {t1(), q1(), s1(), t2()});
    add("<t1,q1,s1,s2>", {t1(), q1(), s1(), s2()});
    add("<t1,q1,s1,t2,s2>", {t1(), q1(), s1(), t2(), s2()});
    add("<t1,q1,s1,t2,q2,s2>", {t1(), q1(), s1(), t2(), q2(), s2()});
    const std::pair<const char*, QI> alphas[] = {{"1", QI(1)}, {"2", QI(2)}, {"i", QI::i()}};
    for (auto& [name, a] : alphas) {
        std::string tag = std::string(" (a=") + name + ")";
        LieElement sa = s1() + a * s2();
        add("<s1+a*s2>" + tag, {sa});
        add("<s1+a*s2,t1>" + tag, {sa, t1()});
        add("<s1+a*s2,t1,t2>" + tag, {sa, t1(), t2()});
    }
    return out;
}

FormSpan invariant_forms(const std::vector<Matrix>& Ds, const FormSpan& ambient) {
    std::size_t n = ambient.labels.size(), k = ambient.dim();
    std::size_t tri = n * (n + 1) / 2;
    Matrix sys(Ds.size() * tri, k);
    for (std::size_t c = 0; c < k; ++c) {
        const Matrix& A = ambient.basis[c].A;
        for (std::size_t d = 0; d < Ds.size(); ++d) {
            const Matrix& D = Ds[d];
            if (D.rows() != n || D.cols() != n) throw std::invalid_argument("invariant_forms: representation size mismatch");
            Matrix M = D.transpose() * A + A * D;
            std::size_t r = d * tri;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) sys(r++, c) = M(i, j);
        }
    }
    FormSpan out{ambient.frame, ambient.labels, {}};
    for (auto& v : kernel(sys)) {
        Matrix A(n, n);
        for (std::size_t c = 0; c < k; ++c)
            if (!v[c].is_zero()) A += ambient.basis[c].A * v[c];
        out.basis.emplace_back(A, ambient.frame, ambient.labels);
    }
    return out;
}

FormSpan invariant_forms(const std::vector<LieElement>& g, const FormSpan& ambient) {
    std::vector<Matrix> Ds;
    for (auto& m : g) Ds.push_back(d_rep(m));
    return invariant_forms(Ds, ambient);
}

FormSpan real_basis(const FormSpan& space, int i) {
    FormSpan image = segre::apply_sigma(i, space);
    auto vs = space.coeff_vectors();
    for (auto& q : image.basis)
        if (!in_span(vs, q.coeffs())) throw std::invalid_argument("real_basis: span is not closed under the real structure");
    std::vector<QuadraticForm> candidates;
    QI I = QI::i();
    for (std::size_t k = 0; k < space.dim(); ++k) {
        const Matrix& A = space.basis[k].A;
        const Matrix& B = image.basis[k].A;
        candidates.emplace_back(A + B, space.frame, space.labels);
        candidates.emplace_back((A - B) * I, space.frame, space.labels);
    }
    FormSpan out = FormSpan::of(candidates, space.frame, space.labels);
    if (out.dim() != space.dim()) throw std::logic_error("real_basis: fixed locus has the wrong dimension");
    return out;
}

const std::vector<AlgebraPreset>& presets() {
    using namespace gens;
    static const std::vector<AlgebraPreset> p = [] {
        QI I = QI::i();
        return std::vector<AlgebraPreset>{
            {"sl2xsl2", "full algebra <t1,q1,s1,t2,q2,s2>", {t1(), q1(), s1(), t2(), q2(), s2()}},
            {"so2xso2", "<i s1, i s2>", {I * s1(), I * s2()}},
            {"so2xsx1", "<i s1, s2>", {I * s1(), s2()}},
            {"so2xse1", "<i s1, t2>", {I * s1(), t2()}},
            {"diag-sl2", "<t1+t2, q1+q2, s1+s2>", {t1() + t2(), q1() + q2(), s1() + s2()}},
        };
    }();
    return p;
}

}  // namespace celestial::liealg
