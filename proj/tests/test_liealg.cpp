#include "celestial/liealg.hpp"
#include "celestial/segre.hpp"

#include "doctest.h"

#include <random>

using namespace celestial;
using namespace celestial::liealg;
using namespace celestial::liealg::gens;

namespace {

const QI I = QI::i();

Matrix perm_matrix(int i) {
    Matrix P(9, 9);
    const auto& p = segre::sigma_perm(i);
    for (int k = 0; k < 9; ++k) P(k, p[k]) = 1;
    return P;
}

std::vector<LieElement> preset(const std::string& name) {
    for (auto& p : presets())
        if (p.name == name) return p.basis;
    throw std::out_of_range(name);
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// (P(1) - P(-1)) / 2 for P(a) = rep_S(exp(a x)) with x nilpotent, i.e. the derivative at 0.
Matrix derivative_of_group(const Matrix& x, bool left) {
    auto pair = [&](const QI& a) {
        Matrix g = Matrix::identity(2) + x * a;
        return left ? segre::Pair{g, Matrix::identity(2)} : segre::Pair{Matrix::identity(2), g};
    };
    return (segre::rep_S(pair(1)) - segre::rep_S(pair(-1))) * QI(Rational(1, 2));
}

}  // namespace

TEST_CASE("brackets") {
    CHECK(bracket(t1(), q1()) == s1());
    CHECK(bracket(t1(), t2()) == LieElement{});
    CHECK(bracket(q1(), s1()) == QI(2) * q1());
    CHECK(bracket(t2(), q2()) == s2());
    CHECK_THROWS(LieElement(Matrix::identity(2), e()));
}

TEST_CASE("real structures on sl2+sl2") {
    CHECK(lie_sigma(2, I * s1()) == I * s1());
    CHECK(lie_sigma(0, t1()) == t1());
    CHECK(lie_sigma(3, t1()) == t2());
    std::mt19937_64 g(9);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int k = 0; k < 20; ++k) {
        auto traceless = [&] {
            QI a(d(g), d(g));
            return Matrix{{a, QI(d(g), d(g))}, {QI(d(g), d(g)), -a}};
        };
        LieElement m{traceless(), traceless()};
        for (int i = 0; i < 4; ++i) {
            CHECK(lie_sigma(i, lie_sigma(i, m)) == m);
            CHECK(lie_sigma(i, bracket(m, t1())) == bracket(lie_sigma(i, m), lie_sigma(i, t1())));
            // compatible with the real structure of P^8
            CHECK(d_rep(lie_sigma(i, m)) == perm_matrix(i) * d_rep(m).conj() * perm_matrix(i));
        }
    }
}

TEST_CASE("derivative of the action") {
    CHECK(d_rep(LieElement{}).is_zero());
    CHECK(d_rep(I * s1()) == Matrix::diagonal({0, 2 * I, -2 * I, 0, 0, 2 * I, -2 * I, 2 * I, -2 * I}));
    CHECK(d_rep(QI(2) * t1() + QI(3) * s2()) == d_rep(t1()) * QI(2) + d_rep(s2()) * QI(3));
    // independent oracle: differentiate the group action along nilpotent one-parameter subgroups
    CHECK(d_rep(t1()) == derivative_of_group(t(), true));
    CHECK(d_rep(q1()) == derivative_of_group(q(), true));
    CHECK(d_rep(t2()) == derivative_of_group(t(), false));
    CHECK(d_rep(q2()) == derivative_of_group(q(), false));
}

TEST_CASE("derivative is a Lie algebra homomorphism") {
    std::mt19937_64 g(21);
    std::uniform_int_distribution<int> d(-3, 3);
    const std::vector<LieElement> basis{t1(), q1(), s1(), t2(), q2(), s2()};
    auto rnd = [&] {
        LieElement m;
        for (auto& b : basis) m = m + QI(d(g), d(g)) * b;
        return m;
    };
    for (int k = 0; k < 20; ++k) {
        LieElement x = rnd(), y = rnd();
        CHECK(d_rep(bracket(x, y)) == commutator(d_rep(x), d_rep(y)));
    }
}

TEST_CASE("subalgebra recognition") {
    CHECK(is_subalgebra({t1(), s1()}));
    CHECK(is_subalgebra({t1() + t2(), q1() + q2(), s1() + s2()}));
    CHECK(is_subalgebra({t1(), q2()}));
    CHECK(!is_subalgebra({t1() + q2(), s1()}));
    CHECK(!is_subalgebra({t1(), q1()}));
    auto list = classification_list();
    CHECK(list.size() > 20);
    for (auto& n : list) {
        INFO(n.label);
        CHECK(is_subalgebra(n.basis));
    }
}

TEST_CASE("invariant forms of the printed subalgebras") {
    auto amb = segre::i2_segre();
    auto L = iota_labels(9);
    auto a = invariant_forms(preset("so2xso2"), amb);
    CHECK(a.same_span(FormSpan::parse({"y0^2-y1*y2", "y0^2-y3*y4", "y0^2-y5*y6", "y0^2-y7*y8"}, 'y', L)));
    auto d = invariant_forms(preset("sl2xsl2"), amb);
    CHECK(d.same_span(FormSpan::parse({"2*y0^2 - 2*y1*y2 - 2*y3*y4 + y5*y6 + y7*y8"}, 'y', L)));
    auto c = invariant_forms(preset("so2xse1"), amb);
    CHECK(c.same_span(FormSpan::parse({"y0^2-y3*y4", "y4^2-y6*y7", "y1*y6-y2*y7", "2*y1*y2-y5*y6-y7*y8"}, 'y', L)));
    CHECK(invariant_forms(std::vector<LieElement>{}, amb).dim() == 20);
}

TEST_CASE("solver output satisfies the invariance equation") {
    auto amb = segre::i2_segre();
    for (auto& p : presets()) {
        auto span = invariant_forms(p.basis, amb);
        for (auto& q : span.basis) {
            CHECK(amb.contains(q));
            for (auto& x : p.basis) {
                Matrix D = d_rep(x);
                CHECK((D.transpose() * q.A + q.A * D).is_zero());
            }
        }
    }
}

TEST_CASE("invariant forms are preserved by exponentials of nilpotent elements") {
    auto amb = segre::i2_segre();
    for (auto& x : {t1(), t2(), q1()}) {
        auto span = invariant_forms(std::vector<LieElement>{x}, amb);
        CHECK(span.dim() > 0);
        Matrix D = d_rep(x);
        Matrix D2 = D * D, D3 = D2 * D, D4 = D3 * D, D5 = D4 * D;
        CHECK(D5.is_zero());
        for (int a : {1, 2, -3}) {
            QI al = a;
            Matrix E = Matrix::identity(9) + D * al + D2 * (al * al / 2) + D3 * (al * al * al / 6) + D4 * (al * al * al * al / 24);
            for (auto& q : span.basis) CHECK(E.transpose() * q.A * E == q.A);
        }
    }
}

TEST_CASE("invariant forms do not depend on the chosen basis") {
    auto amb = segre::i2_segre();
    std::mt19937_64 g(4);
    std::uniform_int_distribution<int> d(-3, 3);
    for (auto& p : presets()) {
        auto ref = invariant_forms(p.basis, amb);
        std::size_t n = p.basis.size();
        Matrix C(n, n);
        do
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) C(i, j) = d(g);
        while (determinant(C).is_zero());
        std::vector<LieElement> other(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) other[i] = other[i] + C(i, j) * p.basis[j];
        CHECK(invariant_forms(other, amb).same_span(ref));
    }
}

TEST_CASE("real bases") {
    auto amb = segre::i2_segre();
    auto L = iota_labels(9);
    auto a = invariant_forms(preset("so2xso2"), amb);
    auto ra = real_basis(a, 2);
    CHECK(ra.same_span(a));
    CHECK(ra.dim() == 4);

    auto iq = FormSpan::of({QuadraticForm(parse_form("y0^2-y1*y2", 'y', L).A * I, 'y', L)}, 'y', L);
    auto r0 = real_basis(iq, 0);
    REQUIRE(r0.dim() == 1);
    CHECK(proportional(r0.basis[0].coeffs(), parse_form("y0^2-y1*y2", 'y', L).coeffs()));
    CHECK(r0.basis[0].A.is_real());

    auto c = invariant_forms(preset("so2xse1"), amb);
    auto rc = real_basis(c, 1);
    CHECK(rc.dim() == 4);
    for (auto& q : rc.basis) {
        CHECK(segre::apply_sigma(1, q) == q);
        CHECK(!segre::mu_transform(1, q).complex_residue);
    }

    auto not_closed = FormSpan::parse({"y1^2-y5*y7"}, 'y', L);
    CHECK_THROWS_AS(real_basis(not_closed, 2), std::invalid_argument);
}
