#include "celestial/liealg.hpp"
#include "celestial/segre.hpp"

#include "doctest.h"

#include <map>
#include <random>
#include <set>

using namespace celestial;
using namespace celestial::segre;

namespace {

Rational frac(long a, long b) {
    Rational q{mpz_class(a), mpz_class(b)};
    q.canonicalize();
    return q;
}

// Dimension of the degree-2 part of the toric ideal: monomials minus distinct exponent sums.
std::size_t toric_i2_oracle(const MonomialParam& p) {
    std::set<std::pair<long, long>> sums;
    std::size_t n = p.exponents.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) sums.insert({p.exponents[i].x + p.exponents[j].x, p.exponents[i].y + p.exponents[j].y});
    return n * (n + 1) / 2 - sums.size();
}

void check_vanishes_on_grid(const FormSpan& span, const MonomialParam& p) {
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            QI s = a == 0 ? QI(frac(1, 5)) : QI(a), u = b == 0 ? QI(frac(-2, 7)) : QI(frac(b, 2));
            Vec y = eval_param(p, s, u);
            for (auto& q : span.basis) CHECK(q.eval(y).is_zero());
        }
}

Pair random_pair(std::mt19937_64& g) {
    std::uniform_int_distribution<int> d(-4, 4);
    auto m = [&] {
        while (true) {
            Matrix a{{d(g), d(g)}, {d(g), d(g)}};
            if (!determinant(a).is_zero()) return a;
        }
    };
    return {m(), m()};
}

}  // namespace

TEST_CASE("parametrization examples") {
    const auto& p = double_segre();
    CHECK(eval_param(p, 1, 1) == Vec(9, QI(1)));
    Rational h(1, 2);
    CHECK(eval_param(p, 2, 1) == Vec{1, 2, h, 1, 1, 2, h, 2, h});
    CHECK_THROWS_AS(eval_param(p, 0, 1), std::invalid_argument);
    for (int a = 1; a < 4; ++a)
        for (int b = 1; b < 4; ++b) CHECK(projectively_equal(eval_lift(p, a, 1, b, 1), eval_param(p, a, b)));
    CHECK(projectively_equal(eval_lift(p, 2, 3, 5, 7), eval_param(p, QI(frac(2, 3)), QI(frac(5, 7)))));
}

TEST_CASE("the 20 quadrics vanish on the double Segre surface") {
    auto span = i2_segre();
    CHECK(span.dim() == 20);
    CHECK(toric_i2_oracle(double_segre()) == 20);
    Vec y = eval_param(double_segre(), 3, 5);
    for (auto& q : span.basis) CHECK(q.eval(y).is_zero());
    check_vanishes_on_grid(span, double_segre());
    CHECK(eval_param(double_segre(), QI(1, 2), QI(frac(1, 3), -1)).size() == 9);
    for (auto& q : span.basis) CHECK(q.eval(eval_param(double_segre(), QI(1, 2), QI(frac(1, 3), -1))).is_zero());
}

TEST_CASE("real structures on points") {
    const auto& p = double_segre();
    QI s = 2, u = parse_gaussian("-1+3i");
    CHECK(projectively_equal(apply_sigma(0, eval_param(p, s, u)), eval_param(p, s.conj(), u.conj())));
    CHECK(projectively_equal(apply_sigma(1, eval_param(p, s, u)), eval_param(p, s.conj().inverse(), u.conj())));
    CHECK(projectively_equal(apply_sigma(2, eval_param(p, s, u)), eval_param(p, s.conj().inverse(), u.conj().inverse())));
    CHECK(projectively_equal(apply_sigma(3, eval_param(p, 2, 5)), eval_param(p, 5, 2)));
    CHECK(projectively_equal(apply_sigma(3, eval_param(p, s, u)), eval_param(p, u.conj(), s.conj())));
    for (int i = 0; i < 4; ++i) {
        Vec y = eval_param(p, s, u);
        CHECK(apply_sigma(i, apply_sigma(i, y)) == y);
        const auto& perm = sigma_perm(i);
        for (int k = 0; k < 9; ++k) CHECK(perm[perm[k]] == k);
    }
}

TEST_CASE("real structures on forms") {
    auto q = parse_form("y0^2-y1*y2", 'y', iota_labels(9));
    CHECK(apply_sigma(0, q) == q);
    auto span = i2_segre();
    for (int i = 0; i < 4; ++i) {
        CHECK(apply_sigma(i, span).same_span(span));
        for (auto& g : span.basis) CHECK(apply_sigma(i, apply_sigma(i, g)) == g);
    }
}

TEST_CASE("frame changes") {
    auto L = iota_labels(9);
    auto q = parse_form("y0^2-y1*y2", 'y', L);
    auto r = mu_transform(2, q);
    CHECK(!r.complex_residue);
    CHECK(r.form == parse_form("1/4 x0^2 - x1^2 - x2^2", 'x', L));
    CHECK(mu_transform(0, q).form.A == q.A);

    auto sum = parse_form("4 y0^2 - y1*y2 - y3*y4 - y5*y6 - y7*y8", 'y', L);
    CHECK(mu_transform(2, sum).form ==
          parse_form("x0^2 - x1^2 - x2^2 - x3^2 - x4^2 - x5^2 - x6^2 - x7^2 - x8^2", 'x', L));

    for (int i = 0; i < 4; ++i) {
        CHECK(determinant(mu_matrix(i)) != QI(0));
        // sigma_i-real forms become real in the x-frame
        auto x = mu_transform(i, liealg::real_basis(i2_segre(), i));
        CHECK(x.dim() == 20);
        CHECK(span_rank(x.coeff_vectors()) == 20);
        for (auto& f : x.basis) CHECK(f.A.is_real());
    }
}

TEST_CASE("frame change is linear") {
    auto L = iota_labels(9);
    auto a = parse_form("y0^2-y1*y2", 'y', L), b = parse_form("y0*y5-y1*y3", 'y', L);
    QI c = parse_gaussian("2-i");
    QuadraticForm comb{a.A * c + b.A, 'y', L};
    for (int i = 0; i < 4; ++i)
        CHECK(mu_transform(i, comb).form.A == mu_transform(i, a).form.A * c + mu_transform(i, b).form.A);
}

TEST_CASE("Sym2 x Sym2 action") {
    CHECK(rep_S({Matrix::identity(2), Matrix::identity(2)}) == Matrix::identity(9));
    Rational q(1, 4);
    CHECK(rep_S({Matrix::diagonal({2, Rational(1, 2)}), Matrix::identity(2)}) == Matrix::diagonal({1, 4, q, 1, 1, 4, q, 4, q}));
    CHECK_THROWS(rep_S({Matrix{{1, 1}, {1, 1}}, Matrix::identity(2)}));

    std::mt19937_64 g(5);
    auto span = i2_segre();
    for (int k = 0; k < 10; ++k) {
        Pair a = random_pair(g), b = random_pair(g);
        CHECK(rep_S({a.first * b.first, a.second * b.second}) == rep_S(a) * rep_S(b));
        Matrix S = rep_S(a);
        for (auto& f : span.basis) CHECK(span.contains(f.pullback(S, 'y', f.labels)));
    }
}

TEST_CASE("Sym2 x Sym2 action moves the parametrization along the torus") {
    // a diagonal pair (diag(a,1), diag(b,1)) maps xi(s,u) to xi(a s, b u)
    const auto& p = double_segre();
    Matrix S = rep_S({Matrix::diagonal({3, 1}), Matrix::diagonal({Rational(1, 2), 1})});
    CHECK(projectively_equal(S * eval_param(p, 2, 5), eval_param(p, 6, Rational(5, 2))));
}

TEST_CASE("toric projections") {
    auto dp6 = toric_projection({5, 6});
    CHECK(dp6.param.exponents.size() == 7);
    CHECK(dp6.span.dim() == 9);

    auto zs = toric_projection({5, 6, 7, 8});
    CHECK(zs.span.same_span(FormSpan::parse({"y0^2-y1*y2", "y0^2-y3*y4"}, 'y', zs.param.labels)));
    auto zh = toric_projection({1, 2, 5, 8});
    CHECK(zh.param.labels == std::vector<int>{0, 3, 4, 6, 7});
    CHECK(zh.span.same_span(FormSpan::parse({"y0^2-y3*y4", "y4^2-y6*y7"}, 'y', zh.param.labels)));

    for (auto drop : std::vector<std::vector<int>>{{5, 6}, {5, 6, 7, 8}, {1, 2, 5, 8}, {6}, {5, 6, 7}, {1, 2, 3, 4}}) {
        auto pr = toric_projection(drop);
        CHECK(pr.span.dim() == toric_i2_oracle(pr.param));
        check_vanishes_on_grid(pr.span, pr.param);
    }
    CHECK_THROWS_AS(toric_projection({1, 2, 5, 6, 7, 8}), std::invalid_argument);
}

TEST_CASE("ideal dimensions of the lattice-type rows") {
    const std::map<char, int> expected{{'a', 20}, {'b', 9}, {'c', 9}, {'d', 6}, {'e', 2}, {'f', 2}, {'g', 2}, {'h', 1}};
    for (auto [tag, dim] : expected) {
        CHECK(i2_dimension_check(tag) == dim);
        CHECK(i2_dimension_check(tag, 99) == dim);
    }
    for (auto& row : lattice::reference_rows())
        if (row.table_ref.size() == 3)
            CHECK(std::size_t(i2_dimension(param_for_polygon(row.type.polygon), 3)) == toric_i2_oracle(param_for_polygon(row.type.polygon)));
}
