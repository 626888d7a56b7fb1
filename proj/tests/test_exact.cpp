#include "celestial/exact.hpp"

#include "doctest.h"

#include <random>

using namespace celestial;

namespace {

Rational rnd_rational(std::mt19937_64& g) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    Rational q{mpz_class(num(g)), mpz_class(den(g))};
    q.canonicalize();
    return q;
}

QI rnd_qi(std::mt19937_64& g) { return {rnd_rational(g), rnd_rational(g)}; }

Matrix rnd_real(std::mt19937_64& g, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rnd_rational(g);
    return m;
}

}  // namespace

TEST_CASE("rationals stay reduced") {
    Rational q = parse_rational("6/-4");
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(to_string(parse_rational("10/5")) == "2");
    CHECK(is_perfect_square(parse_rational("9/4")));
    CHECK(!is_perfect_square(parse_rational("2")));
    CHECK(exact_sqrt(parse_rational("9/4")) == Rational(3, 2));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("gaussian parsing and printing") {
    CHECK(parse_gaussian("i") == QI::i());
    CHECK(parse_gaussian("-i") == -QI::i());
    CHECK(parse_gaussian("1/2-3/4i") == QI(Rational(1, 2), Rational(-3, 4)));
    CHECK(parse_gaussian("1+i") == QI(1, 1));
    for (const char* s : {"0", "3", "-1/2", "i", "2i", "1/2-3/4i", "-1+i"}) CHECK(parse_gaussian(to_string(parse_gaussian(s))) == parse_gaussian(s));
}

TEST_CASE("gaussian field laws on random triples") {
    std::mt19937_64 g(7);
    for (int k = 0; k < 200; ++k) {
        QI a = rnd_qi(g), b = rnd_qi(g), c = rnd_qi(g);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.norm() >= 0);
        CHECK((a.norm() == 0) == a.is_zero());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == QI(1));
            CHECK(b / a * a == b);
        }
    }
    CHECK(QI::i() * QI::i() == QI(-1));
}

TEST_CASE("kernel examples") {
    CHECK(kernel(Matrix::identity(3)).empty());
    CHECK(kernel(Matrix::zero(2, 2)).size() == 2);
    QI I = QI::i();
    Matrix m{{1, I}, {-I, 1}};
    auto k = kernel(m);
    REQUIRE(k.size() == 1);
    CHECK(is_zero(m * k[0]));
    CHECK(proportional(k[0], Vec{-I, 1}));
}

TEST_CASE("kernel vectors are annihilated and count cols - rank") {
    std::mt19937_64 g(11);
    for (int k = 0; k < 50; ++k) {
        std::size_t r = 1 + g() % 5, c = 1 + g() % 6;
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = g() % 3 == 0 ? QI(0) : rnd_qi(g);
        auto ker = kernel(m);
        CHECK(ker.size() == c - rank(m));
        for (auto& v : ker) CHECK(is_zero(m * v));
        CHECK(span_rank(ker) == ker.size());
    }
}

TEST_CASE("inverse and determinant") {
    Matrix m{{2, 1}, {1, 1}};
    CHECK(m * inverse(m) == Matrix::identity(2));
    CHECK(determinant(m) == QI(1));
    CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), std::domain_error);
}

TEST_CASE("span helpers") {
    std::vector<Vec> b{{1, 0, 1}, {0, 1, 1}};
    CHECK(in_span(b, Vec{2, 3, 5}));
    CHECK(!in_span(b, Vec{0, 0, 1}));
    CHECK(coordinates(b, Vec{2, 3, 5}) == Vec{2, 3});
    CHECK_THROWS(coordinates(b, Vec{0, 0, 1}));
    CHECK(same_span(b, {{1, 1, 2}, {1, -1, 0}}));
    CHECK(proportional(Vec{1, 2}, Vec{QI(0, 2), QI(0, 4)}));
    CHECK(!proportional(Vec{1, 2}, Vec{1, 3}));
}

TEST_CASE("congruence diagonalization examples") {
    auto c = congruence_diagonalize(Matrix{{1, 0}, {0, -1}});
    CHECK(c.D == Matrix{{1, 0}, {0, -1}});
    CHECK(c.P == Matrix::identity(2));

    Matrix h{{0, 1}, {1, 0}};
    auto ch = congruence_diagonalize(h);
    CHECK(ch.P.transpose() * h * ch.P == ch.D);
    CHECK(sgn(ch.D(0, 0).re()) * sgn(ch.D(1, 1).re()) == -1);

    // x1^2+x2^2+x3^2-x0x4-x0x5-x4x5
    Rational m(-1, 2);
    Matrix v{{0, 0, 0, 0, m, m}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
             {0, 0, 0, 1, 0, 0}, {m, 0, 0, 0, 0, m}, {m, 0, 0, 0, m, 0}};
    auto cv = congruence_diagonalize(v);
    CHECK(cv.P.transpose() * v * cv.P == cv.D);
    CHECK(determinant(cv.P) != QI(0));
    CHECK(signature(v) == Signature{1, 5, 0});

    CHECK_THROWS_AS(congruence_diagonalize(Matrix{{0, 1}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(congruence_diagonalize(Matrix{{QI::i(), 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("signature examples") {
    CHECK(signature(Matrix::identity(3)) == Signature{0, 3, 0});
    CHECK(signature(Matrix{{0, 1}, {1, 0}}) == Signature{1, 1, 0});
    CHECK(signature(Matrix::diagonal({1, 0, -1, -1})) == Signature{1, 2, 1});
    CHECK(to_string(Signature{1, 4, 0}) == "(1,4)");
    CHECK(to_string(Signature{1, 2, 1}) == "(1,2;1)");
}

TEST_CASE("signature is a congruence invariant and sums to the dimension") {
    std::mt19937_64 g(3);
    for (int k = 0; k < 60; ++k) {
        std::size_t n = 1 + g() % 6;
        Matrix b = rnd_real(g, n);
        Matrix a = b + b.transpose();
        if (k % 3 == 0)  // force a degenerate form
            for (std::size_t i = 0; i < n; ++i) a(i, n - 1) = a(n - 1, i) = 0;
        Signature s = signature(a);
        CHECK(std::size_t(s.pos + s.neg + s.zero) == n);
        CHECK(s.pos <= s.neg);
        Matrix q = rnd_real(g, n);
        if (determinant(q).is_zero()) continue;
        CHECK(signature(q.transpose() * a * q) == s);
        auto c = congruence_diagonalize(a);
        CHECK(c.P.transpose() * a * c.P == c.D);
    }
}
