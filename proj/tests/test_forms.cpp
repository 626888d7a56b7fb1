#include "celestial/forms.hpp"
#include "celestial/liealg.hpp"
#include "celestial/segre.hpp"

#include "doctest.h"

using namespace celestial;
using namespace celestial::forms;

namespace {

FamilyCoeffs co(long a, long b, long c, long d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }

// Expected (lambda, degree, n) by the set of vanishing coefficients.
CelestialType expected_type(const FamilyCoeffs& c) {
    std::vector<int> I;
    for (int k = 0; k < 4; ++k)
        if (sgn(c[k]) == 0) I.push_back(kFamilyIndex[k]);
    if (I.empty()) return {2, 8, 7};
    if (I.size() == 2) return {4, 4, 3};
    if (I[0] == 1 || I[0] == 3) return {2, 8, 5};
    return {3, 6, 5};
}

}  // namespace

TEST_CASE("coefficient parsing") {
    CHECK(parse_coeffs("1,1,0,1") == co(1, 1, 0, 1));
    CHECK(parse_coeffs("1/2, 3, 0, 1") == FamilyCoeffs{Rational(1, 2), 3, 0, 1});
    CHECK_THROWS_AS(parse_coeffs("1,1,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_coeffs("1,x,1,1"), std::invalid_argument);
}

TEST_CASE("family forms in the x-frame") {
    auto L = iota_labels(9);
    CHECK(family_form(co(1, 1, 1, 1), 'x').A == Matrix::diagonal({1, -1, -1, -1, -1, -1, -1, -1, -1}));
    CHECK(signature(family_form(co(1, 1, 1, 1), 'x').A) == Signature{1, 8, 0});
    CHECK(family_form(co(1, 0, 0, 0), 'x') == parse_form("1/4 x0^2 - x1^2 - x2^2", 'x', L));
    CHECK(rank(family_form(co(1, 0, 0, 0), 'x').A) == 3);
    Rational h(1, 2);
    CHECK(family_form(co(0, 1, 0, 1), 'x').A == Matrix::diagonal({h, 0, 0, -1, -1, 0, 0, -1, -1}));
    CHECK(signature(family_form(co(0, 1, 0, 1), 'x').A) == Signature{1, 4, 4});
    CHECK(family_form(co(1, 1, 1, 1), 'y') == parse_form("4y0^2 - y1*y2 - y3*y4 - y5*y6 - y7*y8", 'y', L));
    CHECK(family_span().dim() == 4);
}

TEST_CASE("singular support") {
    auto s = singular_support(co(1, 1, 1, 1));
    CHECK(s.I.empty());
    CHECK(s.center_dim == -1);
    s = singular_support(co(0, 1, 1, 1));
    CHECK(s.I == std::vector<int>{1});
    CHECK(s.center_dim == 1);
    s = singular_support(co(0, 1, 0, 1));
    CHECK(s.I == std::vector<int>{1, 5});
    CHECK(s.center_dim == 3);
    // the kernel of the x-form is spanned by the dropped coordinates
    auto ker = kernel(family_form(co(0, 1, 1, 1), 'x').A);
    CHECK(ker.size() == 2);
    for (auto& v : ker)
        for (int k : {0, 3, 4, 5, 6, 7, 8}) CHECK(v[k].is_zero());
    CHECK_THROWS_AS(singular_support(co(0, 0, 0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(singular_support(co(1, -1, 1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(singular_support(co(0, 0, 0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(classify_family(co(1, -1, 1, 1)), std::invalid_argument);
}

TEST_CASE("classification examples") {
    auto r = classify_family(co(1, 1, 1, 1));
    CHECK(r.type == CelestialType{2, 8, 7});
    CHECK(r.singular == "∅");
    CHECK(r.group == "PSO(2)×PSO(2)");
    CHECK(r.moduli_dim == 3);
    CHECK(!r.moebius_equals_aut);

    r = classify_family(co(1, 1, 0, 1));
    CHECK(r.type == CelestialType{3, 6, 5});
    CHECK(r.singular == "∅");
    CHECK(r.moduli_dim == 2);
    CHECK(r.moebius_equals_aut);

    r = classify_family(co(0, 1, 0, 1));
    CHECK(r.type == CelestialType{4, 4, 3});
    CHECK(r.moduli_dim == 1);
    CHECK(r.moebius_equals_aut);

    r = classify_family(co(0, 1, 1, 1));
    CHECK(r.type == CelestialType{2, 8, 5});
    CHECK(r.moduli_dim == 2);
    CHECK(!r.moebius_equals_aut);

    CHECK(classify_family(co(0, 0, 1, 1)).type == CelestialType{4, 4, 3});

    auto j = to_json(classify_family(co(1, 1, 1, 1)));
    CHECK(j["type"] == nlohmann::json::array({2, 8, 7}));
    CHECK(j["moduli_dim"] == 3);
    CHECK(j["moebius_equals_aut"] == false);
}

TEST_CASE("records are constant on support classes and scale invariant") {
    const long vals[] = {0, 1, 2, 5};
    int tested = 0;
    for (long a : vals)
        for (long b : vals)
            for (long c : vals)
                for (long d : vals) {
                    auto cf = co(a, b, c, d);
                    int zeros = (a == 0) + (b == 0) + (c == 0) + (d == 0);
                    if (zeros > 2) continue;
                    ++tested;
                    auto r = classify_family(cf);
                    CHECK(r.type == expected_type(cf));
                    auto pattern = co(a != 0, b != 0, c != 0, d != 0);
                    CHECK(r == classify_family(pattern));
                    FamilyCoeffs scaled = cf, neg = cf;
                    for (int k = 0; k < 4; ++k) scaled[k] *= Rational(3, 7), neg[k] = -neg[k];
                    CHECK(r == classify_family(scaled));
                    CHECK(r == classify_family(neg));
                    auto x = family_form(cf, 'x');
                    int nonzero = 4 - zeros;
                    CHECK(signature(x.A) == Signature{1, 2 * nonzero, 8 - 2 * nonzero});
                    CHECK(long(rank(x.A)) - 2 == r.type.n);
                }
    CHECK(tested == 243);
}

TEST_CASE("fixed records") {
    auto recs = fixed_records();
    REQUIRE(recs.size() == 4);
    auto find = [&](const std::string& n) {
        for (auto& r : recs)
            if (r.name == n) return r;
        throw std::out_of_range(n);
    };
    CHECK(find("spindle cyclide").group == "PSO(2)×PSX(1)");
    CHECK(find("horn cyclide").singular == "A̲₃+A₁+A₁");
    auto s = find("2-sphere");
    CHECK(s.type == CelestialType{kInfinity, 2, 2});
    CHECK(s.singular == "∅");
    CHECK(s.group == "PSO(3,1)");
    CHECK(s.moduli_dim == 0);
    CHECK(to_json(s)["type"][0] == "inf");
    auto chk = fixed_record_check();
    CHECK(chk.spindle_span);
    CHECK(chk.horn_span);
}

TEST_CASE("rigidity sample check") {
    auto same = rigidity_sample_check(co(1, 2, 3, 4), co(2, 4, 6, 8), 20, 1);
    CHECK(same.passed);
    CHECK(same.torus_matches_target);
    CHECK(same.left_span == 20);
    auto other = rigidity_sample_check(co(1, 2, 3, 4), co(1, 2, 3, 5), 20, 1);
    CHECK(other.passed);
    CHECK(!other.torus_matches_target);
    auto threaded = rigidity_sample_check(co(1, 2, 3, 4), co(1, 2, 3, 5), 20, 1, 3);
    CHECK(threaded.left_span == other.left_span);
    CHECK(threaded.torus_stayed == other.torus_stayed);

    // the unipotent element exp(t1) moves the form off the family
    auto q = family_form(co(1, 1, 1, 1), 'y');
    Matrix S = segre::rep_S({Matrix{{1, 1}, {0, 1}}, Matrix::identity(2)});
    CHECK(!family_span().contains(q.pullback(S, 'y', q.labels)));
    // the torus element A(2) keeps it, with the same coefficients
    Matrix A = segre::rep_S({Matrix::diagonal({2, Rational(1, 2)}), Matrix::identity(2)});
    CHECK(q.pullback(A, 'y', q.labels) == q);
}

TEST_CASE("corollary forms") {
    auto [s0, s3] = corollary_iqf_check();
    CHECK(s0 == Signature{4, 5, 0});
    CHECK(s3 == Signature{3, 6, 0});
    // both come from the sl2+sl2-invariant form through mu_0 and mu_3
    auto L = iota_labels(9);
    auto d = liealg::invariant_forms(liealg::presets()[0].basis, segre::i2_segre());
    REQUIRE(d.dim() == 1);
    auto x0 = segre::mu_transform(0, liealg::real_basis(d, 0));
    auto x3 = segre::mu_transform(3, liealg::real_basis(d, 3));
    CHECK(proportional(x0.basis[0].coeffs(), parse_form("2x0^2-2x1*x2-2x3*x4+x5*x6+x7*x8", 'x', L).coeffs()));
    CHECK(proportional(x3.basis[0].coeffs(), parse_form("2x0^2-4x2*x3-4x1*x4+x5*x6+x7^2+x8^2", 'x', L).coeffs()));
}
