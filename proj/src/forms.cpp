#include "celestial/forms.hpp"

#include "celestial/lattice.hpp"
#include "celestial/liealg.hpp"
#include "celestial/segre.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace celestial::forms {

namespace {

const std::string kPSO2xPSO2 = "PSO(2)×PSO(2)";

std::vector<int> dropped_labels(const std::vector<int>& I) {
    std::vector<int> d;
    for (int i : I) {
        d.push_back(i);
        d.push_back(i + 1);
    }
    return d;
}

// Dimension of the subspace of span whose members avoid the dropped coordinates.
std::size_t supported_dimension(const FormSpan& span, const std::vector<int>& drop) {
    std::size_t n = span.labels.size();
    std::vector<std::size_t> bad;  // monomial positions touching a dropped coordinate
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j, ++k) {
            bool hit = std::find(drop.begin(), drop.end(), span.labels[i]) != drop.end() ||
                       std::find(drop.begin(), drop.end(), span.labels[j]) != drop.end();
            if (hit) bad.push_back(k);
        }
    auto vs = span.coeff_vectors();
    if (bad.empty()) return vs.size();
    Matrix sys(bad.size(), vs.size());
    for (std::size_t r = 0; r < bad.size(); ++r)
        for (std::size_t c = 0; c < vs.size(); ++c) sys(r, c) = vs[c][bad[r]];
    return kernel(sys).size();
}

// Degree of the toric image: normalized area of the hull relative to the
// lattice spanned by the exponent differences (a 2:1 map halves it).
long image_degree(const std::vector<lattice::Point>& ex) {
    long g = 0;
    for (std::size_t a = 1; a < ex.size(); ++a)
        for (std::size_t b = a + 1; b < ex.size(); ++b) {
            long cross = (ex[a].x - ex[0].x) * (ex[b].y - ex[0].y) - (ex[a].y - ex[0].y) * (ex[b].x - ex[0].x);
            g = std::gcd(g, std::abs(cross));
        }
    return lattice::twice_area(lattice::convex_hull(ex)) / g;
}

Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    long a = 0;
    while (a == 0) a = num(rng);
    Rational q(mpz_class(a), mpz_class(den(rng)));
    q.canonicalize();
    return q;
}

// Random element of SL2(Q) with all entries nonzero.
Matrix random_sl2(std::mt19937_64& rng) {
    for (;;) {
        Rational a = small_rational(rng), b = small_rational(rng), c = small_rational(rng);
        Rational d = (1 + b * c) / a;
        if (sgn(d) != 0) return Matrix{{a, b}, {c, d}};
    }
}

}  // namespace

std::string lambda_str(int lambda) { return lambda == kInfinity ? "inf" : std::to_string(lambda); }

nlohmann::json to_json(const CelestialRecord& r) {
    nlohmann::json j;
    j["name"] = r.name;
    nlohmann::json l = r.type.lambda == kInfinity ? nlohmann::json("inf") : nlohmann::json(r.type.lambda);
    j["type"] = nlohmann::json::array({l, r.type.degree, r.type.n});
    j["singular"] = r.singular;
    j["group"] = r.group;
    j["moduli_dim"] = r.moduli_dim;
    j["moebius_equals_aut"] = r.moebius_equals_aut;
    return j;
}

FamilyCoeffs parse_coeffs(const std::string& csv) {
    FamilyCoeffs c;
    std::stringstream ss(csv);
    std::string item;
    std::size_t k = 0;
    while (std::getline(ss, item, ',')) {
        if (k >= 4) throw std::invalid_argument("expected four coefficients c1,c3,c5,c7");
        c[k++] = parse_rational(item);
    }
    if (k != 4) throw std::invalid_argument("expected four coefficients c1,c3,c5,c7");
    return c;
}

FormSpan family_span() {
    return FormSpan::parse({"y0^2-y1*y2", "y0^2-y3*y4", "y0^2-y5*y6", "y0^2-y7*y8"}, 'y', iota_labels(9));
}

QuadraticForm family_form(const FamilyCoeffs& c, char frame) {
    FormSpan f = family_span();
    Matrix A(9, 9);
    for (std::size_t k = 0; k < 4; ++k) A += f.basis[k].A * QI(c[k]);
    QuadraticForm q(A, 'y', iota_labels(9));
    if (frame == 'y') return q;
    if (frame == 'x') return segre::mu_transform(2, q).form;
    throw std::invalid_argument("frame must be y or x");
}

SingularSupport singular_support(const FamilyCoeffs& c) {
    int sign = 0;
    SingularSupport s;
    for (std::size_t k = 0; k < 4; ++k) {
        int sg = sgn(c[k]);
        if (sg == 0) {
            s.I.push_back(kFamilyIndex[k]);
            continue;
        }
        if (sign != 0 && sg != sign) throw std::invalid_argument("mixed-sign coefficients do not give a Moebius quadric");
        sign = sg;
    }
    if (sign == 0) throw std::invalid_argument("all coefficients vanish");
    if (s.I.size() > 2) throw std::invalid_argument("more than two vanishing coefficients leave no surface");
    s.center_dim = static_cast<int>(kernel(family_form(c, 'x').A).size()) - 1;
    return s;
}

CelestialRecord classify_family(const FamilyCoeffs& c) {
    SingularSupport ss = singular_support(c);
    QuadraticForm qx = family_form(c, 'x');
    int n = static_cast<int>(rank(qx.A)) - 2;

    auto drop = dropped_labels(ss.I);
    auto proj = segre::toric_projection(drop);
    long d = image_degree(proj.param.exponents);

    const auto& so2 = liealg::presets()[1].basis;
    FormSpan inv = liealg::invariant_forms(so2, segre::i2_segre());
    int D = static_cast<int>(supported_dimension(inv, drop)) - 1;

    CelestialRecord r;
    r.group = kPSO2xPSO2;
    r.singular = "∅";
    r.moduli_dim = D;
    const auto& I = ss.I;
    if (I.empty()) {
        r.name = "double Segre surface";
        r.type = {2, 8, 7};
        r.moebius_equals_aut = false;
    } else if (I.size() == 1 && (I[0] == 1 || I[0] == 3)) {
        r.name = "projected dS";
        r.type = {2, 8, 5};
        r.moebius_equals_aut = false;
    } else if (I.size() == 1) {
        r.name = "dP6";
        r.type = {3, 6, 5};
        r.moebius_equals_aut = true;
    } else {
        r.name = "ring cyclide";
        r.type = {4, 4, 3};
        r.singular = "A₁+A₁+A₁+A₁";
        r.moebius_equals_aut = true;
    }
    if (r.type.n != n || r.type.degree != d) {
        std::ostringstream os;
        os << "classify_family: recomputed (d,n) = (" << d << "," << n << ") disagrees with the case table";
        throw std::logic_error(os.str());
    }
    return r;
}

std::vector<CelestialRecord> fixed_records() {
    return {
        {"Veronese surface", {kInfinity, 4, 4}, "∅", "PSO(3)", 0, false},
        {"spindle cyclide", {2, 4, 3}, "A̲₁+A̲₁+A₁+A₁", "PSO(2)×PSX(1)", 0, true},
        {"horn cyclide", {2, 4, 3}, "A̲₃+A₁+A₁", "PSO(2)×PSE(1)", 0, true},
        {"2-sphere", {kInfinity, 2, 2}, "∅", "PSO(3,1)", 0, true},
    };
}

FixedRecordCheck fixed_record_check() {
    const auto& p = liealg::presets();
    auto x_span = [](const liealg::AlgebraPreset& g) {
        FormSpan y = liealg::invariant_forms(g.basis, segre::i2_segre());
        FormSpan real = liealg::real_basis(y, 1);
        FormSpan x{'x', real.labels, {}};
        bool all_real = true;
        for (auto& q : real.basis) {
            auto m = segre::mu_transform(1, q);
            all_real = all_real && !m.complex_residue;
            x.basis.push_back(m.form);
        }
        return std::make_pair(x, all_real);
    };
    FixedRecordCheck out;
    auto [xs, rs] = x_span(p[2]);
    FormSpan spindle = FormSpan::parse({"x0^2-x1^2-x2^2", "x0^2-x3*x4", "x5*x6-x7*x8", "x0^2-x5*x7-x6*x8"}, 'x', iota_labels(9));
    out.spindle_span = rs && xs.same_span(spindle);
    auto [xh, rh] = x_span(p[3]);
    FormSpan horn = FormSpan::parse({"x0^2-x3*x4", "x4^2-x6^2-x7^2", "x1*x6-x2*x7", "x1^2+x2^2-x5*x7-x6*x8"}, 'x', iota_labels(9));
    out.horn_span = rh && xh.same_span(horn);
    return out;
}

RigidityReport rigidity_sample_check(const FamilyCoeffs& c, const FamilyCoeffs& c2, int trials, std::uint64_t seed,
                                     int threads) {
    FormSpan F = family_span();
    auto Fv = F.coeff_vectors();
    Matrix A = family_form(c, 'y').A;
    Vec cv(c.begin(), c.end()), c2v(c2.begin(), c2.end());

    struct Outcome {
        bool left = false, stayed = false, matches_target = false;
    };
    std::vector<Outcome> res(static_cast<std::size_t>(std::max(trials, 0)));
    auto run = [&](std::size_t k) {
        std::seed_seq sq{seed, static_cast<std::uint64_t>(k)};
        std::mt19937_64 rng(sq);
        Matrix S = segre::rep_S({random_sl2(rng), random_sl2(rng)});
        Vec img = QuadraticForm(S.transpose() * A * S, 'y', iota_labels(9)).coeffs();
        res[k].left = !in_span(Fv, img);
        Rational a = small_rational(rng), b = small_rational(rng);
        Matrix T = segre::rep_S({Matrix::diagonal({QI(a), QI(Rational(1 / a))}), Matrix::diagonal({QI(b), QI(Rational(1 / b))})});
        Vec timg = QuadraticForm(T.transpose() * A * T, 'y', iota_labels(9)).coeffs();
        if (in_span(Fv, timg)) {
            Vec coords = coordinates(Fv, timg);
            res[k].stayed = proportional(coords, cv);
            res[k].matches_target = proportional(coords, c2v);
        }
    };
    threads = std::max(1, threads);
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t k = w; k < res.size(); k += threads) run(k);
        });
    for (auto& t : pool) t.join();

    RigidityReport r;
    r.trials = trials;
    bool target = !res.empty();
    for (auto& o : res) {
        r.left_span += o.left;
        r.torus_stayed += o.stayed;
        target = target && o.matches_target;
    }
    r.torus_matches_target = target;
    r.passed = trials > 0 && r.left_span == trials && r.torus_stayed == trials && target == proportional(cv, c2v);
    return r;
}

std::pair<Signature, Signature> corollary_iqf_check() {
    auto labels = iota_labels(9);
    auto q0 = parse_form("2x0^2-2x1*x2-2x3*x4+x5*x6+x7*x8", 'x', labels);
    auto q3 = parse_form("2x0^2-4x2*x3-4x1*x4+x5*x6+x7^2+x8^2", 'x', labels);
    return {signature(q0.A), signature(q3.A)};
}

}  // namespace celestial::forms
