#include "celestial/verify.hpp"

#include "celestial/forms.hpp"
#include "celestial/geometry.hpp"
#include "celestial/lattice.hpp"
#include "celestial/liealg.hpp"
#include "celestial/sample.hpp"
#include "celestial/segre.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace celestial::verify {

namespace {

using Group = std::function<void(const Options&, std::vector<Entry>&)>;

struct Recorder {
    std::vector<Entry>& out;
    const Criterion& c;
    void operator()(const std::string& name, bool pass, const std::string& detail = "") {
        out.push_back({c.id + "." + name, c.id, c.ref, pass, detail});
    }
};

const Criterion& criterion(const std::string& id) {
    for (auto& c : criteria())
        if (c.id == id) return c;
    throw std::logic_error("unknown criterion " + id);
}

template <class F>
void guarded(Recorder& rec, const std::string& name, F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        rec(name, false, std::string("exception: ") + e.what());
    }
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    Rational rational(long span = 20, long den = 10) {
        std::uniform_int_distribution<long> n(-span, span), d(1, den);
        Rational q{mpz_class(n(g_)), mpz_class(d(g_))};
        q.canonicalize();
        return q;
    }
    Rational nonzero() {
        for (;;) {
            Rational q = rational();
            if (sgn(q) != 0) return q;
        }
    }
    QI gaussian() { return QI(rational(), rational()); }
    Matrix gl2() {
        for (;;) {
            Matrix m{{QI(rational()), QI(rational())}, {QI(rational()), QI(rational())}};
            if (!determinant(m).is_zero()) return m;
        }
    }
    Matrix traceless() {
        QI a = gaussian();
        return Matrix{{a, gaussian()}, {gaussian(), QI() - a}};
    }
    liealg::LieElement lie() { return {traceless(), traceless()}; }
    Matrix symmetric(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = QI(rational());
        return m;
    }
    Matrix invertible(std::size_t n) {
        for (;;) {
            Matrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = QI(rational(3, 3));
            if (!determinant(m).is_zero()) return m;
        }
    }

private:
    std::mt19937_64 g_;
};

// ---------------------------------------------------------------------------

void lemma_i2(const Options& opt, std::vector<Entry>& out) {
    Recorder rec{out, criterion("lemma-i2")};
    const std::map<char, int> expected{{'a', 20}, {'b', 9}, {'c', 9}, {'d', 6}, {'e', 2}, {'f', 2}, {'g', 2}, {'h', 1}};
    for (auto [tag, want] : expected) {
        std::string name(1, tag);
        guarded(rec, name, [&] {
            int got = segre::i2_dimension_check(tag, opt.seed);
            rec(name, got == want, "L." + name + ": nullity " + std::to_string(got) + ", expected " + std::to_string(want));
        });
    }
}

void thm_d(const Options&, std::vector<Entry>& out) {
    Recorder rec{out, criterion("thm-d")};
    const auto& p = liealg::presets();
    auto labels = iota_labels(9);
    auto i2 = segre::i2_segre();
    FormSpan family = FormSpan::parse({"y0^2-y1*y2", "y0^2-y3*y4", "y0^2-y5*y6", "y0^2-y7*y8"}, 'y', labels);

    guarded(rec, "iqf-a", [&] {
        FormSpan y = liealg::invariant_forms(p[1].basis, i2);
        FormSpan x = segre::mu_transform(2, liealg::real_basis(y, 2));
        FormSpan xp = FormSpan::parse({"1/4x0^2-x1^2-x2^2", "1/4x0^2-x3^2-x4^2", "1/4x0^2-x5^2-x6^2", "1/4x0^2-x7^2-x8^2"},
                                      'x', labels);
        bool ok = y.same_span(family) && x.same_span(xp);
        rec("iqf-a", ok, "<i s1, i s2>, sigma_2: dim " + std::to_string(y.dim()));
    });
    auto fixed = forms::fixed_record_check();
    guarded(rec, "iqf-b", [&] {
        FormSpan y = liealg::invariant_forms(p[2].basis, i2);
        rec("iqf-b", y.same_span(family) && fixed.spindle_span, "<i s1, s2>, sigma_1: dim " + std::to_string(y.dim()));
    });
    guarded(rec, "iqf-c", [&] {
        FormSpan y = liealg::invariant_forms(p[3].basis, i2);
        FormSpan yp = FormSpan::parse({"y0^2-y3*y4", "y4^2-y6*y7", "y1*y6-y2*y7", "2y1*y2-y5*y6-y7*y8"}, 'y', labels);
        rec("iqf-c", y.same_span(yp) && fixed.horn_span, "<i s1, t2>, sigma_1: dim " + std::to_string(y.dim()));
    });
    guarded(rec, "iqf-d", [&] {
        FormSpan y = liealg::invariant_forms(p[0].basis, i2);
        FormSpan yp = FormSpan::parse({"2y0^2-2y1*y2-2y3*y4+y5*y6+y7*y8"}, 'y', labels);
        FormSpan x0 = segre::mu_transform(0, liealg::real_basis(y, 0));
        FormSpan x3 = segre::mu_transform(3, liealg::real_basis(y, 3));
        FormSpan x0p = FormSpan::parse({"2x0^2-2x1*x2-2x3*x4+x5*x6+x7*x8"}, 'x', labels);
        FormSpan x3p = FormSpan::parse({"2x0^2-4x2*x3-4x1*x4+x5*x6+x7^2+x8^2"}, 'x', labels);
        bool ok = y.dim() == 1 && y.same_span(yp) && x0.same_span(x0p) && x3.same_span(x3p);
        rec("iqf-d", ok, "sl2+sl2: dim " + std::to_string(y.dim()) + " (sigma_0 and sigma_3 frames)");
    });
    guarded(rec, "vero-so3", [&] {
        auto q = geometry::so3_invariant_form();
        auto want = parse_form("x1^2+x2^2+x3^2-x0*x4-x0*x5-x4*x5", 'x', iota_labels(6));
        rec("vero-so3", proportional(q.coeffs(), want.coeffs()), q.str());
    });
    guarded(rec, "vero-sl3", [&] {
        auto s = geometry::veronese_invariant_forms(geometry::sl3::full());
        rec("vero-sl3", s.dim() == 0, "full sl3: dim " + std::to_string(s.dim()));
    });
}

void thm_m(const Options&, std::vector<Entry>& out) {
    Recorder rec{out, criterion("thm-m")};
    struct Case {
        std::string c;
        forms::CelestialRecord want;
    };
    const std::string g = "PSO(2)×PSO(2)";
    forms::CelestialRecord r1{"double Segre surface", {2, 8, 7}, "∅", g, 3, false};
    forms::CelestialRecord r2{"projected dS", {2, 8, 5}, "∅", g, 2, false};
    forms::CelestialRecord r3{"dP6", {3, 6, 5}, "∅", g, 2, true};
    forms::CelestialRecord r5{"ring cyclide", {4, 4, 3}, "A₁+A₁+A₁+A₁", g, 1, true};
    const std::vector<Case> cases{
        {"1,1,1,1", r1}, {"-1,-2,-3,-4", r1}, {"0,1,2,3", r2}, {"2,0,1,1", r2}, {"1,1,0,1", r3}, {"3,1,2,0", r3},
        {"0,0,1,1", r5}, {"0,1,0,1", r5}, {"0,1,1,0", r5}, {"1,0,0,1", r5}, {"1,0,1,0", r5}, {"1,1,0,0", r5},
    };
    for (auto& cs : cases) {
        std::string name = "c=" + cs.c;
        guarded(rec, name, [&] {
            auto got = forms::classify_family(forms::parse_coeffs(cs.c));
            std::ostringstream d;
            d << got.name << " (" << forms::lambda_str(got.type.lambda) << "," << got.type.degree << "," << got.type.n
              << ") D=" << got.moduli_dim;
            rec(name, got == cs.want, d.str());
        });
    }
    guarded(rec, "reject", [&] {
        int rejected = 0;
        for (const char* bad : {"1,-1,1,1", "0,0,0,1", "0,0,0,0"}) {
            try {
                forms::classify_family(forms::parse_coeffs(bad));
            } catch (const std::invalid_argument&) {
                ++rejected;
            }
        }
        rec("reject", rejected == 3, "mixed-sign, |I|=3 and zero inputs rejected: " + std::to_string(rejected) + "/3");
    });
}

void cor_iqf(const Options&, std::vector<Entry>& out) {
    Recorder rec{out, criterion("cor-iqf")};
    guarded(rec, "signatures", [&] {
        auto [a, b] = forms::corollary_iqf_check();
        bool ok = a == Signature{4, 5, 0} && b == Signature{3, 6, 0};
        rec("signatures", ok, "X0: " + to_string(a) + ", X3: " + to_string(b));
    });
}

void lattice_group(const Options&, std::vector<Entry>& out) {
    Recorder rec{out, criterion("lattice")};
    guarded(rec, "classes", [&] {
        auto g = lattice::classify_grid();
        std::ostringstream d;
        d << g.polygons.size() << " polygons, " << g.raw.size() << " raw classes, " << g.merged.size() << " named";
        bool named = std::all_of(g.raw.begin(), g.raw.end(), [](auto& c) { return c.name != "unmatched"; });
        rec("classes", g.raw.size() == 10 && g.merged.size() == 8 && named, d.str());

        struct Want {
            std::string name;
            long interior, boundary, degree;
            std::set<std::string> arrows;
        };
        const std::map<std::string, Want> want{
            {"L.a", {"dS", 1, 8, 8, {"→", "↓"}}},
            {"L.b", {"dP6", 1, 6, 6, {"→", "↓", "↘"}}},
            {"L.c", {"weak dP6", 1, 6, 6, {"→", "↓"}}},
            {"L.d", {"Veronese", 0, 6, 4, {"→", "↓", "↘"}}},
            {"L.e", {"ring cyclide", 1, 4, 4, {"→", "↓", "↙", "↘"}}},
            {"L.f", {"spindle cyclide", 1, 4, 4, {"→", "↓"}}},
            {"L.g", {"horn cyclide", 1, 4, 4, {"→", "↓"}}},
            {"L.h", {"2-sphere", 0, 4, 2, {"↙", "↘"}}},
        };
        std::set<std::string> seen;
        for (auto& c : g.merged) {
            auto it = want.find(c.table_ref);
            if (it == want.end()) {
                rec("row-" + c.table_ref, false, "unexpected class " + c.name);
                continue;
            }
            seen.insert(c.table_ref);
            std::set<std::string> arr;
            for (auto& dir : c.type.directions) arr.insert(lattice::arrow(dir));
            const Want& w = it->second;
            bool ok = c.name == w.name && c.counts.interior == w.interior && c.counts.boundary == w.boundary &&
                      c.degree == w.degree && arr == w.arrows;
            std::ostringstream dd;
            dd << c.name << ": i=" << c.counts.interior << " b=" << c.counts.boundary << " d=" << c.degree << " "
               << lattice::arrows(c.type.directions) << " (" << c.members.size() << " grid pairs)";
            rec("row-" + c.table_ref, ok, dd.str());
        }
        rec("rows-complete", seen.size() == want.size(), std::to_string(seen.size()) + "/8 named rows present");
    });
    guarded(rec, "width", [&] {
        auto hex = lattice::make_polygon({{-1, 1}, {0, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, 0}});
        long a = lattice::width(hex, {1, -1}), b = lattice::width(hex, {1, 1});
        rec("width", a == 2 && b == 4, "↘: " + std::to_string(a) + ", ↙: " + std::to_string(b));
    });
}

void cyclides(const Options&, std::vector<Entry>& out) {
    Recorder rec{out, criterion("cyclides")};
    guarded(rec, "spans", [&] {
        auto got = geometry::cyclide_pipeline();
        auto want = geometry::cyclide_printed();
        rec("spindle-span", got.spindle.same_span(want.spindle), got.spindle.basis[0].str() + "; " + got.spindle.basis[1].str());
        rec("horn-span", got.horn.same_span(want.horn), got.horn.basis[0].str() + "; " + got.horn.basis[1].str());
        rec("sphere-member", geometry::has_sphere_member(got.spindle) && geometry::has_sphere_member(got.horn),
            "both pencils contain a form of signature (1,4)");
    });
    guarded(rec, "stereographic", [&] {
        auto r = geometry::stereographic_check();
        std::ostringstream d;
        d << r.checked << " samples per surface, " << r.skipped << " degenerate skipped (k=0); cone "
          << (r.cone ? "ok" : "fail") << ", cylinder " << (r.cylinder ? "ok" : "fail") << ", on surfaces "
          << (r.on_surfaces ? "ok" : "fail");
        rec("stereographic", r.passed() && r.checked == 42 && r.skipped == 7, d.str());
    });
}

void dynkin_group(const Options&, std::vector<Entry>& out) {
    Recorder rec{out, criterion("dynkin")};
    const std::map<char, std::string> want{{'a', "∅"},
                                           {'b', "∅"},
                                           {'c', "A̲₁"},
                                           {'d', "A₁+A₁+A₁+A₁"},
                                           {'e', "A̲₁+A̲₁+A₁+A₁"},
                                           {'f', "A̲₃+A₁+A₁"}};
    for (auto& [tag, s] : want) {
        std::string name(1, tag);
        guarded(rec, name, [&] {
            std::string got = geometry::dynkin(geometry::b_classes(geometry::blowup_config(tag)));
            rec(name, got == s, "config " + name + ": " + got);
        });
    }
}

void veronese(const Options& opt, std::vector<Entry>& out) {
    Recorder rec{out, criterion("veronese")};
    guarded(rec, "witnesses", [&] {
        auto w = geometry::veronese_signature_witnesses(opt.threads);
        std::ostringstream d;
        bool first = true;
        for (auto& [p, n] : w) {
            d << (first ? "" : " ") << "(" << p << "," << n << ")";
            first = false;
        }
        bool ok = true;
        for (std::pair<std::size_t, std::size_t> s : {std::pair<std::size_t, std::size_t>{1, 2}, {1, 3}, {1, 5}, {2, 2}, {3, 3}})
            ok = ok && w.count(s);
        rec("witnesses", ok, d.str());
    });
    guarded(rec, "so3-signature", [&] {
        Signature s = signature(geometry::so3_invariant_form().A);
        rec("so3-signature", s == Signature{1, 5, 0}, to_string(s));
    });
}

void properties(const Options& opt, std::vector<Entry>& out) {
    Recorder rec{out, criterion("properties")};
    Rng rng(opt.seed);
    guarded(rec, "rep-homomorphism", [&] {
        int ok = 0;
        for (int t = 0; t < 20; ++t) {
            segre::Pair g{rng.gl2(), rng.gl2()}, h{rng.gl2(), rng.gl2()};
            segre::Pair gh{g.first * h.first, g.second * h.second};
            ok += segre::rep_S(gh) == segre::rep_S(g) * segre::rep_S(h);
        }
        rec("rep-homomorphism", ok == 20, std::to_string(ok) + "/20 pairs");
    });
    guarded(rec, "bracket", [&] {
        int ok = 0;
        for (int t = 0; t < 20; ++t) {
            auto x = rng.lie(), y = rng.lie();
            Matrix dx = liealg::d_rep(x), dy = liealg::d_rep(y);
            ok += liealg::d_rep(liealg::bracket(x, y)) == dx * dy - dy * dx;
        }
        rec("bracket", ok == 20, std::to_string(ok) + "/20 pairs");
    });
    guarded(rec, "nilpotent-exp", [&] {
        int checked = 0, ok = 0;
        auto i2 = segre::i2_segre();
        for (auto& sub : liealg::classification_list()) {
            FormSpan inv = liealg::invariant_forms(sub.basis, i2);
            for (auto& n : sub.basis) {
                Matrix l2 = n.left * n.left, r2 = n.right * n.right;
                if (!l2.is_zero() || !r2.is_zero()) continue;
                QI c(rng.nonzero());
                Matrix S = segre::rep_S({Matrix::identity(2) + n.left * c, Matrix::identity(2) + n.right * c});
                for (auto& q : inv.basis) {
                    ++checked;
                    ok += S.transpose() * q.A * S == q.A;
                }
            }
        }
        rec("nilpotent-exp", checked > 0 && ok == checked, std::to_string(ok) + "/" + std::to_string(checked) + " forms");
    });
    guarded(rec, "congruence", [&] {
        int ok = 0;
        for (int t = 0; t < 20; ++t) {
            std::size_t n = 3 + t % 5;
            Matrix A = rng.symmetric(n), P = rng.invertible(n);
            ok += signature(P.transpose() * A * P) == signature(A);
        }
        rec("congruence", ok == 20, std::to_string(ok) + "/20 congruences");
    });
    guarded(rec, "pick", [&] {
        auto g = lattice::classify_grid();
        std::size_t ok = 0;
        for (auto& p : g.polygons) {
            auto c = lattice::lattice_counts(p);
            ok += lattice::twice_area(p) == 2 * c.interior + c.boundary - 2;
        }
        rec("pick", ok == g.polygons.size(), std::to_string(ok) + "/" + std::to_string(g.polygons.size()) + " polygons");
    });
    guarded(rec, "sigma-involution", [&] {
        int ok = 0, total = 0;
        for (int i = 0; i < 4; ++i)
            for (int t = 0; t < 5; ++t) {
                Vec v(9);
                for (auto& z : v) z = rng.gaussian();
                Matrix A(9, 9);
                for (std::size_t a = 0; a < 9; ++a)
                    for (std::size_t b = a; b < 9; ++b) A(a, b) = A(b, a) = rng.gaussian();
                QuadraticForm q(A, 'y', iota_labels(9));
                auto m = rng.lie();
                total += 3;
                ok += segre::apply_sigma(i, segre::apply_sigma(i, v)) == v;
                ok += segre::apply_sigma(i, segre::apply_sigma(i, q)) == q;
                ok += liealg::lie_sigma(i, liealg::lie_sigma(i, m)) == m;
            }
        rec("sigma-involution", ok == total, std::to_string(ok) + "/" + std::to_string(total));
    });
}

void rigidity(const Options& opt, std::vector<Entry>& out) {
    Recorder rec{out, criterion("rigidity")};
    guarded(rec, "same", [&] {
        auto c = forms::parse_coeffs("1,2,3,4");
        auto r = forms::rigidity_sample_check(c, forms::parse_coeffs("2,4,6,8"), 100, opt.seed, opt.threads);
        std::ostringstream d;
        d << r.left_span << "/" << r.trials << " left the family, " << r.torus_stayed << "/" << r.trials
          << " torus images fixed, target c'=2c " << (r.torus_matches_target ? "matched" : "not matched");
        rec("same", r.passed, d.str());
    });
    guarded(rec, "distinct", [&] {
        auto r = forms::rigidity_sample_check(forms::parse_coeffs("1,2,3,4"), forms::parse_coeffs("1,2,3,5"), 100,
                                              opt.seed + 1, opt.threads);
        std::ostringstream d;
        d << r.left_span << "/" << r.trials << " left the family, " << r.torus_stayed << "/" << r.trials
          << " torus images fixed, target c'=(1,2,3,5) " << (r.torus_matches_target ? "matched" : "not matched");
        rec("distinct", r.passed, d.str());
    });
}

void sample_group(const Options&, std::vector<Entry>& out) {
    Recorder rec{out, criterion("sample")};
    const std::vector<std::pair<std::string, int>> runs{{"dp6", 100}, {"ring", 4}, {"spindle", 50}, {"horn", 50}, {"veronese", 40}};
    for (auto& [s, n] : runs) {
        guarded(rec, s, [&] {
            auto c = sample::sample_surface(s, n, std::nullopt);
            std::ostringstream d;
            d << c.points.size() << " points at resolution " << n << ", " << c.skipped << " skipped, max residual "
              << std::setprecision(3) << c.max_residual;
            bool count = static_cast<int>(c.points.size()) + c.skipped == n * n;
            rec(s, c.max_residual < 1e-9 && count && !c.points.empty(), d.str());
        });
    }
    // Projected spindle and horn clouds against the exactly fitted cone and cylinder.
    guarded(rec, "cone-cylinder", [&] {
        auto exact = geometry::stereographic_check();
        auto num = [](const QI& z) { return z.re().get_d(); };
        double worst = 0;
        for (auto& p : sample::sample_surface("spindle", 50, std::nullopt).points) {
            double r = num(exact.cone_coeffs[0]) * (p[0] * p[0] + p[1] * p[1]) + num(exact.cone_coeffs[1]) * p[2] * p[2];
            worst = std::max(worst, std::abs(r) / (1 + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]));
        }
        for (auto& p : sample::sample_surface("horn", 50, std::nullopt).points) {
            const Vec& c = exact.cylinder_coeffs;
            double r = num(c[0]) * (p[1] * p[1] + p[2] * p[2]) + num(c[1]) * p[1] + num(c[2]) * p[2] + num(c[3]);
            worst = std::max(worst, std::abs(r) / (1 + p[1] * p[1] + p[2] * p[2]));
        }
        std::ostringstream d;
        d << "max relative residual " << std::setprecision(3) << worst;
        rec("cone-cylinder", exact.passed() && worst < 1e-9, d.str());
    });
}

const std::vector<std::pair<std::string, Group>>& groups() {
    static const std::vector<std::pair<std::string, Group>> g{
        {"lemma-i2", lemma_i2}, {"thm-d", thm_d},         {"thm-m", thm_m},       {"cor-iqf", cor_iqf},
        {"lattice", lattice_group}, {"cyclides", cyclides}, {"dynkin", dynkin_group}, {"veronese", veronese},
        {"properties", properties}, {"rigidity", rigidity}, {"sample", sample_group},
    };
    return g;
}

}  // namespace

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> c{
        {1, "lemma-i2", "Lemma I2", "quadric ideal dimensions of the eight lattice types"},
        {2, "thm-d", "Lemma iqf, Lemma iqf-vero", "invariant quadratic forms"},
        {3, "thm-m", "Thm M", "classification of the torus-invariant family"},
        {4, "cor-iqf", "Cor. iqf", "signatures of the sl2+sl2 invariant forms"},
        {5, "lattice", "Prop. L, Table L, Fig. width", "lattice polygon classification"},
        {6, "cyclides", "Example spindle-horn", "spindle and horn cyclides"},
        {7, "dynkin", "Thm circle, Table P1P1", "singularity types of the blowup configurations"},
        {8, "veronese", "Lemma vero-pair", "signatures on the Veronese surface"},
        {9, "properties", "invariants", "seeded property checks"},
        {10, "rigidity", "Lemma M1", "uniqueness within the family (sampled, not a proof)"},
        {11, "sample", "Fig. dP6", "point cloud residuals"},
    };
    return c;
}

std::size_t Report::passed() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const Entry& e) { return e.pass; }));
}

std::size_t Report::failed() const { return entries.size() - passed(); }

std::vector<std::pair<Criterion, bool>> Report::criteria_status() const {
    std::vector<std::pair<Criterion, bool>> out;
    for (auto& c : criteria()) {
        bool any = false, all = true;
        for (auto& e : entries)
            if (e.group == c.id) {
                any = true;
                all = all && e.pass;
            }
        if (any) out.push_back({c, all});
    }
    return out;
}

Report run(const Options& opt) {
    Report r;
    bool matched = false;
    for (auto& [id, fn] : groups()) {
        bool group_match = opt.only.empty() || opt.only == id;
        bool prefix_match = !opt.only.empty() && opt.only.rfind(id + ".", 0) == 0;
        if (!group_match && !prefix_match) continue;
        std::vector<Entry> entries;
        fn(opt, entries);
        for (auto& e : entries)
            if (group_match || e.check_id == opt.only) {
                r.entries.push_back(e);
                matched = true;
            }
    }
    if (!matched) throw std::invalid_argument("no check matches '" + opt.only + "'");
    return r;
}

void print_table(std::ostream& out, const Report& r) {
    std::size_t w = 8;
    for (auto& e : r.entries) w = std::max(w, e.check_id.size());
    for (auto& e : r.entries)
        out << (e.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(w)) << e.check_id << "  ["
            << e.paper_ref << "]  " << e.detail << "\n";
    out << "\n";
    for (auto& [c, ok] : r.criteria_status())
        out << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << "  " << c.id << "  " << c.title << "\n";
    out << "\n" << r.passed() << " passed, " << r.failed() << " failed\n";
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json j;
    j["entries"] = nlohmann::json::array();
    for (auto& e : r.entries)
        j["entries"].push_back({{"check_id", e.check_id},
                                {"paper_ref", e.paper_ref},
                                {"status", e.pass ? "pass" : "fail"},
                                {"detail", e.detail}});
    j["criteria"] = nlohmann::json::array();
    for (auto& [c, ok] : r.criteria_status())
        j["criteria"].push_back({{"number", c.number}, {"id", c.id}, {"status", ok ? "pass" : "fail"}});
    j["summary"] = {{"passed", r.passed()}, {"failed", r.failed()}};
    return j;
}

}  // namespace celestial::verify
