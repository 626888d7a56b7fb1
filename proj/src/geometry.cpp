#include "celestial/geometry.hpp"

#include "celestial/liealg.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace celestial::geometry {

namespace {

NSClass pair_class(int fiber, int i, int j) {
    NSClass c{};
    c[fiber] = 1;
    c[1 + i] = -1;
    c[1 + j] = -1;
    return c;
}

const char* kSub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};

Rational frac(long a, long b) {
    Rational q{mpz_class(a), mpz_class(b)};
    q.canonicalize();
    return q;
}

// Point of the unit circle, rational in a.
std::pair<Rational, Rational> circle_point(const Rational& a) {
    Rational d = 1 + a * a;
    return {(1 - a * a) / d, 2 * a / d};
}

FormSpan transform_span(const FormSpan& z, const Matrix& R, const std::vector<Rational>& sq) {
    FormSpan out{'x', z.labels, {}};
    for (auto& q : z.basis) {
        auto m = segre::mu_transform(1, q);
        Matrix B = scale_by_roots(m.form.A, sq);
        out.basis.emplace_back(R.transpose() * B * R, 'x', z.labels);
    }
    return out;
}

// Fits a single linear relation among the feature rows: rows are added until
// the kernel is one-dimensional, then all rows are tested against it.
bool fit_relation(const std::vector<Vec>& rows, Vec& coeffs) {
    if (rows.empty()) return false;
    std::size_t nf = rows[0].size();
    std::vector<Vec> used;
    for (auto& r : rows) {
        if (span_rank(used) == nf - 1) break;
        auto next = used;
        next.push_back(r);
        if (span_rank(next) > span_rank(used)) used = std::move(next);
    }
    Matrix M(used.size(), nf);
    for (std::size_t i = 0; i < used.size(); ++i)
        for (std::size_t j = 0; j < nf; ++j) M(i, j) = used[i][j];
    auto ker = kernel(M);
    if (ker.size() != 1) return false;
    coeffs = ker[0];
    for (auto& r : rows) {
        QI s;
        for (std::size_t j = 0; j < nf; ++j) s += r[j] * coeffs[j];
        if (!s.is_zero()) return false;
    }
    return true;
}

}  // namespace

long ns_product(const NSClass& a, const NSClass& b) {
    long s = a[0] * b[1] + a[1] * b[0];
    for (int i = 2; i < 6; ++i) s -= a[i] * b[i];
    return s;
}

NSClass ns_sigma(const NSClass& a) { return {a[0], a[1], a[3], a[2], a[5], a[4]}; }

std::string ns_label(const NSClass& c) {
    static const char* names[] = {"l0", "l1", "e1", "e2", "e3", "e4"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 6; ++i) {
        if (c[i] == 0) continue;
        if (c[i] < 0) os << "-";
        else if (!first) os << "+";
        if (std::abs(c[i]) != 1) os << std::abs(c[i]);
        os << names[i];
        first = false;
    }
    return first ? "0" : os.str();
}

const std::vector<BlowupConfig>& blowup_configs() {
    static const std::vector<BlowupConfig> c{
        {'a', 0, {}, {}, {}},
        {'b', 2, {}, {}, {}},
        {'c', 2, {}, {{1, 2}}, {}},
        {'d', 4, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}, {}},
        {'e', 4, {{1, 3}, {2, 4}}, {{1, 2}, {3, 4}}, {}},
        {'f', 4, {{1, 3}, {2, 4}}, {{1, 2}}, {{1, 3}, {2, 4}}},
    };
    return c;
}

const BlowupConfig& blowup_config(char tag) {
    for (auto& c : blowup_configs())
        if (c.tag == tag) return c;
    throw std::invalid_argument(std::string("unknown blowup configuration ") + tag);
}

NSClass anticanonical(const BlowupConfig& cfg) {
    NSClass k{2, 2, 0, 0, 0, 0};
    for (int i = 1; i <= cfg.points; ++i) k[1 + i] = -1;
    return k;
}

std::vector<NSClass> b_classes(const BlowupConfig& cfg) {
    std::vector<NSClass> out;
    for (auto [i, j] : cfg.pi1_shared) out.push_back(pair_class(0, i, j));
    for (auto [i, j] : cfg.pi2_shared) out.push_back(pair_class(1, i, j));
    for (auto [i, j] : cfg.near) {
        NSClass c{};
        c[1 + i] = 1;
        c[1 + j] = -1;
        out.push_back(c);
    }
    for (auto& c : out)
        for (int i = cfg.points + 1; i <= 4; ++i)
            if (c[1 + i] != 0) throw std::invalid_argument("configuration refers to a missing blowup point");
    std::sort(out.begin(), out.end());
    return out;
}

std::string dynkin(const std::vector<NSClass>& B) {
    std::size_t n = B.size();
    if (n == 0) return "∅";
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < n; ++w)
                if (comp[w] < 0 && ns_product(B[v], B[w]) > 0) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
        }
        ++nc;
    }
    std::vector<std::pair<bool, int>> parts;  // (underlined, rank)
    for (int c = 0; c < nc; ++c) {
        std::vector<NSClass> members;
        for (std::size_t v = 0; v < n; ++v)
            if (comp[v] == c) members.push_back(B[v]);
        std::size_t edges = 0;
        for (std::size_t a = 0; a < members.size(); ++a) {
            int deg = 0;
            for (std::size_t b = 0; b < members.size(); ++b) {
                if (a == b) continue;
                long p = ns_product(members[a], members[b]);
                if (p > 1) throw std::invalid_argument("dynkin: multiple edge");
                if (p > 0) ++deg;
            }
            if (deg > 2) throw std::invalid_argument("dynkin: branched component");
            edges += deg;
        }
        if (edges / 2 != members.size() - 1) throw std::invalid_argument("dynkin: component is not a chain");
        bool invariant = true;
        for (auto& m : members)
            if (std::find(members.begin(), members.end(), ns_sigma(m)) == members.end()) invariant = false;
        parts.push_back({invariant, static_cast<int>(members.size())});
    }
    std::sort(parts.begin(), parts.end(), [](auto& x, auto& y) {
        if (x.first != y.first) return x.first;
        return x.second > y.second;
    });
    std::string out;
    for (auto& [u, r] : parts) {
        if (!out.empty()) out += "+";
        out += "A";
        if (u) out += "\u0332";
        if (r >= 10) throw std::invalid_argument("dynkin: rank too large");
        out += kSub[r];
    }
    return out;
}

CyclideSpans cyclide_pipeline() {
    Matrix Rs(5, 5), Rh(5, 5);
    Rs(0, 4) = 1;
    Rs(1, 1) = 1;
    Rs(2, 2) = 1;
    Rs(3, 0) = 1, Rs(3, 3) = -1;
    Rs(4, 0) = 1, Rs(4, 3) = 1;
    Rh(0, 2) = 1;
    Rh(1, 1) = 1;
    Rh(2, 0) = -1, Rh(2, 1) = -1;
    Rh(3, 3) = 1;
    Rh(4, 4) = 1;
    Rational h = frac(1, 2);
    auto zs = segre::toric_projection({5, 6, 7, 8}).span;
    auto zh = segre::toric_projection({1, 2, 5, 8}).span;
    return {transform_span(zs, Rs, {1, 1, 1, h, h}), transform_span(zh, Rh, {h, 1, 1, 1, 1})};
}

CyclideSpans cyclide_printed() {
    return {FormSpan::parse({"x1^2+x2^2-x4^2", "x0^2-x3^2-2x4^2"}, 'x', {0, 1, 2, 3, 4}),
            FormSpan::parse({"x4^2+2x0*x3+2x3^2", "x0^2+2x0*x3+x3^2-x6^2-x7^2"}, 'x', {0, 3, 4, 6, 7})};
}

bool has_sphere_member(const FormSpan& span) {
    if (span.dim() != 2) throw std::invalid_argument("has_sphere_member: expected a pencil");
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            if (a == 0 && b == 0) continue;
            Matrix A = span.basis[0].A * QI(a) + span.basis[1].A * QI(b);
            if (!A.is_real()) continue;
            if (signature(A) == Signature{1, 4, 0}) return true;
        }
    return false;
}

Vec spindle_point(const Rational& a, const Rational& k) {
    if (sgn(k) == 0) throw std::invalid_argument("spindle_point: k must be nonzero");
    auto [c, s] = circle_point(a);
    Rational ik = 1 / (2 * k);
    return {QI(Rational(k + ik)), QI(c), QI(s), QI(Rational(ik - k)), QI(1)};
}

Vec horn_point(const Rational& a, const Rational& k) {
    if (sgn(k) == 0) throw std::invalid_argument("horn_point: k must be nonzero");
    auto [c, s] = circle_point(a);
    Rational ik = 1 / (2 * k);
    return {QI(Rational(-k - ik)), QI(k), QI(1), QI(Rational(s * ik)), QI(Rational(c * ik))};
}

StereoReport stereographic_check() {
    StereoReport r;
    auto spans = cyclide_pipeline();
    std::vector<Vec> cone_rows, cyl_rows;
    bool on = true;
    for (long ai = -3; ai <= 3; ++ai)
        for (long ki = -3; ki <= 3; ++ki) {
            if (ki == 0) {
                ++r.skipped;  // k = 0 is the contracted fiber through the projection center
                continue;
            }
            ++r.checked;
            Rational a(ai), k(ki);
            Vec ps = spindle_point(a, k), ph = horn_point(a, k);
            for (auto& q : spans.spindle.basis) on = on && q.eval(ps).is_zero();
            for (auto& q : spans.horn.basis) on = on && q.eval(ph).is_zero();
            // (x0-x3 : x1 : x2 : x4), affine chart x0-x3 = 1
            QI w = ps[0] - ps[3];
            QI X = ps[1] * w.inverse(), Y = ps[2] * w.inverse(), Z = ps[4] * w.inverse();
            cone_rows.push_back({X * X + Y * Y, Z * Z});
            // (x0+x3 : x4 : x7 : x6) in labels (0,3,4,6,7), chart x0+x3 = 1
            QI v = ph[0] + ph[1];
            QI Yh = ph[4] * v.inverse(), Zh = ph[3] * v.inverse();
            cyl_rows.push_back({Yh * Yh + Zh * Zh, Yh, Zh, QI(1)});
        }
    r.on_surfaces = on;
    r.cone = fit_relation(cone_rows, r.cone_coeffs);
    if (r.cone) {
        // circular: the two coefficients have opposite signs
        Rational p = r.cone_coeffs[0].re() * r.cone_coeffs[1].re();
        r.cone = r.cone_coeffs[0].is_real() && r.cone_coeffs[1].is_real() && sgn(p) < 0;
    }
    r.cylinder = fit_relation(cyl_rows, r.cylinder_coeffs);
    if (r.cylinder) {
        const Vec& c = r.cylinder_coeffs;
        bool real = std::all_of(c.begin(), c.end(), [](const QI& z) { return z.is_real(); });
        // a != 0 and positive squared radius
        r.cylinder = real && !c[0].is_zero() &&
                     sgn(Rational(c[1].re() * c[1].re() + c[2].re() * c[2].re() - 4 * c[0].re() * c[3].re())) > 0;
    }
    return r;
}

const segre::MonomialParam& veronese_param() {
    static const segre::MonomialParam p{{{0, 0}, {1, 1}, {1, 0}, {0, 1}, {2, 0}, {0, 2}}, iota_labels(6)};
    return p;
}

FormSpan veronese_i2() {
    return FormSpan::parse({"y1*y1-y4*y5", "y0*y1-y2*y3", "y2*y2-y0*y4", "y3*y3-y0*y5", "y1*y2-y3*y4", "y1*y3-y2*y5"},
                           'y', iota_labels(6));
}

namespace sl3 {
Matrix a(int k) {
    static const int pos[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    if (k < 1 || k > 3) throw std::invalid_argument("sl3::a index must be 1..3");
    Matrix m(3, 3);
    m(pos[k - 1][0], pos[k - 1][1]) = 1;
    return m;
}
Matrix b(int k) { return a(k).transpose(); }
Matrix c(int k) {
    if (k == 1) return Matrix::diagonal({QI(1), QI(-1), QI(0)});
    if (k == 2) return Matrix::diagonal({QI(0), QI(1), QI(-1)});
    throw std::invalid_argument("sl3::c index must be 1..2");
}
std::vector<Matrix> so3() { return {b(1) - a(1), b(2) - a(2), b(3) - a(3)}; }
std::vector<Matrix> full() { return {a(1), a(2), a(3), b(1), b(2), b(3), c(1), c(2)}; }
}  // namespace sl3

Matrix veronese_d(const Matrix& m) {
    // (s,t,u) = indices (0,1,2); coordinates u^2, st, su, tu, s^2, t^2
    static const std::pair<int, int> mono[6] = {{2, 2}, {0, 1}, {0, 2}, {1, 2}, {0, 0}, {1, 1}};
    auto index = [](int i, int j) {
        if (i > j) std::swap(i, j);
        for (int k = 0; k < 6; ++k)
            if (mono[k].first == i && mono[k].second == j) return k;
        throw std::logic_error("veronese_d: bad monomial");
    };
    Matrix D(6, 6);
    for (int k = 0; k < 6; ++k) {
        auto [i, j] = mono[k];
        // d(v_i v_j) = (m v)_i v_j + v_i (m v)_j
        for (int l = 0; l < 3; ++l) {
            D(k, index(l, j)) += m(i, l);
            D(k, index(i, l)) += m(j, l);
        }
    }
    return D;
}

FormSpan veronese_invariant_forms(const std::vector<Matrix>& algebra) {
    std::vector<Matrix> Ds;
    for (auto& m : algebra) Ds.push_back(veronese_d(m));
    FormSpan out = liealg::invariant_forms(Ds, veronese_i2());
    out.frame = 'x';
    for (auto& q : out.basis) q.frame = 'x';
    return out;
}

QuadraticForm so3_invariant_form() {
    FormSpan s = veronese_invariant_forms(sl3::so3());
    if (s.dim() != 1) throw std::logic_error("so3_invariant_form: expected a one-dimensional space");
    return s.basis[0];
}

std::set<std::pair<std::size_t, std::size_t>> veronese_signature_witnesses(int threads) {
    FormSpan w = veronese_i2();
    const int total = 729;  // 3^6
    std::set<std::pair<std::size_t, std::size_t>> found;
    std::mutex mu;
    threads = std::max(1, threads);
    auto shard = [&](int w0) {
        std::set<std::pair<std::size_t, std::size_t>> local;
        for (int code = w0; code < total; code += threads) {
            Matrix A(6, 6);
            int c = code;
            bool any = false;
            for (std::size_t g = 0; g < 6; ++g, c /= 3) {
                int coef = c % 3 - 1;
                if (coef == 0) continue;
                any = true;
                A += w.basis[g].A * QI(coef);
            }
            if (!any) continue;
            Signature sg = signature(A);
            local.insert({static_cast<std::size_t>(sg.pos), static_cast<std::size_t>(sg.neg)});
        }
        std::lock_guard<std::mutex> lock(mu);
        found.insert(local.begin(), local.end());
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(shard, t);
    for (auto& t : pool) t.join();
    return found;
}

}  // namespace celestial::geometry
