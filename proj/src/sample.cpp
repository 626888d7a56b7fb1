#include "celestial/sample.hpp"

#include "celestial/geometry.hpp"
#include "celestial/liealg.hpp"
#include "celestial/segre.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace celestial::sample {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

double to_double(const QI& z) {
    if (!z.is_real()) throw std::logic_error("sample: non-real coefficient in a real frame");
    return z.re().get_d();
}

std::vector<Row> to_rows(const Matrix& m) {
    std::vector<Row> r(m.rows(), Row(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = to_double(m(i, j));
    return r;
}

std::vector<Row> chart_projection(std::size_t k, std::size_t w, std::array<std::size_t, 3> xyz) {
    std::vector<Row> p(4, Row(k, 0.0));
    p[0][w] = 1;
    for (int i = 0; i < 3; ++i) p[1 + i][xyz[i]] = 1;
    return p;
}

// Inverse of mu_2 restricted to the labels, as a complex matrix.
std::vector<std::vector<cplx>> mu2_inverse(const std::vector<int>& labels) {
    Matrix M = segre::mu_matrix(2);
    std::size_t n = labels.size();
    Matrix R(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) R(a, b) = M(labels[a], labels[b]);
    Matrix inv = inverse(R);
    std::vector<std::vector<cplx>> out(n, std::vector<cplx>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) out[a][b] = {inv(a, b).re().get_d(), inv(a, b).im().get_d()};
    return out;
}

Row toric_x(const std::vector<int>& labels, const std::vector<std::vector<cplx>>& minv, double th, double ph) {
    const auto& ex = segre::double_segre().exponents;
    std::vector<cplx> y;
    for (int l : labels) y.push_back(std::polar(1.0, ex[l].x * th + ex[l].y * ph));
    Row x(labels.size());
    for (std::size_t a = 0; a < labels.size(); ++a) {
        cplx s = 0;
        for (std::size_t b = 0; b < labels.size(); ++b) s += minv[a][b] * y[b];
        if (std::abs(s.imag()) > 1e-9 * (1 + std::abs(s.real()))) throw std::logic_error("sample: point is not real");
        x[a] = s.real();
    }
    return x;
}

std::vector<int> labels_without(const std::vector<int>& drop) {
    std::vector<int> l;
    for (int i = 0; i < 9; ++i) {
        bool d = false;
        for (int j : drop) d = d || i == j;
        if (!d) l.push_back(i);
    }
    return l;
}

}  // namespace

const std::vector<std::string>& surface_names() {
    static const std::vector<std::string> n{"dp6", "ring", "spindle", "horn", "veronese"};
    return n;
}

SurfaceModel surface_model(const std::string& name) {
    SurfaceModel m;
    m.name = name;
    if (name == "dp6" || name == "ring") {
        std::vector<int> drop = name == "dp6" ? std::vector<int>{5, 6} : std::vector<int>{5, 6, 7, 8};
        m.labels = labels_without(drop);
        m.quadrics = segre::mu_transform(2, liealg::real_basis(segre::toric_projection(drop).span, 2));
        m.projection = chart_projection(m.labels.size(), 0, {1, 2, 3});
    } else if (name == "spindle") {
        m.labels = {0, 1, 2, 3, 4};
        m.quadrics = geometry::cyclide_pipeline().spindle;
        m.projection = chart_projection(5, 0, {1, 2, 4});
        m.projection[0][3] = -1;  // x0 - x3
    } else if (name == "horn") {
        m.labels = {0, 3, 4, 6, 7};
        m.quadrics = geometry::cyclide_pipeline().horn;
        m.projection = chart_projection(5, 0, {2, 4, 3});
        m.projection[0][1] = 1;  // x0 + x3
    } else if (name == "veronese") {
        m.labels = iota_labels(6);
        m.quadrics = geometry::veronese_i2();
        m.quadrics.frame = 'x';
        for (auto& q : m.quadrics.basis) q.frame = 'x';
        m.projection = chart_projection(6, 0, {1, 2, 3});
    } else {
        throw std::invalid_argument("unknown surface '" + name + "'");
    }
    return m;
}

Cloud sample_surface(const std::string& surface, int resolution, const std::optional<std::vector<Row>>& proj) {
    if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
    SurfaceModel m = surface_model(surface);
    std::size_t k = m.labels.size();
    Cloud c;
    c.surface = surface;
    c.projection = m.projection;
    if (proj) {
        if (proj->size() != 3) throw std::invalid_argument("projection must have 3 rows");
        for (auto& r : *proj)
            if (r.size() != k) throw std::invalid_argument("projection must have " + std::to_string(k) + " columns for " + surface);
        c.projection.assign(1, Row(k, 0.0));
        c.projection[0][0] = 1;
        c.projection.insert(c.projection.end(), proj->begin(), proj->end());
    }
    std::vector<std::vector<Row>> Q;
    for (auto& q : m.quadrics.basis) Q.push_back(to_rows(q.A));
    std::vector<std::vector<cplx>> minv;
    if (surface == "dp6" || surface == "ring") minv = mu2_inverse(m.labels);

    for (int i = 0; i < resolution; ++i)
        for (int j = 0; j < resolution; ++j) {
            double th = 2 * kPi * i / resolution, ph = 2 * kPi * j / resolution;
            Row x;
            if (!minv.empty()) {
                x = toric_x(m.labels, minv, th, ph);
            } else if (surface == "veronese") {
                double s = std::cos(th) * std::cos(ph), t = std::sin(th) * std::cos(ph), u = std::sin(ph);
                x = {u * u, s * t, s * u, t * u, s * s, t * t};
            } else {
                // k = tan(ph/2); ph = 0 and ph = pi are the degenerate fibers
                double half = std::cos(ph / 2);
                double kk = std::sin(ph / 2) / half;
                if (std::abs(half) < 1e-9 || std::abs(kk) < 1e-9) {
                    ++c.skipped;
                    continue;
                }
                double cs = std::cos(th), sn = std::sin(th), ik = 1 / (2 * kk);
                if (surface == "spindle") x = {kk + ik, cs, sn, ik - kk, 1.0};
                else x = {-kk - ik, kk, 1.0, sn * ik, cs * ik};
            }
            double norm = 0;
            for (double v : x) norm += v * v;
            norm = std::sqrt(norm);
            for (auto& A : Q) {
                double r = 0;
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) r += A[a][b] * x[a] * x[b];
                c.max_residual = std::max(c.max_residual, std::abs(r) / (norm * norm));
            }
            if (proj) {
                if (std::abs(x[0]) < 1e-12) {
                    ++c.skipped;
                    continue;
                }
                double x0 = x[0];
                for (auto& v : x) v /= x0;
            }
            double h[4] = {0, 0, 0, 0};
            for (int r = 0; r < 4; ++r)
                for (std::size_t a = 0; a < k; ++a) h[r] += c.projection[r][a] * x[a];
            if (std::abs(h[0]) < 1e-12) {
                ++c.skipped;
                continue;
            }
            c.points.push_back({h[1] / h[0], h[2] / h[0], h[3] / h[0]});
        }
    return c;
}

std::vector<Row> parse_projection(std::istream& in) {
    std::vector<Row> rows;
    std::string line;
    while (std::getline(in, line)) {
        for (auto& ch : line)
            if (ch == ',') ch = ' ';
        std::istringstream ls(line);
        Row r;
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("projection: bad number '" + tok + "'");
            r.push_back(v);
        }
        if (!r.empty()) rows.push_back(std::move(r));
    }
    if (rows.size() != 3) throw std::invalid_argument("projection: expected 3 rows");
    for (auto& r : rows)
        if (r.size() != rows[0].size()) throw std::invalid_argument("projection: ragged rows");
    return rows;
}

void write_csv(std::ostream& out, const Cloud& c) {
    out << "x,y,z\n";
    char buf[128];
    for (auto& p : c.points) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", p[0], p[1], p[2]);
        out << buf;
    }
}

void write_ply(std::ostream& out, const Cloud& c) {
    out << "ply\nformat ascii 1.0\ncomment surface " << c.surface << "\nelement vertex " << c.points.size()
        << "\nproperty double x\nproperty double y\nproperty double z\nend_header\n";
    char buf[128];
    for (auto& p : c.points) {
        std::snprintf(buf, sizeof buf, "%.12g %.12g %.12g\n", p[0], p[1], p[2]);
        out << buf;
    }
}

}  // namespace celestial::sample
