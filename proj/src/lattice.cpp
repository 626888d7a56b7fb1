#include "celestial/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace celestial::lattice {

namespace {

long cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

long gcd_abs(long a, long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

long coordinate_span(const Polygon& p) {
    long x0 = p.vertices[0].x, x1 = x0, y0 = p.vertices[0].y, y1 = y0;
    for (auto& v : p.vertices) {
        x0 = std::min(x0, v.x);
        x1 = std::max(x1, v.x);
        y0 = std::min(y0, v.y);
        y1 = std::max(y1, v.y);
    }
    return std::max(x1 - x0, y1 - y0);
}

// 0 outside, 1 on boundary, 2 strictly inside.
int locate(const Polygon& p, const Point& q) {
    bool on = false;
    std::size_t n = p.vertices.size();
    for (std::size_t k = 0; k < n; ++k) {
        long c = cross(p.vertices[k], p.vertices[(k + 1) % n], q);
        if (c < 0) return 0;
        if (c == 0) on = true;
    }
    return on ? 1 : 2;
}

std::set<Point> vertex_set(const Polygon& p) { return {p.vertices.begin(), p.vertices.end()}; }

struct Unimodular {
    long a, b, c, d;
    Point apply(const Point& p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
};

const std::vector<Unimodular>& unimodular_matrices(long bound) {
    static long cached_bound = -1;
    static std::vector<Unimodular> cache;
    if (cached_bound != bound) {
        cache.clear();
        for (long a = -bound; a <= bound; ++a)
            for (long b = -bound; b <= bound; ++b)
                for (long c = -bound; c <= bound; ++c)
                    for (long d = -bound; d <= bound; ++d)
                        if (a * d - b * c == 1 || a * d - b * c == -1) cache.push_back({a, b, c, d});
        cached_bound = bound;
    }
    return cache;
}

int arrow_rank(const Point& d) {
    if (d == Point{1, 0}) return 0;
    if (d == Point{0, 1}) return 1;
    if (d == Point{1, -1}) return 2;
    if (d == Point{1, 1}) return 3;
    return 4;
}

void sort_directions(std::vector<Point>& dirs) {
    std::sort(dirs.begin(), dirs.end(), [](const Point& a, const Point& b) {
        int ra = arrow_rank(a), rb = arrow_rank(b);
        if (ra != rb) return ra < rb;
        return a < b;
    });
}

}  // namespace

Involution sigma(int i) {
    switch (i) {
        case 0: return {{{{1, 0}, {0, 1}}}};
        case 1: return {{{{-1, 0}, {0, 1}}}};
        case 2: return {{{{-1, 0}, {0, -1}}}};
        case 3: return {{{{0, 1}, {1, 0}}}};
    }
    throw std::invalid_argument("involution index must be 0..3");
}

int sigma_index(const Involution& inv) {
    for (int i = 0; i < 4; ++i)
        if (sigma(i) == inv) return i;
    return -1;
}

Polygon convex_hull(const std::vector<Point>& points) {
    std::vector<Point> pts(points);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw std::invalid_argument("convex_hull: fewer than three distinct points");
    std::vector<Point> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() < 3) throw std::invalid_argument("convex_hull: collinear points");
    return {h};
}

Polygon make_polygon(const std::vector<Point>& vertices) { return convex_hull(vertices); }

long twice_area(const Polygon& p) {
    long s = 0;
    std::size_t n = p.vertices.size();
    for (std::size_t k = 0; k < n; ++k) {
        auto& a = p.vertices[k];
        auto& b = p.vertices[(k + 1) % n];
        s += a.x * b.y - a.y * b.x;
    }
    return s < 0 ? -s : s;
}

std::vector<Point> lattice_points(const Polygon& p) {
    long x0 = p.vertices[0].x, x1 = x0, y0 = p.vertices[0].y, y1 = y0;
    for (auto& v : p.vertices) {
        x0 = std::min(x0, v.x);
        x1 = std::max(x1, v.x);
        y0 = std::min(y0, v.y);
        y1 = std::max(y1, v.y);
    }
    std::vector<Point> out;
    for (long x = x0; x <= x1; ++x)
        for (long y = y0; y <= y1; ++y)
            if (locate(p, {x, y})) out.push_back({x, y});
    return out;
}

Counts lattice_counts(const Polygon& p) {
    Counts c;
    for (auto& q : lattice_points(p)) {
        if (locate(p, q) == 2)
            ++c.interior;
        else
            ++c.boundary;
    }
    return c;
}

long degree(const Polygon& p) {
    auto c = lattice_counts(p);
    return 2 * c.interior + c.boundary - 2;
}

long width(const Polygon& p, const Point& dir) {
    if (gcd_abs(dir.x, dir.y) != 1) throw std::invalid_argument("width: direction is not primitive");
    long lo = 0, hi = 0;
    bool first = true;
    for (auto& v : p.vertices) {
        long f = -dir.y * v.x + dir.x * v.y;
        if (first || f < lo) lo = f;
        if (first || f > hi) hi = f;
        first = false;
    }
    return hi - lo;
}

std::vector<Point> primitive_directions(long bound) {
    std::vector<Point> out;
    for (long a = 0; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b) {
            if (a == 0 && b <= 0) continue;
            if (gcd_abs(a, b) == 1) out.push_back({a, b});
        }
    return out;
}

std::vector<Point> minimal_width_directions(const Polygon& p, long bound) {
    if (bound <= 0) bound = std::max(1L, coordinate_span(p));
    auto dirs = primitive_directions(bound);
    long best = -1;
    for (auto& d : dirs) {
        long w = width(p, d);
        if (best < 0 || w < best) best = w;
    }
    std::vector<Point> out;
    for (auto& d : dirs)
        if (width(p, d) == best) out.push_back(d);
    sort_directions(out);
    return out;
}

bool stable_direction(const Involution& inv, const Point& dir) {
    Point e = inv.apply(dir);
    return e == dir || e == Point{-dir.x, -dir.y};
}

bool is_invariant(const Polygon& p, const Involution& inv) {
    std::set<Point> img;
    for (auto& v : p.vertices) img.insert(inv.apply(v));
    return img == vertex_set(p);
}

bool forbidden_edge(const Polygon& p, const Involution& inv) {
    std::size_t n = p.vertices.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Point& a = p.vertices[k];
        const Point& b = p.vertices[(k + 1) % n];
        if (gcd_abs(b.x - a.x, b.y - a.y) != 1) continue;  // more than two lattice points
        Point ia = inv.apply(a), ib = inv.apply(b);
        if ((ia == a && ib == b) || (ia == b && ib == a)) return true;
    }
    return false;
}

std::vector<Point> circle_directions(const Polygon& p, const Involution& inv) {
    std::vector<Point> out;
    if (degree(p) == 2) {
        for (auto& d : primitive_directions(std::max(1L, coordinate_span(p))))
            if (stable_direction(inv, d) && width(p, d) == 2) out.push_back(d);
    } else {
        for (auto& d : minimal_width_directions(p))
            if (stable_direction(inv, d)) out.push_back(d);
    }
    sort_directions(out);
    return out;
}

LatticeType make_type(const Polygon& p, const Involution& inv) {
    if (!is_invariant(p, inv)) throw std::invalid_argument("involution does not preserve the polygon");
    return {p, inv, circle_directions(p, inv)};
}

bool unimodular_equivalent(const LatticeType& a, const LatticeType& b, long bound) {
    const auto& pa = a.polygon.vertices;
    const auto& pb = b.polygon.vertices;
    if (pa.size() != pb.size() || twice_area(a.polygon) != twice_area(b.polygon)) return false;
    auto target = vertex_set(b.polygon);
    Point bmin = *target.begin();
    for (auto& U : unimodular_matrices(bound)) {
        std::set<Point> img;
        for (auto& v : pa) img.insert(U.apply(v));
        Point amin = *img.begin();
        Point t{bmin.x - amin.x, bmin.y - amin.y};
        std::set<Point> moved;
        for (auto& v : img) moved.insert({v.x + t.x, v.y + t.y});
        if (moved != target) continue;
        bool ok = true;
        for (auto& v : pa) {
            Point uv = U.apply(v);
            Point lhs = b.involution.apply({uv.x + t.x, uv.y + t.y});
            Point r = U.apply(a.involution.apply(v));
            if (lhs != Point{r.x + t.x, r.y + t.y}) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

std::vector<Point> canonical_key(const Polygon& p) {
    long n = static_cast<long>(p.vertices.size());
    long sx = 0, sy = 0;
    for (auto& v : p.vertices) {
        sx += v.x;
        sy += v.y;
    }
    std::vector<Point> s;
    for (auto& v : p.vertices) s.push_back({n * v.x - sx, n * v.y - sy});
    auto best = s;
    for (long r = 1; r < n; ++r) {
        std::rotate(s.begin(), s.begin() + 1, s.end());
        if (s < best) best = s;
    }
    return best;
}

const std::vector<ReferenceRow>& reference_rows() {
    static const std::vector<ReferenceRow> rows = [] {
        auto row = [](std::string ref, std::string name, std::vector<Point> vs, int s, std::string arr,
                      std::string merge = "") {
            Polygon p = make_polygon(vs);
            return ReferenceRow{ref, name, make_type(p, sigma(s)), arr, merge};
        };
        std::vector<Point> square{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
        std::vector<Point> hexagon{{-1, 1}, {0, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, 0}};
        std::vector<Point> pentagon{{-1, 0}, {0, 1}, {1, 0}, {1, -1}, {-1, -1}};
        std::vector<Point> triangle{{-1, 1}, {1, -1}, {-1, -1}};
        std::vector<Point> diamond{{-1, 0}, {0, 1}, {1, 0}, {0, -1}};
        std::vector<Point> horn{{-1, -1}, {0, 1}, {1, -1}};
        std::vector<Point> unit{{-1, -1}, {-1, 0}, {0, 0}, {0, -1}};
        std::vector<Point> quad{{-1, -1}, {-1, 0}, {1, 1}, {0, -1}};
        return std::vector<ReferenceRow>{
            row("L.a", "dS", square, 0, "→↓"),
            row("L.b", "dP6", hexagon, 2, "→↓↘"),
            row("L.c", "weak dP6", pentagon, 1, "→↓"),
            row("L.d", "Veronese", triangle, 0, "→↓↘"),
            row("L.e", "ring cyclide", diamond, 2, "→↓↘↙"),
            row("L.f", "spindle cyclide", diamond, 1, "→↓"),
            row("L.g", "horn cyclide", horn, 1, "→↓"),
            row("L.h", "2-sphere", unit, 3, "↘↙"),
            row("L2.a", "dS", square, 1, "→↓", "L.a"),
            row("L2.b", "dS", square, 2, "→↓", "L.a"),
            row("L2.c", "Veronese", triangle, 3, "↘"),
            row("L2.d", "", quad, 3, "↙"),
        };
    }();
    return rows;
}

std::optional<std::string> rejection_reason(const Polygon& p, const Involution& inv) {
    auto c = lattice_counts(p);
    static const std::set<std::pair<long, long>> allowed{{0, 4}, {0, 6}, {1, 4}, {1, 6}, {1, 8}};
    if (!allowed.count({c.interior, c.boundary})) return "claim1";
    if (forbidden_edge(p, inv)) return "forbidden-edge";
    if (circle_directions(p, inv).size() < 2) return "directions";
    return std::nullopt;
}

GridClassification classify_grid() {
    GridClassification out;
    std::vector<Point> grid;
    for (long x = -1; x <= 1; ++x)
        for (long y = -1; y <= 1; ++y) grid.push_back({x, y});
    std::set<std::vector<Point>> seen;
    for (unsigned mask = 0; mask < (1u << 9); ++mask) {
        std::vector<Point> pts;
        for (unsigned k = 0; k < 9; ++k)
            if (mask & (1u << k)) pts.push_back(grid[k]);
        if (pts.size() < 3) continue;
        Polygon p;
        try {
            p = convex_hull(pts);
        } catch (const std::invalid_argument&) {
            continue;
        }
        auto key = p.vertices;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) out.polygons.push_back(p);
    }

    for (auto& p : out.polygons) {
        for (int s = 0; s < 4; ++s) {
            Involution inv = sigma(s);
            if (!is_invariant(p, inv) || rejection_reason(p, inv)) continue;
            LatticeType t = make_type(p, inv);
            ++out.candidate_pairs;
            bool placed = false;
            for (auto& cls : out.raw) {
                if (unimodular_equivalent(cls.members.front(), t)) {
                    cls.members.push_back(t);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                ClassifiedType cls;
                cls.members.push_back(t);
                out.raw.push_back(cls);
            }
        }
    }

    for (auto& cls : out.raw) {
        const LatticeType& rep = cls.members.front();
        cls.type = rep;
        cls.name = "unmatched";
        for (auto& row : reference_rows()) {
            if (unimodular_equivalent(row.type, rep)) {
                cls.type = row.type;
                cls.name = row.name;
                cls.table_ref = row.table_ref;
                cls.merges_into = row.merges_into;
                break;
            }
        }
        cls.counts = lattice_counts(cls.type.polygon);
        cls.degree = degree(cls.type.polygon);
    }
    std::sort(out.raw.begin(), out.raw.end(),
              [](const ClassifiedType& a, const ClassifiedType& b) { return a.table_ref < b.table_ref; });

    for (auto& cls : out.raw)
        if (cls.merges_into.empty()) out.merged.push_back(cls);
    for (auto& cls : out.raw) {
        if (cls.merges_into.empty()) continue;
        for (auto& m : out.merged)
            if (m.table_ref == cls.merges_into) m.members.insert(m.members.end(), cls.members.begin(), cls.members.end());
    }
    return out;
}

std::string arrow(const Point& d) {
    switch (arrow_rank(d)) {
        case 0: return "→";
        case 1: return "↓";
        case 2: return "↘";
        case 3: return "↙";
    }
    return "(" + std::to_string(d.x) + "," + std::to_string(d.y) + ")";
}

std::string arrows(const std::vector<Point>& dirs) {
    auto d = dirs;
    sort_directions(d);
    std::string s;
    for (auto& p : d) s += arrow(p);
    return s;
}

}  // namespace celestial::lattice
