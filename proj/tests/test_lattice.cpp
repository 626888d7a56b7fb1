#include "celestial/lattice.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace celestial::lattice;

namespace {

Polygon square() { return make_polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}); }
Polygon hexagon() { return make_polygon({{-1, 1}, {0, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, 0}}); }
Polygon diamond() { return make_polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }
Polygon unit_square() { return make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

std::set<Point> as_set(const std::vector<Point>& v) { return {v.begin(), v.end()}; }

const ReferenceRow& ref(const std::string& id) {
    for (auto& r : reference_rows())
        if (r.table_ref == id) return r;
    throw std::out_of_range(id);
}

// Any unimodular map, stored in the involution type for apply().
Involution unimodular(long a, long b, long c, long d) {
    Involution u;
    u.m = {{{a, b}, {c, d}}};
    return u;
}

Polygon transform(const Polygon& p, const Involution& u, Point t = {}) {
    std::vector<Point> v;
    for (auto& q : p.vertices) {
        Point w = u.apply(q);
        v.push_back({w.x + t.x, w.y + t.y});
    }
    return make_polygon(v);
}

// Brute-force oracle: every lattice point of the bounding box tested against all edges.
long count_inside(const Polygon& p, bool boundary) {
    long lo = 1000, hi = -1000;
    for (auto& v : p.vertices) lo = std::min({lo, v.x, v.y}), hi = std::max({hi, v.x, v.y});
    long n = 0;
    std::size_t k = p.vertices.size();
    for (long x = lo; x <= hi; ++x)
        for (long y = lo; y <= hi; ++y) {
            bool in = true, on = false;
            for (std::size_t i = 0; i < k; ++i) {
                auto a = p.vertices[i], b = p.vertices[(i + 1) % k];
                long cr = (b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x);
                if (cr < 0) in = false;
                if (cr == 0 && std::min(a.x, b.x) <= x && x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= y &&
                    y <= std::max(a.y, b.y))
                    on = true;
            }
            if (in && on == boundary) ++n;
        }
    return n;
}

}  // namespace

TEST_CASE("sigma matrices are involutions") {
    for (int i = 0; i < 4; ++i) {
        Involution s = sigma(i);
        CHECK(sigma_index(s) == i);
        for (Point p : {Point{1, 0}, Point{0, 1}, Point{2, -3}}) CHECK(s.apply(s.apply(p)) == p);
    }
    CHECK(sigma(1).apply({2, 3}) == Point{-2, 3});
    CHECK(sigma(3).apply({2, 3}) == Point{3, 2});
}

TEST_CASE("convex hull examples") {
    std::vector<Point> grid;
    for (long x = -1; x <= 1; ++x)
        for (long y = -1; y <= 1; ++y) grid.push_back({x, y});
    CHECK(as_set(convex_hull(grid).vertices) == as_set(square().vertices));
    CHECK(convex_hull(grid).vertices.size() == 4);
    auto h = convex_hull({{-1, 1}, {0, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, 0}, {0, 0}});
    CHECK(h.vertices.size() == 6);
    CHECK(as_set(h.vertices) == as_set(hexagon().vertices));
    CHECK_THROWS_AS(convex_hull({{0, 0}, {1, 1}, {2, 2}}), std::invalid_argument);
    CHECK(twice_area(h) > 0);  // counterclockwise
}

TEST_CASE("lattice counts and degree examples") {
    CHECK(lattice_counts(square()) == Counts{1, 8});
    CHECK(lattice_counts(hexagon()) == Counts{1, 6});
    CHECK(lattice_counts(make_polygon({{-1, 1}, {1, -1}, {-1, -1}})) == Counts{0, 6});
    CHECK(degree(square()) == 8);
    CHECK(degree(hexagon()) == 6);
    CHECK(degree(unit_square()) == 2);
    CHECK(degree(make_polygon({{-1, 1}, {1, -1}, {-1, -1}})) == 4);
}

TEST_CASE("width examples") {
    CHECK(width(hexagon(), {1, -1}) == 2);
    CHECK(width(hexagon(), {1, 1}) == 4);
    CHECK(width(square(), {1, 0}) == 2);
    CHECK_THROWS_AS(width(square(), {2, 0}), std::invalid_argument);
}

TEST_CASE("minimal width directions examples") {
    CHECK(as_set(minimal_width_directions(square())) == std::set<Point>{{1, 0}, {0, 1}});
    CHECK(as_set(minimal_width_directions(hexagon())) == std::set<Point>{{1, 0}, {0, 1}, {1, -1}});
    CHECK(as_set(minimal_width_directions(diamond())) == std::set<Point>{{1, 0}, {0, 1}, {1, 1}, {1, -1}});
    CHECK(arrows({{1, 0}, {0, 1}, {1, -1}}).size() > 0);
}

TEST_CASE("forbidden edge examples") {
    CHECK(!forbidden_edge(square(), sigma(0)));
    CHECK(forbidden_edge(unit_square(), sigma(0)));
    auto& d = ref("L2.d");
    CHECK(forbidden_edge(d.type.polygon, sigma(0)));
}

TEST_CASE("unimodular equivalence examples") {
    LatticeType sq = make_type(square(), sigma(0));
    LatticeType rot = make_type(transform(square(), unimodular(0, -1, 1, 0)), sigma(0));
    CHECK(unimodular_equivalent(sq, rot));
    CHECK(!unimodular_equivalent(ref("L.f").type, ref("L.e").type));
    CHECK(!unimodular_equivalent(ref("L2.a").type, ref("L2.b").type));
    CHECK(!unimodular_equivalent(sq, make_type(hexagon(), sigma(0))));
}

TEST_CASE("Veronese triangle with sigma_3 is rejected for directions") {
    auto& c = ref("L2.c");
    CHECK(c.type.involution == sigma(3));
    auto reason = rejection_reason(c.type.polygon, c.type.involution);
    REQUIRE(reason.has_value());
    CHECK(*reason == "directions");
    CHECK(circle_directions(c.type.polygon, c.type.involution).size() == 1);
}

TEST_CASE("canonical key ignores translation and start vertex") {
    Polygon h = hexagon();
    CHECK(canonical_key(h) == canonical_key(transform(h, sigma(0), {5, -2})));
}

TEST_CASE("grid classification") {
    auto g = classify_grid();
    CHECK(g.raw.size() == 10);
    CHECK(g.merged.size() == 8);
    std::set<std::string> refs;
    for (auto& c : g.merged) refs.insert(c.table_ref);
    CHECK(refs == std::set<std::string>{"L.a", "L.b", "L.c", "L.d", "L.e", "L.f", "L.g", "L.h"});
    for (auto& c : g.raw) {
        CHECK(is_invariant(c.type.polygon, c.type.involution));
        for (auto& d : c.type.directions) CHECK(stable_direction(c.type.involution, d));
        for (auto& m : c.members) {
            CHECK(is_invariant(m.polygon, m.involution));
            CHECK(lattice_counts(m.polygon) == c.counts);
        }
    }
    auto& e = *std::find_if(g.merged.begin(), g.merged.end(), [](auto& c) { return c.table_ref == "L.e"; });
    CHECK(e.type.directions.size() == 4);
    CHECK(e.type.involution == sigma(2));
}

TEST_CASE("pick consistency and counts match a brute-force oracle") {
    auto g = classify_grid();
    CHECK(g.polygons.size() > 10);
    for (auto& p : g.polygons) {
        auto c = lattice_counts(p);
        CHECK(degree(p) == twice_area(p));
        CHECK(degree(p) == 2 * c.interior + c.boundary - 2);
        CHECK(c.interior == count_inside(p, false));
        CHECK(c.boundary == count_inside(p, true));
        CHECK(long(lattice_points(p).size()) == c.interior + c.boundary);
    }
}

TEST_CASE("direction search bound agrees with exhaustive search to bound 5") {
    for (auto& p : classify_grid().polygons)
        CHECK(as_set(minimal_width_directions(p)) == as_set(minimal_width_directions(p, 5)));
}

TEST_CASE("equivalence bound 3 misses nothing found with bound 5") {
    auto g = classify_grid();
    for (std::size_t i = 0; i < g.raw.size(); ++i)
        for (std::size_t j = i + 1; j < g.raw.size(); ++j)
            CHECK(!unimodular_equivalent(g.raw[i].members.front(), g.raw[j].members.front(), 5));
}

TEST_CASE("width is invariant under unimodular change of coordinates") {
    const Involution us[] = {unimodular(1, 1, 0, 1), unimodular(2, 1, 1, 1), unimodular(0, -1, 1, 0), unimodular(1, 0, -2, 1)};
    for (auto& p : classify_grid().polygons)
        for (auto& u : us)
            for (auto& d : primitive_directions(2)) CHECK(width(p, d) == width(transform(p, u, {1, 0}), u.apply(d)));
}
