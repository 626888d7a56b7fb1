#pragma once
// Lattice polygons in Z^2 with unimodular involutions, widths and the
// enumeration of involution-polygon pairs in the centered 3x3 grid.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace celestial::lattice {

struct Point {
    long x = 0, y = 0;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// Counterclockwise vertices, no three consecutive collinear.
struct Polygon {
    std::vector<Point> vertices;
    friend bool operator==(const Polygon&, const Polygon&) = default;
};

struct Involution {
    std::array<std::array<long, 2>, 2> m{{{1, 0}, {0, 1}}};
    Point apply(const Point& p) const { return {m[0][0] * p.x + m[0][1] * p.y, m[1][0] * p.x + m[1][1] * p.y}; }
    friend bool operator==(const Involution&, const Involution&) = default;
};

// sigma_0 .. sigma_3: identity, (x,y)->(-x,y), (x,y)->(-x,-y), (x,y)->(y,x).
Involution sigma(int i);
// Index 0..3 if inv is one of the four standard involutions, else -1.
int sigma_index(const Involution& inv);

Polygon convex_hull(const std::vector<Point>& points);  // throws on collinear input
Polygon make_polygon(const std::vector<Point>& vertices);  // hull of the given vertices

struct Counts {
    long interior = 0, boundary = 0;
    friend bool operator==(const Counts&, const Counts&) = default;
};

Counts lattice_counts(const Polygon& p);
long degree(const Polygon& p);
long twice_area(const Polygon& p);
std::vector<Point> lattice_points(const Polygon& p);

long width(const Polygon& p, const Point& dir);  // throws on non-primitive dir
// Primitive directions up to sign, normalized to x > 0 or (x == 0, y > 0),
// with |entries| <= bound; bound 0 means the coordinate span of p.
std::vector<Point> primitive_directions(long bound);
std::vector<Point> minimal_width_directions(const Polygon& p, long bound = 0);
bool stable_direction(const Involution& inv, const Point& dir);

bool is_invariant(const Polygon& p, const Involution& inv);
bool forbidden_edge(const Polygon& p, const Involution& inv);

// Directions of toric circle families: for degree != 2 the minimal-width
// directions fixed up to sign by inv; for degree 2 the stable width-2 directions.
std::vector<Point> circle_directions(const Polygon& p, const Involution& inv);

struct LatticeType {
    Polygon polygon;
    Involution involution;
    std::vector<Point> directions;
};

LatticeType make_type(const Polygon& p, const Involution& inv);

// U(a.polygon) + t = b.polygon with U a.inv U^-1 = b.inv and b.inv t = t,
// searched over integer U with |entries| <= bound.
bool unimodular_equivalent(const LatticeType& a, const LatticeType& b, long bound = 3);

// Key for polygon deduplication: vertices scaled by n, centroid moved to the
// origin, rotated to the lexicographically lowest start.
std::vector<Point> canonical_key(const Polygon& p);

struct ReferenceRow {
    std::string table_ref;  // "L.a" .. "L.h", "L2.a" .. "L2.d"
    std::string name;
    LatticeType type;
    std::string arrows;
    std::string merges_into;  // non-empty for rows identified with another class
};

// Rows of the lattice-type tables (polygon, involution, printed arrows).
const std::vector<ReferenceRow>& reference_rows();

struct ClassifiedType {
    LatticeType type;       // shown through the reference representative
    Counts counts;
    long degree = 0;
    std::string name;
    std::string table_ref;
    std::string merges_into;
    std::vector<LatticeType> members;  // grid pairs in this class
};

struct Rejection {
    LatticeType type;
    std::string reason;  // "claim1", "forbidden-edge", "directions"
};

struct GridClassification {
    std::vector<ClassifiedType> raw;       // deduplicated classes
    std::vector<ClassifiedType> merged;    // after identifying the dS variants
    std::vector<Polygon> polygons;         // all polygons in the grid
    std::size_t candidate_pairs = 0;       // invariant pairs that passed all filters
};

GridClassification classify_grid();

std::string arrow(const Point& dir);
std::string arrows(const std::vector<Point>& dirs);

// Reason a pair is excluded by the claim filters, or nullopt if it passes.
std::optional<std::string> rejection_reason(const Polygon& p, const Involution& inv);

}  // namespace celestial::lattice
