#pragma once
// Floating-point point clouds of real surfaces, for export only.

#include "celestial/quadric.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace celestial::sample {

using Row = std::vector<double>;

struct SurfaceModel {
    std::string name;
    std::vector<int> labels;  // x-frame coordinate subscripts
    FormSpan quadrics;        // x-frame equations of the surface
    std::vector<Row> projection;  // 4 x k projective map (w : X : Y : Z)
};

const std::vector<std::string>& surface_names();
SurfaceModel surface_model(const std::string& name);  // throws std::invalid_argument on unknown names

struct Cloud {
    std::string surface;
    std::vector<std::array<double, 3>> points;
    std::vector<Row> projection;
    int skipped = 0;            // degenerate parameters and points at infinity of the projection
    double max_residual = 0.0;  // over all quadrics, at unit-norm representatives
};

// proj, if given, is 3 x k and acts on the point normalized to x0 = 1.
Cloud sample_surface(const std::string& surface, int resolution, const std::optional<std::vector<Row>>& proj);

std::vector<Row> parse_projection(std::istream& in);

void write_csv(std::ostream& out, const Cloud& c);
void write_ply(std::ostream& out, const Cloud& c);

}  // namespace celestial::sample
