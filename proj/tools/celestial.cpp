#include "celestial/forms.hpp"
#include "celestial/geometry.hpp"
#include "celestial/lattice.hpp"
#include "celestial/liealg.hpp"
#include "celestial/sample.hpp"
#include "celestial/segre.hpp"
#include "celestial/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

using namespace celestial;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    if (const char* s = std::getenv("CELESTIAL_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw UsageError("CELESTIAL_SEED must be a non-negative integer");
        }
    }
    return 1;
}

json point_json(const lattice::Point& p) { return json::array({p.x, p.y}); }

json class_json(const lattice::ClassifiedType& c) {
    json verts = json::array();
    for (auto& v : c.type.polygon.vertices) verts.push_back(point_json(v));
    json dirs = json::array();
    for (auto& d : c.type.directions) dirs.push_back(point_json(d));
    const auto& m = c.type.involution.m;
    json j{{"polygon_vertices", verts},
           {"involution_matrix", json::array({json::array({m[0][0], m[0][1]}), json::array({m[1][0], m[1][1]})})},
           {"directions", dirs},
           {"counts", {{"i", c.counts.interior}, {"b", c.counts.boundary}, {"d", c.degree}}},
           {"name", c.name},
           {"table_ref", c.table_ref},
           {"sigma", lattice::sigma_index(c.type.involution)},
           {"arrows", lattice::arrows(c.type.directions)},
           {"grid_pairs", c.members.size()}};
    if (!c.merges_into.empty()) j["merges_into"] = c.merges_into;
    return j;
}

int cmd_classify_lattice(bool as_json) {
    auto g = lattice::classify_grid();
    if (as_json) {
        // one entry per named class; the identified variants are listed under "variants"
        json arr = json::array();
        for (auto& c : g.merged) {
            json j = class_json(c);
            json variants = json::array();
            for (auto& r : g.raw)
                if (r.merges_into == c.table_ref) variants.push_back(class_json(r));
            if (!variants.empty()) j["variants"] = variants;
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    std::cout << g.polygons.size() << " lattice polygons in the 3x3 grid, " << g.candidate_pairs
              << " admissible (polygon, involution) pairs\n"
              << g.raw.size() << " classes up to unimodular equivalence:\n";
    for (auto& c : g.raw) {
        std::cout << "  " << c.table_ref << "  " << c.name << "  i=" << c.counts.interior << " b=" << c.counts.boundary
                  << " degree " << c.degree << "  sigma_" << lattice::sigma_index(c.type.involution) << "  "
                  << lattice::arrows(c.type.directions);
        if (!c.merges_into.empty()) std::cout << "  (same as " << c.merges_into << ")";
        std::cout << "\n";
    }
    std::cout << g.merged.size() << " named classes\n";
    return 0;
}

Matrix matrix_from_json(const json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n) throw UsageError("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!j[r].is_array() || j[r].size() != n) throw UsageError("bad matrix row");
        for (std::size_t c = 0; c < n; ++c) {
            const json& e = j[r][c];
            m(r, c) = e.is_string() ? parse_gaussian(e.get<std::string>()) : QI(Rational(e.get<long>()));
        }
    }
    return m;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read algebra file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(std::string("bad algebra file: ") + e.what());
    }
}

int cmd_invariant_forms(const std::string& algebra, const std::string& ambient, std::optional<int> sigma, bool as_json) {
    json out{{"algebra", algebra}, {"ambient", ambient}};
    FormSpan y, x;
    bool have_x = false;
    if (ambient == "segre") {
        std::vector<liealg::LieElement> basis;
        bool found = false;
        for (auto& p : liealg::presets())
            if (p.name == algebra) {
                basis = p.basis;
                found = true;
            }
        if (!found) {
            // {"basis": [{"left": [[..],[..]], "right": [[..],[..]]}, ...]}, entries as strings like "1/2-i"
            json j = load_json(algebra);
            for (auto& e : j.at("basis")) basis.emplace_back(matrix_from_json(e.at("left"), 2), matrix_from_json(e.at("right"), 2));
        }
        if (!liealg::is_subalgebra(basis)) throw UsageError("the given elements do not span a subalgebra");
        y = liealg::invariant_forms(basis, segre::i2_segre());
        if (sigma) {
            FormSpan real = liealg::real_basis(y, *sigma);
            x = segre::mu_transform(*sigma, real);
            have_x = true;
        }
    } else if (ambient == "veronese") {
        std::vector<Matrix> basis;
        if (algebra == "so3") basis = geometry::sl3::so3();
        else if (algebra == "sl3") basis = geometry::sl3::full();
        else
            for (auto& e : load_json(algebra).at("basis")) basis.push_back(matrix_from_json(e, 3));
        if (sigma && *sigma != 0) throw UsageError("the Veronese surface only carries sigma 0");
        x = geometry::veronese_invariant_forms(basis);
        y = x;
        y.frame = 'y';
        for (auto& q : y.basis) q.frame = 'y';
        have_x = sigma.has_value();
    } else {
        throw UsageError("ambient must be segre or veronese");
    }
    out["dimension"] = y.dim();
    out["y"] = to_json(y);
    if (have_x) {
        out["sigma"] = *sigma;
        out["x"] = to_json(x);
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "dimension " << y.dim() << "\n";
    for (auto& q : y.basis) std::cout << "  " << q.str() << "\n";
    if (have_x) {
        std::cout << "real frame (sigma_" << *sigma << "):\n";
        for (auto& q : x.basis) std::cout << "  " << q.str() << "\n";
    }
    return 0;
}

int cmd_family(const std::string& coeffs, bool as_json) {
    auto c = forms::parse_coeffs(coeffs);
    auto rec = forms::classify_family(c);
    auto ss = forms::singular_support(c);
    if (as_json) {
        json j = forms::to_json(rec);
        j["I"] = ss.I;
        j["form_y"] = forms::family_form(c, 'y').str();
        j["form_x"] = forms::family_form(c, 'x').str();
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << rec.name << "\n"
              << "  type      (" << forms::lambda_str(rec.type.lambda) << "," << rec.type.degree << "," << rec.type.n << ")\n"
              << "  singular  " << rec.singular << "\n"
              << "  group     " << rec.group << "\n"
              << "  moduli    " << rec.moduli_dim << "\n"
              << "  M = Aut   " << (rec.moebius_equals_aut ? "yes" : "no") << "\n"
              << "  quadric   " << forms::family_form(c, 'x').str() << "\n";
    return 0;
}

int cmd_sample(const std::string& surface, int resolution, const std::string& proj_path, const std::string& path,
               const std::string& format) {
    std::optional<std::vector<sample::Row>> proj;
    if (!proj_path.empty()) {
        std::ifstream in(proj_path);
        if (!in) throw UsageError("cannot read projection file '" + proj_path + "'");
        proj = sample::parse_projection(in);
    }
    auto cloud = sample::sample_surface(surface, resolution, proj);
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    if (format == "ply") sample::write_ply(out, cloud);
    else sample::write_csv(out, cloud);
    out.close();
    if (!out) throw UsageError("failed writing '" + path + "'");
    std::cerr << cloud.points.size() << " points written to " << path << " (" << cloud.skipped
              << " skipped, max residual " << cloud.max_residual << ")\n";
    return cloud.max_residual < 1e-9 ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"celestial: Moebius automorphisms of surfaces with many circles"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    std::string only;
    std::optional<std::uint64_t> seed;
    int threads = 1;
    bool verify_json = false;
    verify->add_option("--only", only, "group or check id");
    verify->add_option("--seed", seed, "seed for randomized checks (default: CELESTIAL_SEED or 1)");
    verify->add_flag("--json", verify_json, "machine-readable report");

    auto* lat = app.add_subcommand("classify-lattice", "classify invariant lattice polygons");
    bool lat_json = false;
    lat->add_flag("--json", lat_json);

    auto* inv = app.add_subcommand("invariant-forms", "invariant quadratic forms of a subalgebra");
    std::string algebra, ambient = "segre";
    std::optional<int> sigma;
    bool inv_json = false;
    inv->add_option("--algebra", algebra, "preset name or JSON file")->required();
    inv->add_option("--ambient", ambient, "segre or veronese")->check(CLI::IsMember({"segre", "veronese"}));
    inv->add_option("--sigma", sigma, "real structure 0..3")->check(CLI::Range(0, 3));
    inv->add_flag("--json", inv_json);

    auto* fam = app.add_subcommand("family", "classify sum c_i (y0^2 - y_i y_{i+1})");
    std::string coeffs;
    bool fam_json = false;
    fam->add_option("--coeffs", coeffs, "c1,c3,c5,c7")->required();
    fam->add_flag("--json", fam_json);

    auto* smp = app.add_subcommand("sample", "export a point cloud");
    std::string surface, proj_path, out_path, format = "csv";
    int resolution = 0;
    smp->add_option("--surface", surface)->required()->check(CLI::IsMember(sample::surface_names()));
    smp->add_option("--resolution", resolution)->required()->check(CLI::Range(2, 100000));
    smp->add_option("--proj", proj_path, "file with a 3 x k matrix");
    smp->add_option("--out", out_path)->required();
    smp->add_option("--format", format)->check(CLI::IsMember({"csv", "ply"}));

    for (auto* s : {verify, lat, inv, fam, smp})
        s->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) {
            verify::Options opt;
            opt.seed = seed ? *seed : default_seed();
            opt.threads = threads;
            opt.only = only;
            auto r = verify::run(opt);
            if (verify_json) std::cout << verify::to_json(r).dump(2) << "\n";
            else verify::print_table(std::cout, r);
            return r.ok() ? 0 : kExitFail;
        }
        if (*lat) return cmd_classify_lattice(lat_json);
        if (*inv) return cmd_invariant_forms(algebra, ambient, sigma, inv_json);
        if (*fam) return cmd_family(coeffs, fam_json);
        if (*smp) return cmd_sample(surface, resolution, proj_path, out_path, format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
