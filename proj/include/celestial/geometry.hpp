#pragma once
// Neron-Severi combinatorics of blown-up P1 x P1, the spindle and horn
// cyclide example, and the Veronese surface.

#include "celestial/exact.hpp"
#include "celestial/quadric.hpp"
#include "celestial/segre.hpp"

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace celestial::geometry {

// Coefficients over l0, l1, e1, e2, e3, e4.
using NSClass = std::array<long, 6>;

long ns_product(const NSClass& a, const NSClass& b);
NSClass ns_sigma(const NSClass& a);  // e1 <-> e2, e3 <-> e4
std::string ns_label(const NSClass& c);  // e.g. "l0-e1-e3"

struct BlowupConfig {
    char tag = 'a';
    int points = 0;  // blowup points 1..points
    std::vector<std::pair<int, int>> pi1_shared;  // pairs on a common pi1-fiber
    std::vector<std::pair<int, int>> pi2_shared;  // pairs on a common pi2-fiber
    std::vector<std::pair<int, int>> near;        // (i, j): j infinitely near i
};

const std::vector<BlowupConfig>& blowup_configs();  // tags a..f
const BlowupConfig& blowup_config(char tag);

NSClass anticanonical(const BlowupConfig& cfg);
std::vector<NSClass> b_classes(const BlowupConfig& cfg);

// Components of the graph with edges a.b > 0, typed A_k; underlined when
// sigma maps the component to itself. Underlined first, then by rank.
// Throws std::invalid_argument if a component is not a chain.
std::string dynkin(const std::vector<NSClass>& B);

// Spindle and horn cyclides. Labels are (0,1,2,3,4) and (0,3,4,6,7).
struct CyclideSpans {
    FormSpan spindle;
    FormSpan horn;
};
CyclideSpans cyclide_pipeline();
CyclideSpans cyclide_printed();

// Pencil member of signature (1,4) found among small integer combinations.
bool has_sphere_member(const FormSpan& span);

// Rational points on X_s and X_h. a parametrizes the unit circle, k != 0.
Vec spindle_point(const Rational& a, const Rational& k);
Vec horn_point(const Rational& a, const Rational& k);

struct StereoReport {
    bool cone = false;       // spindle image fits one cone equation
    bool cylinder = false;   // horn image fits one cylinder equation
    bool on_surfaces = false;  // every sample annihilates the computed spans
    int checked = 0;         // samples per surface
    int skipped = 0;         // degenerate samples per surface
    Vec cone_coeffs;         // a (X^2+Y^2) + b Z^2
    Vec cylinder_coeffs;     // a (Y^2+Z^2) + b Y + c Z + d
    bool passed() const { return cone && cylinder && on_surfaces; }
};
StereoReport stereographic_check();

// Veronese surface: xi_d(s,t) = (1 : st : s : t : s^2 : t^2).
const segre::MonomialParam& veronese_param();
FormSpan veronese_i2();

namespace sl3 {
Matrix a(int k);  // k = 1..3
Matrix b(int k);
Matrix c(int k);  // k = 1..2
std::vector<Matrix> so3();
std::vector<Matrix> full();
}  // namespace sl3

// Action on (u^2, st, su, tu, s^2, t^2) induced by m acting on (s,t,u).
Matrix veronese_d(const Matrix& m);

FormSpan veronese_invariant_forms(const std::vector<Matrix>& algebra);
QuadraticForm so3_invariant_form();  // throws std::logic_error unless one-dimensional

// Normalized (pos, neg) of all nonzero combinations with coefficients in {-1,0,1}.
std::set<std::pair<std::size_t, std::size_t>> veronese_signature_witnesses(int threads = 1);

}  // namespace celestial::geometry
