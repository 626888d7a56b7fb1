#pragma once
// Moebius pairs on the double Segre surface: the four-parameter family of
// torus-invariant quadrics and the resulting classification records.

#include "celestial/exact.hpp"
#include "celestial/quadric.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace celestial::forms {

constexpr int kInfinity = -1;  // lambda = infinity

struct CelestialType {
    int lambda = 0;  // kInfinity for infinity
    int degree = 0;
    int n = 0;
    friend bool operator==(const CelestialType&, const CelestialType&) = default;
};

std::string lambda_str(int lambda);  // "inf" or the number

struct CelestialRecord {
    std::string name;
    CelestialType type;
    std::string singular;  // Dynkin string, "∅" when smooth
    std::string group;
    int moduli_dim = 0;
    bool moebius_equals_aut = false;
    friend bool operator==(const CelestialRecord&, const CelestialRecord&) = default;
};

nlohmann::json to_json(const CelestialRecord& r);

// Coefficients c1, c3, c5, c7 of sum c_i (y0^2 - y_i y_{i+1}).
using FamilyCoeffs = std::array<Rational, 4>;
constexpr std::array<int, 4> kFamilyIndex{1, 3, 5, 7};

FamilyCoeffs parse_coeffs(const std::string& csv);

QuadraticForm family_form(const FamilyCoeffs& c, char frame);  // frame 'y' or 'x'

struct SingularSupport {
    std::vector<int> I;  // indices i in {1,3,5,7} with c_i = 0
    int center_dim = -1; // projective dimension of the kernel, -1 when empty
};

// Throws std::invalid_argument on zero, mixed-sign or |I| > 2 input.
SingularSupport singular_support(const FamilyCoeffs& c);

CelestialRecord classify_family(const FamilyCoeffs& c);

// Veronese, spindle cyclide, horn cyclide, 2-sphere.
std::vector<CelestialRecord> fixed_records();

struct FixedRecordCheck {
    bool spindle_span = false;  // invariant forms of <i s1, s2> under sigma_1 match the printed x-frame span
    bool horn_span = false;     // invariant forms of <i s1, t2> under sigma_1 match the printed x-frame span
};
FixedRecordCheck fixed_record_check();

struct RigidityReport {
    bool passed = false;
    int trials = 0;
    int left_span = 0;         // generic trials whose image left the family span
    int torus_stayed = 0;      // torus trials whose image stayed with proportional coefficients
    bool torus_matches_target = false;  // torus images proportional to c' (expected iff c ~ c')
};

RigidityReport rigidity_sample_check(const FamilyCoeffs& c, const FamilyCoeffs& c2, int trials, std::uint64_t seed,
                                     int threads = 1);

std::pair<Signature, Signature> corollary_iqf_check();

// Family span <y0^2 - y_i y_{i+1}> in the y-frame.
FormSpan family_span();

}  // namespace celestial::forms
