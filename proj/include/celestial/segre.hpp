#pragma once
// The double Segre surface in P^8: monomial parametrization, its quadric
// ideal, real structures sigma_i, frames mu_i and the Sym2 x Sym2 action.

#include "celestial/exact.hpp"
#include "celestial/lattice.hpp"
#include "celestial/quadric.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace celestial::segre {

struct MonomialParam {
    std::vector<lattice::Point> exponents;  // coordinate k is s^a u^b
    std::vector<int> labels;                // subscripts of the kept coordinates
};

// y0..y8 with exponents (0,0),(1,0),(-1,0),(0,1),(0,-1),(1,1),(-1,-1),(1,-1),(-1,1).
const MonomialParam& double_segre();

Vec eval_param(const MonomialParam& p, const QI& s, const QI& u);  // throws on zero input
// Bidegree (2,2) lift: coordinate (a,b) -> s^(1+a) t^(1-a) u^(1+b) w^(1-b).
Vec eval_lift(const MonomialParam& p, const QI& s, const QI& t, const QI& u, const QI& w);

// Divide by the first nonzero coordinate.
Vec normalize_projective(const Vec& v);
bool projectively_equal(const Vec& a, const Vec& b);

FormSpan i2_segre();

// Permutation of sigma_i: sigma_i(y)_k = conj(y_perm[k]).
const std::array<int, 9>& sigma_perm(int i);
Vec apply_sigma(int i, const Vec& point);
QuadraticForm apply_sigma(int i, const QuadraticForm& q);
FormSpan apply_sigma(int i, const FormSpan& span);
// sigma_i as the antilinear involution of the full P^8, restricted to the labels.
Matrix sigma_matrix(int i);

// y = M x for the frame change mu_i.
Matrix mu_matrix(int i);

struct MuResult {
    QuadraticForm form;
    bool complex_residue = false;  // true when the x-frame form has non-real coefficients
};
MuResult mu_transform(int i, const QuadraticForm& q);
FormSpan mu_transform(int i, const FormSpan& span);  // x-frame span, same labels

using Pair = std::pair<Matrix, Matrix>;
// Matrix of f -> f(g (s,t)) on the basis t^2, st, s^2 (index = power of s).
Matrix sym2(const Matrix& g);
Matrix rep_S(const Pair& phi);  // throws on singular factors
// Index of coordinate k in Sym2 x Sym2: (power of s, power of u).
std::pair<int, int> sym_index(const lattice::Point& e);

struct Projection {
    MonomialParam param;
    FormSpan span;
};
Projection toric_projection(const std::vector<int>& drop);

// Nullity of the evaluation matrix of all degree-2 monomials on random torus
// points, for the lattice polygon of a Table L row ('a'..'h').
int i2_dimension_check(char tag, std::uint64_t seed = 1);
int i2_dimension(const MonomialParam& p, std::uint64_t seed, std::size_t samples = 0);

// Exponent list for a polygon: its lattice points, in the Table coordinate
// order when the polygon is the full 3x3 square, else sorted.
MonomialParam param_for_polygon(const lattice::Polygon& p);

}  // namespace celestial::segre
