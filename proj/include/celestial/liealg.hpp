#pragma once
// sl2 + sl2, its real structures, the derivative of the Sym2 x Sym2 action and
// the solver for invariant quadratic forms.

#include "celestial/exact.hpp"
#include "celestial/quadric.hpp"

#include <string>
#include <vector>

namespace celestial::liealg {

struct LieElement {
    Matrix left = Matrix(2, 2), right = Matrix(2, 2);

    LieElement() = default;
    LieElement(Matrix l, Matrix r);  // throws unless both are traceless 2x2

    LieElement operator+(const LieElement& o) const { return {left + o.left, right + o.right}; }
    LieElement operator-(const LieElement& o) const { return {left - o.left, right - o.right}; }
    friend LieElement operator*(const QI& c, const LieElement& m) { return {m.left * c, m.right * c}; }
    friend bool operator==(const LieElement& a, const LieElement& b) { return a.left == b.left && a.right == b.right; }

    Vec flat() const;  // 8 entries, left then right, row-major
    std::string str() const;
};

namespace gens {
Matrix t();  // [[0,1],[0,0]]
Matrix q();  // [[0,0],[1,0]]
Matrix s();  // diag(1,-1)
Matrix r();  // [[0,-1],[1,0]]
Matrix e();  // zero
LieElement t1();
LieElement q1();
LieElement s1();
LieElement r1();
LieElement t2();
LieElement q2();
LieElement s2();
LieElement r2();
}  // namespace gens

LieElement bracket(const LieElement& x, const LieElement& y);
LieElement lie_sigma(int i, const LieElement& m);

// Derivative at the identity of the Sym2 x Sym2 action, in y0..y8 order.
Matrix d_sym2(const Matrix& m);
Matrix d_rep(const LieElement& m);

bool is_subalgebra(const std::vector<LieElement>& basis);

struct NamedSubalgebra {
    std::string label;  // e.g. "<t1,s1>" or "<s1+a*s2> (a=2)"
    std::vector<LieElement> basis;
};
// The classification list of subalgebras, with the parameter instantiated at 1, 2 and i.
std::vector<NamedSubalgebra> classification_list();

// Solves D^T A + A D = 0 for A in the span of ambient, for every D.
FormSpan invariant_forms(const std::vector<Matrix>& Ds, const FormSpan& ambient);
FormSpan invariant_forms(const std::vector<LieElement>& g, const FormSpan& ambient);

// sigma_i on forms of the 9-dimensional frame (permutation plus conjugation).
// Fixed-point basis of the induced antilinear involution; throws if the span
// is not closed under it.
FormSpan real_basis(const FormSpan& space, int i);

// Named subalgebras accepted by the command line.
struct AlgebraPreset {
    std::string name;
    std::string description;
    std::vector<LieElement> basis;
};
const std::vector<AlgebraPreset>& presets();

}  // namespace celestial::liealg
