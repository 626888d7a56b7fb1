#pragma once
// Quadratic forms in named coordinate frames and spans of them.

#include "celestial/exact.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace celestial {

// q(v) = v^T A v with A symmetric. labels[k] is the subscript printed for
// coordinate k, frame is the variable letter ('y' or 'x').
struct QuadraticForm {
    Matrix A;
    char frame = 'y';
    std::vector<int> labels;

    QuadraticForm() = default;
    QuadraticForm(Matrix a, char f, std::vector<int> l);

    std::size_t dim() const { return A.rows(); }
    // Coefficients of the monomials v_i v_j (i <= j) in row-major order.
    Vec coeffs() const;
    static QuadraticForm from_coeffs(const Vec& c, char frame, const std::vector<int>& labels);
    QI eval(const Vec& v) const;
    // Pullback along v = M w, into a frame with the given letter and labels.
    QuadraticForm pullback(const Matrix& M, char frame, const std::vector<int>& labels) const;
    std::string str() const;

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
        return a.A == b.A && a.frame == b.frame && a.labels == b.labels;
    }
};

std::vector<int> iota_labels(std::size_t n);

// Parses expressions such as "y0^2 - y1*y2", "2*y1*y2-y5*y6" or "1/4 x0^2 - x1^2".
// Variables must be of the given frame letter and their subscripts must appear in labels.
QuadraticForm parse_form(const std::string& text, char frame, const std::vector<int>& labels);

struct FormSpan {
    char frame = 'y';
    std::vector<int> labels;
    std::vector<QuadraticForm> basis;

    std::size_t dim() const { return basis.size(); }
    std::vector<Vec> coeff_vectors() const;
    bool contains(const QuadraticForm& q) const;
    bool same_span(const FormSpan& other) const;
    // Span of the given forms with dependent members removed.
    static FormSpan of(std::vector<QuadraticForm> forms, char frame, const std::vector<int>& labels);
    static FormSpan parse(const std::vector<std::string>& forms, char frame, const std::vector<int>& labels);
};

nlohmann::json to_json(const QI& z);
nlohmann::json to_json(const QuadraticForm& q);
nlohmann::json to_json(const FormSpan& s);

// Symmetric matrix with (i,j) scaled by sqrt(sq[i] * sq[j]); sq[i] > 0 are
// squares of positive scale factors. Throws std::domain_error when a nonzero
// entry would pick up an irrational factor.
Matrix scale_by_roots(const Matrix& A, const std::vector<Rational>& sq);

}  // namespace celestial
