#pragma once
// Exact arithmetic over Q and Q(i) and dense linear algebra on top of it.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace celestial {

using Rational = mpq_class;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);
bool is_perfect_square(const Rational& q);
Rational exact_sqrt(const Rational& q);  // requires is_perfect_square

class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(const Rational& re) : re_(re), im_(0) {}
    GaussianRational(const Rational& re, const Rational& im) : re_(re), im_(im) {}

    static GaussianRational i() { return {0, 1}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational conj() const { return {re_, -im_}; }
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    Rational re_, im_;
};

using QI = GaussianRational;

// Accepts "3", "-1/2", "i", "-i", "2i", "1/2-3/4i", "1+i".
QI parse_gaussian(const std::string& s);
std::string to_string(const QI& z);
std::ostream& operator<<(std::ostream& os, const QI& z);

using Vec = std::vector<QI>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<QI>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix diagonal(const Vec& d);
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    QI& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const QI& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    const std::vector<QI>& entries() const { return a_; }

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;

    Matrix transpose() const;
    Matrix conj() const;
    bool is_zero() const;
    bool is_real() const;
    bool is_symmetric() const;
    bool is_square() const { return r_ == c_; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const QI& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const QI& s) { return a *= s; }
    friend Matrix operator*(const QI& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vec operator*(const Matrix& a, const Vec& v);
    Matrix operator-() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<QI> a_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
Matrix inverse(const Matrix& m);  // throws std::domain_error if singular
QI determinant(Matrix m);

// Basis of {v : M v = 0}, one vector per free column.
std::vector<Vec> kernel(const Matrix& m);

// Span helpers on lists of equal-length vectors.
std::size_t span_rank(const std::vector<Vec>& vs);
bool in_span(const std::vector<Vec>& basis, const Vec& v);
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b);
// Coordinates of v in an independent basis; throws if v is outside the span.
Vec coordinates(const std::vector<Vec>& basis, const Vec& v);

bool is_zero(const Vec& v);
bool proportional(const Vec& a, const Vec& b);

struct Congruence {
    Matrix D;  // diagonal
    Matrix P;  // invertible, P^T A P = D
};

// Symmetric Gaussian elimination over Q. Throws std::invalid_argument unless
// A is square, symmetric and real.
Congruence congruence_diagonalize(const Matrix& A);

struct Signature {
    int pos = 0;
    int neg = 0;
    int zero = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;
};

Signature signature(const Matrix& A);
std::string to_string(const Signature& s);  // "(pos,neg)" or "(pos,neg;zero)" when degenerate

}  // namespace celestial
