#include "celestial/exact.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace celestial {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_perfect_square(const Rational& q) {
    if (sgn(q) < 0) return false;
    return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

Rational exact_sqrt(const Rational& q) {
    if (!is_perfect_square(q)) throw std::domain_error("not a rational square: " + q.get_str());
    mpz_class n = sqrt(q.get_num()), d = sqrt(q.get_den());
    return Rational(n, d);
}

GaussianRational GaussianRational::inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero");
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (o.is_real()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_real()) {
        if (sgn(o.re_) == 0) throw std::domain_error("division by zero");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

QI parse_gaussian(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != ' ') s += c;
    if (s.empty()) throw std::invalid_argument("empty number");
    auto term = [](const std::string& t) -> QI {
        if (t.empty()) throw std::invalid_argument("bad number");
        if (t.back() != 'i') return parse_rational(t[0] == '+' ? t.substr(1) : t);
        std::string c = t.substr(0, t.size() - 1);
        if (!c.empty() && c.back() == '*') c.pop_back();
        if (c.empty() || c == "+") return QI(0, 1);
        if (c == "-") return QI(0, -1);
        return QI(0, parse_rational(c[0] == '+' ? c.substr(1) : c));
    };
    // Split at a sign that is not the leading one.
    for (std::size_t k = 1; k < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e') return term(s.substr(0, k)) + term(s.substr(k));
    }
    return term(s);
}

std::string to_string(const QI& z) {
    if (z.is_real()) return z.re().get_str();
    std::string im;
    if (z.im() == 1)
        im = "i";
    else if (z.im() == -1)
        im = "-i";
    else
        im = z.im().get_str() + "i";
    if (sgn(z.re()) == 0) return im;
    return z.re().get_str() + (sgn(z.im()) > 0 ? "+" : "") + im;
}

std::ostream& operator<<(std::ostream& os, const QI& z) { return os << to_string(z); }

Matrix::Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<QI>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    a_.reserve(r_ * c_);
    for (auto& row : rows) {
        if (row.size() != c_) throw std::invalid_argument("ragged matrix literal");
        a_.insert(a_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(const Vec& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vec Matrix::column(std::size_t j) const {
    Vec v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::conj() const {
    Matrix m = *this;
    for (auto& z : m.a_) z = z.conj();
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const QI& z) { return z.is_zero(); });
}

bool Matrix::is_real() const {
    return std::all_of(a_.begin(), a_.end(), [](const QI& z) { return z.is_real(); });
}

bool Matrix::is_symmetric() const {
    if (r_ != c_) return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = i + 1; j < c_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Matrix& Matrix::operator*=(const QI& s) {
    for (auto& z : a_) z *= s;
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& z : m.a_) z = -z;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("shape mismatch in product");
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            const QI& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_; ++j)
                if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
        }
    return m;
}

Vec operator*(const Matrix& a, const Vec& v) {
    if (a.c_ != v.size()) throw std::invalid_argument("shape mismatch in product");
    Vec out(a.r_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k)
            if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << "]";
    }
    return os << "]";
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        QI inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            QI f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

QI determinant(Matrix m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows();
    QI det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        QI inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            QI f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::vector<Vec> kernel(const Matrix& m) {
    Matrix r = m;
    auto piv = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t span_rank(const std::vector<Vec>& vs) {
    if (vs.empty()) return 0;
    return rank(Matrix::from_rows(vs, vs.front().size()));
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
    auto all = basis;
    all.push_back(v);
    return span_rank(all) == span_rank(basis);
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    std::size_t ra = span_rank(a), rb = span_rank(b);
    if (ra != rb) return false;
    auto all = a;
    all.insert(all.end(), b.begin(), b.end());
    return span_rank(all) == ra;
}

Vec coordinates(const std::vector<Vec>& basis, const Vec& v) {
    std::size_t n = v.size(), k = basis.size();
    Matrix aug(n, k + 1);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
    for (std::size_t i = 0; i < n; ++i) aug(i, k) = v[i];
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == k) throw std::domain_error("vector outside span");
    if (piv.size() != k) throw std::invalid_argument("dependent basis");
    Vec c(k);
    for (std::size_t r = 0; r < k; ++r) c[piv[r]] = aug(r, k);
    return c;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const QI& z) { return z.is_zero(); });
}

bool proportional(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    if (is_zero(a) || is_zero(b)) return is_zero(a) && is_zero(b);
    return span_rank({a, b}) == 1;
}

Congruence congruence_diagonalize(const Matrix& A) {
    if (!A.is_square()) throw std::invalid_argument("congruence_diagonalize: matrix is not square");
    if (!A.is_real()) throw std::invalid_argument("congruence_diagonalize: complex entries; move the form to a real frame first");
    if (!A.is_symmetric()) throw std::invalid_argument("congruence_diagonalize: matrix is not symmetric");
    std::size_t n = A.rows();
    Matrix D = A, P = Matrix::identity(n);
    // Simultaneous row/column operations; P accumulates the column operations.
    auto add_col = [&](std::size_t dst, std::size_t src, const QI& f) {
        for (std::size_t i = 0; i < n; ++i) D(i, dst) += f * D(i, src);
        for (std::size_t j = 0; j < n; ++j) D(dst, j) += f * D(src, j);
        for (std::size_t i = 0; i < n; ++i) P(i, dst) += f * P(i, src);
    };
    auto swap_idx = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < n; ++i) std::swap(D(i, a), D(i, b));
        for (std::size_t j = 0; j < n; ++j) std::swap(D(a, j), D(b, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(P(i, a), P(i, b));
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (D(k, k).is_zero()) {
            std::size_t j = k + 1;
            while (j < n && D(j, j).is_zero()) ++j;
            if (j < n) {
                swap_idx(k, j);
            } else {
                j = k + 1;
                while (j < n && D(k, j).is_zero()) ++j;
                if (j == n) continue;
                add_col(k, j, 1);  // e_k -> e_k + e_j gives pivot 2 D(k,j)
            }
        }
        QI inv = D(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (D(k, i).is_zero()) continue;
            add_col(i, k, -D(k, i) * inv);
        }
    }
    return {D, P};
}

Signature signature(const Matrix& A) {
    auto c = congruence_diagonalize(A);
    Signature s;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        int sg = sgn(c.D(i, i).re());
        if (sg > 0)
            ++s.pos;
        else if (sg < 0)
            ++s.neg;
        else
            ++s.zero;
    }
    if (s.pos > s.neg) std::swap(s.pos, s.neg);
    return s;
}

std::string to_string(const Signature& s) {
    std::ostringstream os;
    os << "(" << s.pos << "," << s.neg;
    if (s.zero) os << ";" << s.zero;
    os << ")";
    return os.str();
}

}  // namespace celestial
