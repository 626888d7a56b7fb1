#include "celestial/quadric.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace celestial {

QuadraticForm::QuadraticForm(Matrix a, char f, std::vector<int> l) : A(std::move(a)), frame(f), labels(std::move(l)) {
    if (!A.is_square() || !A.is_symmetric()) throw std::invalid_argument("quadratic form matrix must be symmetric");
    if (labels.size() != A.rows()) throw std::invalid_argument("label count mismatch");
}

std::vector<int> iota_labels(std::size_t n) {
    std::vector<int> l(n);
    for (std::size_t k = 0; k < n; ++k) l[k] = static_cast<int>(k);
    return l;
}

Vec QuadraticForm::coeffs() const {
    Vec c;
    std::size_t n = dim();
    c.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) c.push_back(i == j ? A(i, i) : A(i, j) * QI(2));
    return c;
}

QuadraticForm QuadraticForm::from_coeffs(const Vec& c, char frame, const std::vector<int>& labels) {
    std::size_t n = labels.size();
    if (c.size() != n * (n + 1) / 2) throw std::invalid_argument("coefficient vector length mismatch");
    Matrix A(n, n);
    std::size_t k = 0;
    QI half(Rational(1, 2));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j, ++k) {
            if (i == j)
                A(i, i) = c[k];
            else
                A(i, j) = A(j, i) = c[k] * half;
        }
    return {A, frame, labels};
}

QI QuadraticForm::eval(const Vec& v) const {
    Vec Av = A * v;
    QI s;
    for (std::size_t k = 0; k < v.size(); ++k) s += v[k] * Av[k];
    return s;
}

QuadraticForm QuadraticForm::pullback(const Matrix& M, char f, const std::vector<int>& l) const {
    return {M.transpose() * A * M, f, l};
}

std::string QuadraticForm::str() const {
    std::ostringstream os;
    std::size_t n = dim();
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            QI c = i == j ? A(i, i) : A(i, j) * QI(2);
            if (c.is_zero()) continue;
            std::string mono = std::string(1, frame) + std::to_string(labels[i]);
            mono += i == j ? "^2" : "*" + std::string(1, frame) + std::to_string(labels[j]);
            bool neg = c.is_real() && sgn(c.re()) < 0;
            if (neg) c = -c;
            if (!first) os << (neg ? " - " : " + ");
            else if (neg) os << "-";
            first = false;
            if (c != QI(1)) {
                if (c.is_real())
                    os << to_string(c) << "*";
                else
                    os << "(" << to_string(c) << ")*";
            }
            os << mono;
        }
    if (first) os << "0";
    return os.str();
}

QuadraticForm parse_form(const std::string& text, char frame, const std::vector<int>& labels) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    std::size_t n = labels.size();
    Matrix A(n, n);
    auto index_of = [&](int sub) {
        auto it = std::find(labels.begin(), labels.end(), sub);
        if (it == labels.end()) throw std::invalid_argument("unknown variable subscript in: " + text);
        return static_cast<std::size_t>(it - labels.begin());
    };
    std::vector<std::string> terms;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == '(') ++depth;
        if (s[k] == ')') --depth;
        if (depth == 0 && k > start && (s[k] == '+' || s[k] == '-') && s[k - 1] != '(') {
            terms.push_back(s.substr(start, k - start));
            start = k;
        }
    }
    terms.push_back(s.substr(start));
    QI half(Rational(1, 2));
    for (auto t : terms) {
        if (t.empty()) throw std::invalid_argument("empty term in: " + text);
        QI sign = 1;
        if (t[0] == '+' || t[0] == '-') {
            if (t[0] == '-') sign = -1;
            t = t.substr(1);
        }
        std::size_t v = t.find(frame);
        if (v == std::string::npos) throw std::invalid_argument("term without variable in: " + text);
        std::string coef = t.substr(0, v), rest = t.substr(v);
        if (!coef.empty() && coef.back() == '*') coef.pop_back();
        QI c = 1;
        if (!coef.empty()) {
            if (coef.front() == '(' && coef.back() == ')') coef = coef.substr(1, coef.size() - 2);
            c = parse_gaussian(coef);
        }
        c *= sign;
        auto read_var = [&](std::size_t& pos) {
            if (pos >= rest.size() || rest[pos] != frame) throw std::invalid_argument("bad term in: " + text);
            ++pos;
            std::size_t b = pos;
            while (pos < rest.size() && std::isdigit(static_cast<unsigned char>(rest[pos]))) ++pos;
            if (b == pos) throw std::invalid_argument("missing subscript in: " + text);
            return index_of(std::stoi(rest.substr(b, pos - b)));
        };
        std::size_t pos = 0;
        std::size_t i = read_var(pos), j;
        if (rest.compare(pos, 2, "^2") == 0) {
            j = i;
            pos += 2;
        } else {
            if (pos < rest.size() && rest[pos] == '*') ++pos;
            j = read_var(pos);
        }
        if (pos != rest.size()) throw std::invalid_argument("trailing characters in: " + text);
        if (i == j)
            A(i, i) += c;
        else {
            A(i, j) += c * half;
            A(j, i) += c * half;
        }
    }
    return {A, frame, labels};
}

std::vector<Vec> FormSpan::coeff_vectors() const {
    std::vector<Vec> vs;
    for (auto& q : basis) vs.push_back(q.coeffs());
    return vs;
}

bool FormSpan::contains(const QuadraticForm& q) const {
    if (q.labels != labels) return false;
    if (basis.empty()) return q.A.is_zero();
    return in_span(coeff_vectors(), q.coeffs());
}

bool FormSpan::same_span(const FormSpan& other) const {
    if (other.labels != labels) return false;
    if (basis.empty() || other.basis.empty()) return basis.empty() && other.basis.empty();
    return celestial::same_span(coeff_vectors(), other.coeff_vectors());
}

FormSpan FormSpan::of(std::vector<QuadraticForm> forms, char frame, const std::vector<int>& labels) {
    FormSpan s{frame, labels, {}};
    std::vector<Vec> acc;
    for (auto& q : forms) {
        if (q.labels != labels) throw std::invalid_argument("form labels do not match span");
        Vec c = q.coeffs();
        if (is_zero(c) || (!acc.empty() && in_span(acc, c))) continue;
        acc.push_back(c);
        s.basis.push_back(q);
    }
    return s;
}

FormSpan FormSpan::parse(const std::vector<std::string>& forms, char frame, const std::vector<int>& labels) {
    std::vector<QuadraticForm> qs;
    for (auto& f : forms) qs.push_back(parse_form(f, frame, labels));
    return of(std::move(qs), frame, labels);
}

nlohmann::json to_json(const QI& z) { return nlohmann::json::array({z.re().get_str(), z.im().get_str()}); }

nlohmann::json to_json(const QuadraticForm& q) {
    nlohmann::json rows = nlohmann::json::array();
    for (auto& z : q.A.entries()) rows.push_back(to_json(z));
    return rows;
}

nlohmann::json to_json(const FormSpan& s) {
    nlohmann::json j;
    j["frame"] = std::string(1, s.frame);
    j["labels"] = s.labels;
    j["basis"] = nlohmann::json::array();
    j["forms"] = nlohmann::json::array();
    for (auto& q : s.basis) {
        j["basis"].push_back(to_json(q));
        j["forms"].push_back(q.str());
    }
    return j;
}

Matrix scale_by_roots(const Matrix& A, const std::vector<Rational>& sq) {
    std::size_t n = A.rows();
    if (sq.size() != n) throw std::invalid_argument("scale vector length mismatch");
    Matrix B = A;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (A(i, j).is_zero()) continue;
            Rational p = sq[i] * sq[j];
            if (!is_perfect_square(p)) throw std::domain_error("irrational coefficient after scaling");
            B(i, j) = A(i, j) * QI(exact_sqrt(p));
        }
    return B;
}

}  // namespace celestial
