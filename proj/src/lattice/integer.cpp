#include "logmonoid/integer.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace logmonoid {

Vector make_vector(std::initializer_list<long> values) {
    Vector v;
    v.reserve(values.size());
    for (long x : values) v.emplace_back(x);
    return v;
}

Vector zero_vector(std::size_t n) { return Vector(n, Integer(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v = zero_vector(n);
    v[i] = 1;
    return v;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    assert(a.size() == b.size());
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vector add(std::span<const Integer> a, std::span<const Integer> b) {
    assert(a.size() == b.size());
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector sub(std::span<const Integer> a, std::span<const Integer> b) {
    assert(a.size() == b.size());
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector scale(const Integer& c, std::span<const Integer> a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Vector negate(std::span<const Integer> a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

bool is_zero(std::span<const Integer> a) {
    return std::all_of(a.begin(), a.end(), [](const Integer& x) { return sgn(x) == 0; });
}

Integer content(std::span<const Integer> a) {
    Integer g = 0;
    for (const auto& x : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Vector primitive(std::span<const Integer> a) {
    Integer g = content(a);
    Vector r(a.begin(), a.end());
    if (g > 1)
        for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return r;
}

bool lex_less(const Vector& a, const Vector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_unique(std::vector<Vector>& vs) {
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

std::string to_string(const Vector& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i].get_str();
    }
    os << ']';
    return os.str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        assert(r.size() == cols_);
        for (long x : r) data_.emplace_back(x);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        assert(columns[j].size() == rows);
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<const Vector> rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        assert(rows[i].size() == cols);
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<Vector> Matrix::columns() const {
    std::vector<Vector> cs;
    cs.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) cs.push_back(column(j));
    return cs;
}

std::vector<Vector> Matrix::row_list() const {
    std::vector<Vector> rs;
    rs.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) rs.push_back(row(i));
    return rs;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vector Matrix::apply(std::span<const Integer> x) const {
    assert(x.size() == cols_);
    Vector y(rows_, Integer(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn(x[j])) y[i] += (*this)(i, j) * x[j];
    return y;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void Matrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& c) {
    if (sgn(c) == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += c * (*this)(src, j);
}

void Matrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& c) {
    if (sgn(c) == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += c * (*this)(i, src);
}

void Matrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void Matrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ',';
        os << logmonoid::to_string(row(i));
    }
    os << ']';
    return os.str();
}

}  // namespace logmonoid
