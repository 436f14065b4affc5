#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace logmonoid {

using Integer = mpz_class;
using Vector = std::vector<Integer>;

Vector make_vector(std::initializer_list<long> values);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Vector add(std::span<const Integer> a, std::span<const Integer> b);
Vector sub(std::span<const Integer> a, std::span<const Integer> b);
Vector scale(const Integer& c, std::span<const Integer> a);
Vector negate(std::span<const Integer> a);
bool is_zero(std::span<const Integer> a);

/// gcd of all entries, nonnegative; 0 for the zero vector.
Integer content(std::span<const Integer> a);

/// Divides by the content. The zero vector is returned unchanged.
Vector primitive(std::span<const Integer> a);

bool lex_less(const Vector& a, const Vector& b);

/// Sorts lexicographically and removes duplicates.
void sort_unique(std::vector<Vector>& vs);

std::string to_string(const Vector& v);

/// Dense integer matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    /// Matrix whose columns are the given vectors, each of length `rows`.
    static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);
    static Matrix from_rows(std::size_t cols, std::span<const Vector> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    std::vector<Vector> columns() const;
    std::vector<Vector> row_list() const;

    Matrix transpose() const;
    Vector apply(std::span<const Integer> x) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += c * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& c);
    /// col[dst] += c * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

}  // namespace logmonoid
