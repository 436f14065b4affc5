#include "logmonoid/smith.hpp"

#include "logmonoid/errors.hpp"

#include <algorithm>

namespace logmonoid {
namespace {

struct Pivot {
    std::size_t row;
    std::size_t col;
};

std::optional<Pivot> find_pivot(const Matrix& d, std::size_t t) {
    std::optional<Pivot> best;
    Integer best_abs;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (sgn(d(i, j)) == 0) continue;
            Integer a = abs(d(i, j));
            if (!best || a < best_abs) {
                best = Pivot{i, j};
                best_abs = a;
            }
        }
    return best;
}

class SmithWork {
public:
    explicit SmithWork(const Matrix& a)
        : d_(a), u_(Matrix::identity(a.rows())), uinv_(Matrix::identity(a.rows())),
          v_(Matrix::identity(a.cols())) {}

    void swap_rows(std::size_t a, std::size_t b) {
        d_.swap_rows(a, b);
        u_.swap_rows(a, b);
        uinv_.swap_cols(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        d_.swap_cols(a, b);
        v_.swap_cols(a, b);
    }
    void add_row(std::size_t dst, std::size_t src, const Integer& c) {
        d_.add_row_multiple(dst, src, c);
        u_.add_row_multiple(dst, src, c);
        uinv_.add_col_multiple(src, dst, -c);
    }
    void add_col(std::size_t dst, std::size_t src, const Integer& c) {
        d_.add_col_multiple(dst, src, c);
        v_.add_col_multiple(dst, src, c);
    }
    void negate_row(std::size_t i) {
        d_.negate_row(i);
        u_.negate_row(i);
        uinv_.negate_col(i);
    }

    // Returns true when row t and column t are clear apart from the pivot.
    bool eliminate(std::size_t t) {
        bool clean = true;
        const Integer p = d_(t, t);
        for (std::size_t i = t + 1; i < d_.rows(); ++i) {
            if (sgn(d_(i, t)) == 0) continue;
            Integer q;
            mpz_tdiv_q(q.get_mpz_t(), d_(i, t).get_mpz_t(), p.get_mpz_t());
            add_row(i, t, -q);
            if (sgn(d_(i, t)) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < d_.cols(); ++j) {
            if (sgn(d_(t, j)) == 0) continue;
            Integer q;
            mpz_tdiv_q(q.get_mpz_t(), d_(t, j).get_mpz_t(), p.get_mpz_t());
            add_col(j, t, -q);
            if (sgn(d_(t, j)) != 0) clean = false;
        }
        return clean;
    }

    // Row index of an entry of the active block not divisible by the pivot.
    std::optional<std::size_t> indivisible_row(std::size_t t) const {
        const Integer& p = d_(t, t);
        for (std::size_t i = t + 1; i < d_.rows(); ++i)
            for (std::size_t j = t + 1; j < d_.cols(); ++j)
                if (!mpz_divisible_p(d_(i, j).get_mpz_t(), p.get_mpz_t())) return i;
        return std::nullopt;
    }

    SmithDecomposition run() {
        const std::size_t steps = std::min(d_.rows(), d_.cols());
        Vector diag;
        for (std::size_t t = 0; t < steps; ++t) {
            for (;;) {
                auto piv = find_pivot(d_, t);
                if (!piv) return finish(std::move(diag));
                swap_rows(t, piv->row);
                swap_cols(t, piv->col);
                if (!eliminate(t)) continue;
                if (auto i = indivisible_row(t)) {
                    add_row(t, *i, Integer(1));
                    continue;
                }
                break;
            }
            if (sgn(d_(t, t)) < 0) negate_row(t);
            diag.push_back(d_(t, t));
        }
        return finish(std::move(diag));
    }

private:
    SmithDecomposition finish(Vector diag) {
        return SmithDecomposition{std::move(u_), std::move(uinv_), std::move(diag), std::move(v_)};
    }

    Matrix d_, u_, uinv_, v_;
};

}  // namespace

SmithDecomposition smith_normal_form(const Matrix& a) { return SmithWork(a).run(); }

std::vector<Vector> kernel_vectors(const Matrix& a) {
    const std::size_t n = a.cols();
    if (a.rows() == 0) {
        std::vector<Vector> basis;
        for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i));
        return basis;
    }
    auto snf = smith_normal_form(a);
    std::vector<Vector> basis;
    for (std::size_t j = snf.rank(); j < n; ++j) basis.push_back(snf.right.column(j));
    return hermite_basis(n, std::move(basis));
}

Matrix kernel_basis(const Matrix& a) {
    auto vs = kernel_vectors(a);
    return Matrix::from_columns(a.cols(), vs);
}

std::vector<Vector> hermite_basis(std::size_t dim, std::vector<Vector> rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(), [](const Vector& v) { return is_zero(v); }),
               rows.end());
    std::size_t r = 0;  // next pivot row
    std::vector<std::size_t> pivot_cols;
    for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
        // Euclid on column c among rows r..end until a single nonzero remains.
        for (;;) {
            std::optional<std::size_t> best;
            for (std::size_t i = r; i < rows.size(); ++i)
                if (sgn(rows[i][c]) != 0 && (!best || abs(rows[i][c]) < abs(rows[*best][c])))
                    best = i;
            if (!best) break;
            std::swap(rows[r], rows[*best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (sgn(rows[i][c]) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
                for (std::size_t k = c; k < dim; ++k) rows[i][k] -= q * rows[r][k];
                if (sgn(rows[i][c]) != 0) done = false;
            }
            if (done) break;
        }
        if (r < rows.size() && sgn(rows[r][c]) != 0) {
            if (sgn(rows[r][c]) < 0)
                for (auto& x : rows[r]) x = -x;
            pivot_cols.push_back(c);
            ++r;
        }
    }
    rows.resize(r);
    for (std::size_t k = 0; k < r; ++k) {
        const std::size_t c = pivot_cols[k];
        for (std::size_t i = 0; i < k; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[k][c].get_mpz_t());
            if (sgn(q) == 0) continue;
            for (std::size_t j = c; j < dim; ++j) rows[i][j] -= q * rows[k][j];
        }
    }
    return rows;
}

std::vector<Vector> saturated_basis(std::size_t dim, const std::vector<Vector>& vectors) {
    if (vectors.empty()) return {};
    auto orth = kernel_vectors(Matrix::from_rows(dim, vectors));
    return kernel_vectors(Matrix::from_rows(dim, orth));
}

std::optional<Vector> integer_solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw DomainError(ErrorCode::dimension_mismatch, "integer_solve: size mismatch");
    if (a.rows() == 0) return zero_vector(a.cols());
    return integer_solve(smith_normal_form(a), a.cols(), b);
}

std::optional<Vector> integer_solve(const SmithDecomposition& snf, std::size_t n, const Vector& b) {
    if (b.empty()) return zero_vector(n);
    Vector c = snf.left.apply(b);
    Vector w = zero_vector(n);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < snf.rank()) {
            if (!mpz_divisible_p(c[i].get_mpz_t(), snf.diag[i].get_mpz_t())) return std::nullopt;
            mpz_divexact(w[i].get_mpz_t(), c[i].get_mpz_t(), snf.diag[i].get_mpz_t());
        } else if (sgn(c[i]) != 0) {
            return std::nullopt;
        }
    }
    return snf.right.apply(w);
}

std::size_t rank(const Matrix& a) {
    // Fraction-free Gaussian elimination.
    Matrix m = a;
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                Integer v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

}  // namespace logmonoid
