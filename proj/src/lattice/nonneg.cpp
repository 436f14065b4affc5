#include "logmonoid/nonneg.hpp"
#include "logmonoid/cone.hpp"
#include "logmonoid/errors.hpp"
#include "logmonoid/hilbert.hpp"
#include "logmonoid/smith.hpp"

namespace logmonoid {
namespace {

// Lex-first search when the columns generate a pointed cone: a positive
// grading bounds every coordinate.
class BoundedSearch {
public:
    BoundedSearch(const NonnegSystem& s, std::vector<std::size_t> cols) : s_(s), cols_(std::move(cols)) {
        const std::size_t rows = s_.a.rows(), trows = s_.t.rows(), k = cols_.size();
        std::vector<Vector> free_cols;
        for (std::size_t j : cols_) free_cols.push_back(s_.a.column(j));
        w_ = RationalCone::from_generators(rows, free_cols).grading();
        for (std::size_t j = 0; j < k; ++j) weight_.push_back(dot(w_, free_cols[j]));
        // Suffix data: cone and lattice of the columns j..k-1.
        for (std::size_t j = 0; j <= k; ++j) {
            std::vector<Vector> tail(free_cols.begin() + static_cast<std::ptrdiff_t>(j), free_cols.end());
            suffix_cone_.push_back(RationalCone::from_generators(rows, tail));
            Matrix lat(rows + trows, (k - j) + trows);
            for (std::size_t c = j; c < k; ++c) {
                for (std::size_t i = 0; i < rows; ++i) lat(i, c - j) = s_.a(i, cols_[c]);
                for (std::size_t i = 0; i < trows; ++i) lat(rows + i, c - j) = s_.t(i, cols_[c]);
            }
            for (std::size_t i = 0; i < trows; ++i) lat(rows + i, (k - j) + i) = s_.moduli[i];
            suffix_lattice_.push_back(lat);
            suffix_snf_.push_back(lat.empty() ? SmithDecomposition{} : smith_normal_form(lat));
        }
    }

    std::optional<Vector> run() {
        Vector x(cols_.size());
        if (!feasible(0, s_.b, s_.c)) return std::nullopt;
        if (!search(0, s_.b, s_.c, x)) return std::nullopt;
        Vector full = zero_vector(s_.a.cols());
        for (std::size_t j = 0; j < cols_.size(); ++j) full[cols_[j]] = x[j];
        return full;
    }

private:
    bool congruent(const Vector& c) const {
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!mpz_divisible_p(c[i].get_mpz_t(), s_.moduli[i].get_mpz_t())) return false;
        return true;
    }

    bool feasible(std::size_t j, const Vector& b, const Vector& c) const {
        if (!suffix_cone_[j].contains(b)) return false;
        const Matrix& lat = suffix_lattice_[j];
        if (lat.empty()) return is_zero(b) && congruent(c);
        Vector rhs = b;
        rhs.insert(rhs.end(), c.begin(), c.end());
        return integer_solve(suffix_snf_[j], lat.cols(), rhs).has_value();
    }

    bool search(std::size_t j, const Vector& b, const Vector& c, Vector& x) {
        const std::size_t k = cols_.size();
        if (j == k) return is_zero(b) && congruent(c);
        const std::size_t col = cols_[j];
        Integer limit = dot(w_, b) / weight_[j];
        Vector bb = b, cc = c;
        for (Integer v = 0; v <= limit; ++v) {
            if (v > 0) {
                for (std::size_t i = 0; i < bb.size(); ++i) bb[i] -= s_.a(i, col);
                for (std::size_t i = 0; i < cc.size(); ++i) cc[i] -= s_.t(i, col);
            }
            if (!feasible(j + 1, bb, cc)) continue;
            x[j] = v;
            if (search(j + 1, bb, cc, x)) return true;
        }
        x[j] = 0;
        return false;
    }

    const NonnegSystem& s_;
    std::vector<std::size_t> cols_;
    Vector w_;
    std::vector<Integer> weight_;
    std::vector<RationalCone> suffix_cone_;
    std::vector<Matrix> suffix_lattice_;
    std::vector<SmithDecomposition> suffix_snf_;
};

// General case: minimal solutions are the height-one elements of the Hilbert
// basis of {(x, t) >= 0 : A x = t b, T x ≡ t c}; the lex-first solution is minimal.
std::optional<Vector> homogenized_search(const NonnegSystem& s) {
    const std::size_t m = s.a.cols();
    std::vector<Vector> a_rows, t_rows;
    for (std::size_t i = 0; i < s.a.rows(); ++i) {
        Vector r = s.a.row(i);
        r.push_back(-s.b[i]);
        a_rows.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < s.t.rows(); ++i) {
        Vector r = s.t.row(i);
        r.push_back(-s.c[i]);
        t_rows.push_back(std::move(r));
    }
    std::optional<Vector> best;
    for (const auto& h : nonneg_kernel_hilbert_basis(m + 1, a_rows, t_rows, s.moduli)) {
        if (h[m] != 1) continue;
        Vector x(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(m));
        if (!best || lex_less(x, *best)) best = std::move(x);
    }
    return best;
}

}  // namespace

std::optional<Vector> solve_nonneg(const NonnegSystem& s) {
    const std::size_t m = s.a.cols();
    if (s.b.size() != s.a.rows() || s.c.size() != s.t.rows() || s.moduli.size() != s.t.rows() ||
        (s.t.rows() > 0 && s.t.cols() != m))
        throw DomainError(ErrorCode::dimension_mismatch, "inconsistent system dimensions");
    for (const auto& d : s.moduli)
        if (d < 1) throw DomainError(ErrorCode::invalid_argument, "moduli must be positive");
    // Columns vanishing in A only matter through the congruences.
    std::vector<std::size_t> cols;
    bool torsion_only = false;
    for (std::size_t j = 0; j < m; ++j) {
        bool zero_free = true;
        for (std::size_t i = 0; i < s.a.rows(); ++i)
            if (sgn(s.a(i, j))) zero_free = false;
        if (!zero_free) {
            cols.push_back(j);
            continue;
        }
        bool zero_tors = true;
        for (std::size_t i = 0; i < s.t.rows(); ++i)
            if (!mpz_divisible_p(s.t(i, j).get_mpz_t(), s.moduli[i].get_mpz_t())) zero_tors = false;
        if (!zero_tors) torsion_only = true;
    }
    if (torsion_only) return homogenized_search(s);
    if (cols.empty()) {
        bool ok = is_zero(s.b);
        for (std::size_t i = 0; ok && i < s.c.size(); ++i)
            ok = mpz_divisible_p(s.c[i].get_mpz_t(), s.moduli[i].get_mpz_t());
        if (!ok) return std::nullopt;
        return zero_vector(m);
    }
    std::vector<Vector> free_cols;
    for (std::size_t j : cols) free_cols.push_back(s.a.column(j));
    if (RationalCone::from_generators(s.a.rows(), free_cols).is_pointed()) return BoundedSearch(s, cols).run();
    return homogenized_search(s);
}

std::optional<Vector> solve_nonneg(const Matrix& a, const Vector& b) {
    NonnegSystem s;
    s.a = a;
    s.b = b;
    s.t = Matrix(0, a.cols());
    return solve_nonneg(s);
}

}  // namespace logmonoid
