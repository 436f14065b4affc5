#pragma once

#include "logmonoid/integer.hpp"

#include <optional>
#include <vector>

namespace logmonoid {

/// U·A·V = diag(diag, 0, ...), with U, V unimodular and diag[i] | diag[i+1].
struct SmithDecomposition {
    Matrix left;          // U
    Matrix left_inverse;  // U^{-1}, tracked alongside U
    Vector diag;          // nonzero invariants only, positive, length = rank
    Matrix right;         // V

    std::size_t rank() const { return diag.size(); }
};

/// Smith normal form. Pivot: smallest nonzero |entry| of the active block,
/// ties broken by lowest row, then lowest column.
SmithDecomposition smith_normal_form(const Matrix& a);

/// Columns form a lattice basis of {x in Z^n : A x = 0}, in Hermite form.
Matrix kernel_basis(const Matrix& a);
std::vector<Vector> kernel_vectors(const Matrix& a);

/// Canonical (row Hermite normal form) basis of the lattice spanned by `vectors`.
/// Pivots are positive; entries above a pivot lie in [0, pivot).
std::vector<Vector> hermite_basis(std::size_t dim, std::vector<Vector> vectors);

/// Basis of the saturation (span_R ∩ Z^n) of the lattice spanned by `vectors`.
std::vector<Vector> saturated_basis(std::size_t dim, const std::vector<Vector>& vectors);

/// Some integer x with A x = b, if one exists.
std::optional<Vector> integer_solve(const Matrix& a, const Vector& b);

/// Same as integer_solve, reusing a precomputed decomposition of A.
std::optional<Vector> integer_solve(const SmithDecomposition& snf, std::size_t cols, const Vector& b);

std::size_t rank(const Matrix& a);

}  // namespace logmonoid
