#pragma once

#include "logmonoid/integer.hpp"

#include <optional>
#include <vector>

namespace logmonoid {

/// A system A x = b, T x ≡ c (mod moduli) over x in N^m. Rows of T pair with
/// entries of c and moduli.
struct NonnegSystem {
    Matrix a;
    Vector b;
    Matrix t;
    Vector c;
    Vector moduli;
};

/// Lexicographically smallest x >= 0 solving the system, if any.
std::optional<Vector> solve_nonneg(const NonnegSystem& system);
std::optional<Vector> solve_nonneg(const Matrix& a, const Vector& b);

}  // namespace logmonoid
