#pragma once

#include "logmonoid/integer.hpp"

#include <vector>

namespace logmonoid::kernels {

/// Data for enumerating Z^n ∩ {sum λ_i r_i : 0 <= λ_i < 1} for a full-dimensional
/// simplicial cone with rays r_1..r_n. With U·R·V = D (Smith form of the ray
/// matrix R), residue classes of Z^n / R Z^n are indexed by digit vectors a with
/// 0 <= a_i < D_i and the matching point is R·frac(V D^{-1} a).
struct Parallelepiped {
    Matrix rays;      // R, columns are the rays
    Matrix right;     // V
    Vector diag;      // D_1 | ... | D_n
    Integer volume;   // |det R| = number of points
};

Parallelepiped prepare_parallelepiped(const std::vector<Vector>& rays);

/// Coefficients λ of the class with linear index t in [0, volume) (mixed radix
/// over diag), as numerators over diag.back().
Vector parallelepiped_coefficients(const Parallelepiped& p, Integer t);
Vector parallelepiped_point(const Parallelepiped& p, Integer t);

namespace serial {
/// All nonzero parallelepiped points, ordered by class index.
std::vector<Vector> parallelepiped_points(const Parallelepiped& p);
/// candidates sorted by nondecreasing degree; mask[i] = 1 iff candidates[i] is
/// not c_j + z for some j with degree[j] < degree[i] and z in the cone {f.z >= 0}.
std::vector<char> irreducible_mask(const std::vector<Vector>& candidates, const std::vector<Integer>& degree,
                                   const std::vector<Vector>& facets);
}  // namespace serial

namespace omp {
std::vector<Vector> parallelepiped_points(const Parallelepiped& p);
std::vector<char> irreducible_mask(const std::vector<Vector>& candidates, const std::vector<Integer>& degree,
                                   const std::vector<Vector>& facets);
}  // namespace omp

}  // namespace logmonoid::kernels
