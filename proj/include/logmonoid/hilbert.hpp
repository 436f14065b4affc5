#pragma once

#include "logmonoid/cone.hpp"

#include <vector>

namespace logmonoid {

/// Pulling triangulation of a pointed cone: each simplex is a list of indices
/// into c.rays() of size c.dimension().
std::vector<std::vector<std::size_t>> triangulate(const RationalCone& c);

/// Hilbert basis of c ∩ Z^n for a pointed cone, lex-sorted.
std::vector<Vector> hilbert_basis(const RationalCone& c);

/// Hilbert basis of c ∩ L where L is spanned by the linearly independent
/// columns `lattice_basis` (vectors of length n).
std::vector<Vector> hilbert_basis(const RationalCone& c, const std::vector<Vector>& lattice_basis);

/// Generators of the monoid c ∩ Z^n for any cone: the Hilbert basis of the
/// pointed quotient lifted back, plus ± the lineality basis. Lex-sorted.
std::vector<Vector> lattice_generators(const RationalCone& c);

/// Basis of {x in Z^m : A x = 0, T x ≡ 0 mod moduli} (row i of T taken mod moduli[i]).
std::vector<Vector> congruence_lattice(std::size_t m, const std::vector<Vector>& a_rows,
                                       const std::vector<Vector>& t_rows, const Vector& moduli);

/// Hilbert basis of {x in N^m : A x = 0, T x ≡ 0 mod moduli}.
std::vector<Vector> nonneg_kernel_hilbert_basis(std::size_t m, const std::vector<Vector>& a_rows,
                                                const std::vector<Vector>& t_rows = {},
                                                const Vector& moduli = {});

}  // namespace logmonoid
