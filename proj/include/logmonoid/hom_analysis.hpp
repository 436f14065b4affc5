#pragma once

#include "logmonoid/monoid.hpp"

#include <string>
#include <vector>

namespace logmonoid {

AbelianGroup gp_kernel(const MonoidHom& phi);
AbelianGroup gp_cokernel(const MonoidHom& phi);

/// Monoid-side verdict of the chart criterion. The smoothness of the scheme
/// factor is taken as a hypothesis.
struct SmoothnessVerdict {
    bool smooth = false;
    bool etale = false;
    AbelianGroup ker;
    AbelianGroup coker;
    Integer residue_char;
    bool gp_injective = false;         // Ker(phi^gp) = 0
    bool kernel_meets_monoid = false;  // some nonzero p in P has phi(p) = 0
};

/// p must be 0 or a prime.
SmoothnessVerdict kato_criterion(const MonoidHom& phi, const Integer& p);

/// Both monoids toric, phi^gp injective with finite cokernel, and Q the
/// saturation of phi(P) inside Q^gp.
bool is_kummer(const MonoidHom& phi);

/// Sharpening of the fine pushout of Q <- P -> 0.
AffineMonoid relative_characteristic(const MonoidHom& phi);

enum class NeatClass { zariski, etale, fppf };
const char* to_string(NeatClass c);
NeatClass neat_chart_class(const MonoidHom& phi, const Integer& p);

/// dim over F_p of Coker(phi^gp) ⊗ F_p (free rank when p = 0).
std::size_t differential_rank(const MonoidHom& phi, const Integer& p);

/// Monomial part of the log differentials: one symbol per target generator,
/// relations from the target's relations and from phi(P), and the resulting
/// group Q^gp / phi(P^gp) in invariant-factor form.
struct DifferentialPresentation {
    std::size_t symbols = 0;
    std::vector<Vector> relations;  // rows: sum r_j d(q_j) = 0
    AbelianGroup reduced;
    std::size_t rank = 0;           // differential_rank at the given p
};
DifferentialPresentation universal_differential_presentation(const MonoidHom& phi, const Integer& p);

}  // namespace logmonoid
