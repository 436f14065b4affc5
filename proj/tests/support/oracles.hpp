#pragma once

#include "logmonoid/monoid.hpp"

#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace logmonoid::testing {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);
Vector random_vector(Rng& rng, std::size_t n, long lo, long hi);

/// Pointed full-dimensional cone spanned by `count` random rays with entries in [-bound, bound].
RationalCone random_cone(Rng& rng, std::size_t n, std::size_t count, long bound);
/// A random N-combination of the generators with coefficients in [0, max_coeff].
Vector random_element(Rng& rng, const AffineMonoid& m, long max_coeff);

/// Calls visit on every vector with entries in [0, bound] (length n).
void for_each_box(std::size_t n, long bound, const std::function<void(const Vector&)>& visit);
/// Calls visit on every vector with entries in [-bound, bound].
void for_each_symmetric_box(std::size_t n, long bound, const std::function<void(const Vector&)>& visit);

/// Lex-smallest x >= 0 with A x = b by enumeration of x in [0, bound]^cols.
std::optional<Vector> brute_force_nonneg(const Matrix& a, const Vector& b, long bound);

/// dim over F_p (Q when p = 0) of Z^rows / column span of A, by elimination mod p.
std::size_t cokernel_dimension_mod_p(const Matrix& a, long p);

/// smooth <=> p does not divide gcd(a, b) (every p when p = 0).
bool nodal_smooth_oracle(long a, long b, long p);

/// N-combinations of the generators with coefficients in [0, bound], reduced and deduplicated.
std::vector<Vector> small_elements(const AffineMonoid& m, long bound);

/// Every homomorphism M -> T whose generator images lie in `candidates`.
std::vector<MonoidHom> enumerate_homs(const AffineMonoid& m, const AffineMonoid& t,
                                      const std::vector<Vector>& candidates);

/// The composite u o f on the generators of f's source.
std::vector<Vector> compose_images(const MonoidHom& u, const MonoidHom& f);

struct UniversalPropertyReport {
    std::size_t agreeing_pairs = 0;
    std::size_t disagreeing_pairs = 0;
    std::size_t failures = 0;
};

/// Over all u: M -> T, v: N -> T with images among small elements of T:
/// pairs with u f = v g must factor through the fine pushout, the others must not.
UniversalPropertyReport check_pushout_universal_property(const MonoidHom& f, const MonoidHom& g,
                                                         const AffineMonoid& target, long bound);

struct FiberReport {
    std::size_t solutions = 0;
    std::size_t missing = 0;
    std::size_t bad_generators = 0;
};

/// f: M -> L, g: N -> L with torsion-free ambients. Generators of the fiber
/// product must satisfy f(m) = g(n); every (m, n) with exponents in [0, bound]
/// and f(m) = g(n) must lie in it.
FiberReport check_fiber_product(const MonoidHom& f, const MonoidHom& g, const AffineMonoid& fp, long bound);

}  // namespace logmonoid::testing
