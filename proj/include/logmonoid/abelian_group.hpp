#pragma once

#include "logmonoid/integer.hpp"
#include "logmonoid/smith.hpp"

#include <optional>
#include <span>
#include <vector>

namespace logmonoid {

/// Finitely generated abelian group Z^r ⊕ Z/d1 ⊕ ... ⊕ Z/dk in invariant-factor
/// form (every di >= 2, di | d(i+1)).
///
/// Elements are coordinate vectors of length r + k: the free part first, then one
/// residue per invariant factor, kept in [0, di).
class AbelianGroup {
public:
    AbelianGroup() = default;
    AbelianGroup(std::size_t free_rank, Vector invariant_factors);

    static AbelianGroup free(std::size_t rank) { return AbelianGroup(rank, {}); }

    std::size_t free_rank() const { return free_rank_; }
    const Vector& invariant_factors() const { return factors_; }
    std::size_t torsion_count() const { return factors_.size(); }
    std::size_t dimension() const { return free_rank_ + factors_.size(); }

    bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
    bool is_torsion_free() const { return factors_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }

    Vector reduce(Vector v) const;
    Vector zero() const { return zero_vector(dimension()); }
    bool is_zero_element(std::span<const Integer> v) const;
    /// Throws DomainError unless v has dimension() entries.
    void check_element(std::span<const Integer> v) const;

    /// Lifted presentation: Z^dimension modulo these vectors (di times the unit
    /// vector of torsion coordinate i).
    std::vector<Vector> relation_vectors() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

private:
    std::size_t free_rank_ = 0;
    Vector factors_;
};

std::string to_string(const AbelianGroup& g);

/// Product of the invariant factors (1 for a torsion-free group).
Integer torsion_order(const AbelianGroup& g);

bool is_prime(const Integer& p);

/// True iff p = 0 or p does not divide the torsion order. p must be 0 or prime.
bool is_order_invertible(const AbelianGroup& g, const Integer& p);

/// Throws DomainError(invalid_characteristic) unless p is 0 or a prime.
void check_characteristic(const Integer& p);

/// Z^rows modulo the column span of A.
AbelianGroup cokernel(const Matrix& a);

/// The projection Z^n -> Z^n / span(relations), in invariant-factor coordinates.
struct QuotientMap {
    AbelianGroup group;
    Matrix transform;  // group.dimension() x n
    Matrix section;    // n x group.dimension(): lifts of the standard generators

    Vector operator()(std::span<const Integer> x) const;
};

QuotientMap quotient_map(std::size_t n, const std::vector<Vector>& relations);

/// The quotient G / <elements>, with the projection acting on G's coordinates.
QuotientMap quotient_map(const AbelianGroup& g, const std::vector<Vector>& elements);

/// The subgroup of an ambient group generated by a finite list of elements,
/// with coordinates in invariant-factor form.
class Subgroup {
public:
    Subgroup(AbelianGroup ambient, std::vector<Vector> generators);

    const AbelianGroup& ambient() const { return ambient_; }
    const AbelianGroup& group() const { return quotient_.group; }
    const std::vector<Vector>& generators() const { return generators_; }

    /// Local coordinates of generator i.
    Vector generator_image(std::size_t i) const;
    /// Integer relations among the generators (a generating set of the lattice).
    const std::vector<Vector>& relations() const { return relations_; }

    Vector to_ambient(std::span<const Integer> local) const;
    /// Integer combination of the generators representing a local element.
    Vector local_to_combination(std::span<const Integer> local) const { return quotient_.section.apply(local); }
    /// Some integer combination c of the generators with sum c_i g_i = element.
    std::optional<Vector> combination(const Vector& element) const;
    std::optional<Vector> to_local(const Vector& element) const;
    bool contains(const Vector& element) const { return combination(element).has_value(); }

private:
    AbelianGroup ambient_;
    std::vector<Vector> generators_;
    Matrix lifted_;  // [generators | ambient relation vectors]
    SmithDecomposition lifted_snf_;
    std::vector<Vector> relations_;
    QuotientMap quotient_;
};

/// Homomorphism of finitely generated abelian groups given on lifted coordinates:
/// column j is the image of the j-th standard generator of the source.
struct GroupHom {
    AbelianGroup source;
    AbelianGroup target;
    Matrix matrix;  // target.dimension() x source.dimension()

    Vector operator()(std::span<const Integer> x) const { return target.reduce(matrix.apply(x)); }
};

AbelianGroup kernel(const GroupHom& f);
QuotientMap cokernel_map(const GroupHom& f);
inline AbelianGroup cokernel(const GroupHom& f) { return cokernel_map(f).group; }

/// G ⊕ H with embeddings given on lifted coordinates. Coordinates are kept
/// (free parts, then torsion of G, then torsion of H) when the torsion factors
/// still form a divisibility chain.
struct DirectSum {
    AbelianGroup group;
    Matrix left;   // group.dimension() x G.dimension()
    Matrix right;  // group.dimension() x H.dimension()
};
DirectSum direct_sum(const AbelianGroup& g, const AbelianGroup& h);

/// Number of invariant factors divisible by p plus the free rank: dim_{F_p}(G ⊗ F_p).
std::size_t p_rank(const AbelianGroup& g, const Integer& p);

}  // namespace logmonoid
