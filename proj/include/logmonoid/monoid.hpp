#pragma once

#include "logmonoid/abelian_group.hpp"
#include "logmonoid/cone.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace logmonoid {

/// Commutative monoid on ngens generators modulo relations u = v (exponent
/// vectors in N^ngens).
struct MonoidPresentation {
    std::size_t ngens = 0;
    std::vector<std::pair<Vector, Vector>> relations;

    void validate() const;
};

/// Fine monoid: the submonoid of an ambient group generated by finitely many
/// elements. The ambient group may be larger than the group generated by the
/// monoid; operations that depend on M^gp use gp().
class AffineMonoid {
public:
    AffineMonoid() = default;
    /// Generators are reduced modulo the torsion factors; their order is kept.
    AffineMonoid(AbelianGroup ambient, std::vector<Vector> generators);

    const AbelianGroup& ambient() const { return ambient_; }
    const std::vector<Vector>& generators() const { return generators_; }

    Subgroup gp() const { return Subgroup(ambient_, generators_); }

    /// Lex-first exponent vector n >= 0 with sum n_i g_i = element.
    std::optional<Vector> witness(const Vector& element) const;
    /// Same answer as witness(); with units present it works modulo the units.
    bool contains(const Vector& element) const;

    /// Free parts of the generators as points of R^free_rank.
    std::vector<Vector> free_parts() const;
    /// Cone spanned by the free parts.
    RationalCone cone() const;

    /// Nonzero generators, deduplicated and lex-sorted.
    std::vector<Vector> canonical_generators() const;

private:
    struct UnitReduction;
    const UnitReduction& unit_reduction() const;

    AbelianGroup ambient_;
    std::vector<Vector> generators_;
    mutable std::shared_ptr<const UnitReduction> reduction_;
};

/// Same ambient group and the same subset (two-sided generator membership).
bool same_subset(const AffineMonoid& a, const AffineMonoid& b);
bool contains_monoid(const AffineMonoid& big, const AffineMonoid& small);

struct GroupImages {
    AbelianGroup group;
    std::vector<Vector> images;
};

GroupImages grothendieck_group(const MonoidPresentation& p);
AffineMonoid integralize(const MonoidPresentation& p);

/// Presentation by the generators of M and a finite generating set of the
/// congruence {(u, v) : sum u_i g_i = sum v_i g_i}.
MonoidPresentation presentation(const AffineMonoid& m);

/// Saturation of m inside the group generated by `group_generators`, which
/// must contain m. Returned with minimal generators.
AffineMonoid saturate_within(const AffineMonoid& m, const std::vector<Vector>& group_generators);
AffineMonoid saturate(const AffineMonoid& m);

/// Indices of generators that are units.
std::vector<std::size_t> unit_generator_indices(const AffineMonoid& m);
Subgroup units(const AffineMonoid& m);
/// Image of m in ambient / units.
AffineMonoid sharpen(const AffineMonoid& m);

/// Greedy removal in lex order of generators lying in the monoid of the others.
AffineMonoid minimal_generators(const AffineMonoid& m);

struct MonoidPredicates {
    bool is_sharp = false;
    bool is_saturated = false;
    bool is_toric = false;
    bool is_free = false;
};
MonoidPredicates predicates(const AffineMonoid& m);
bool is_sharp(const AffineMonoid& m);
bool is_saturated(const AffineMonoid& m);
bool is_toric(const AffineMonoid& m);

/// A face of the monoid given by the generators it contains. The matching prime
/// ideal is its complement.
struct Face {
    std::vector<std::size_t> generator_indices;
};
/// All faces, ordered by size then indices: first the units, last M itself.
std::vector<Face> spec(const AffineMonoid& m);

std::size_t characteristic_rank(const AffineMonoid& m);

/// The monoid sigma^dual ∩ Z^n.
AffineMonoid monoid_of_cone(const RationalCone& sigma);

/// Homomorphism of affine monoids given by the images of the source generators.
class MonoidHom {
public:
    /// Throws DomainError(not_a_homomorphism) unless every image lies in the
    /// target and all relations among the source generators are respected.
    MonoidHom(AffineMonoid source, AffineMonoid target, std::vector<Vector> images);

    const AffineMonoid& source() const { return source_; }
    const AffineMonoid& target() const { return target_; }
    const std::vector<Vector>& images() const { return images_; }

    /// Image of an integer combination of source generators.
    Vector apply_combination(std::span<const Integer> coefficients) const;
    /// phi^gp between the gp coordinates of source().gp() and target().gp().
    GroupHom gp_map() const;

    static MonoidHom zero_from(const AffineMonoid& source, const AffineMonoid& target);
    static MonoidHom identity(const AffineMonoid& m);

private:
    AffineMonoid source_, target_;
    std::vector<Vector> images_;
};

/// Presentation-mode pushout: generators of M then N, relations of both and
/// f(l) = g(l) for each generator l, with f(l), g(l) given as exponent vectors.
MonoidPresentation pushout_presentation(const MonoidPresentation& m, const MonoidPresentation& n,
                                        const std::vector<Vector>& f_exponents,
                                        const std::vector<Vector>& g_exponents);

enum class PushoutMode { presentation, fine, fs };

/// Fine pushout: images of the generators of M and then N (in order) in
/// (M^gp ⊕ N^gp) / {(f(l), -g(l))}. fs saturates it.
AffineMonoid pushout(const MonoidHom& f, const MonoidHom& g, PushoutMode mode);

/// The map from the fine pushout of f: L -> M, g: L -> N induced by u: M -> T
/// and v: N -> T. Throws DomainError(not_a_homomorphism) unless u f = v g.
MonoidHom pushout_induced(const MonoidHom& f, const MonoidHom& g, const MonoidHom& u, const MonoidHom& v);
MonoidPresentation pushout_presentation(const MonoidHom& f, const MonoidHom& g);

/// {(m, n) : f(m) = g(n)} inside the direct sum of the ambient groups.
AffineMonoid fiber_product(const MonoidHom& f, const MonoidHom& g);

/// M ⊕ N.
AffineMonoid direct_sum(const AffineMonoid& m, const AffineMonoid& n);

}  // namespace logmonoid
