#pragma once

#include "logmonoid/cone.hpp"

#include <optional>
#include <vector>

namespace logmonoid {

/// A fan of strongly convex cones stored by its maximal cones. Rays are global,
/// primitive and lex-sorted; each cone is a sorted list of ray indices and the
/// cone list is sorted.
class Fan {
public:
    Fan() = default;

    /// Validates that every cone is strongly convex, that the listed rays are
    /// exactly its extremal rays and that any two cones meet in a common face.
    /// Non-maximal cones are dropped.
    static Fan from_cones(std::size_t ambient_rank, const std::vector<RationalCone>& cones);
    static Fan from_cone(const RationalCone& c) { return from_cones(c.ambient_rank(), {c}); }

    std::size_t ambient_rank() const { return n_; }
    const std::vector<Vector>& rays() const { return rays_; }
    const std::vector<std::vector<std::size_t>>& cones() const { return cones_; }
    const RationalCone& cone(std::size_t i) const { return cone_objects_[i]; }
    const std::vector<RationalCone>& cone_list() const { return cone_objects_; }

    bool support_contains(const Vector& v) const;
    bool is_simplicial() const;
    bool is_regular() const;

    friend bool operator==(const Fan& a, const Fan& b) {
        return a.n_ == b.n_ && a.rays_ == b.rays_ && a.cones_ == b.cones_;
    }

private:
    friend Fan stellar_subdivision(const Fan& f, const Vector& v);
    // No pairwise validation; cones contained in another cone are dropped.
    static Fan assemble(std::size_t ambient_rank, const std::vector<RationalCone>& cones);

    std::size_t n_ = 0;
    std::vector<Vector> rays_;
    std::vector<std::vector<std::size_t>> cones_;
    std::vector<RationalCone> cone_objects_;  // parallel to cones_
};

/// True iff the two cones intersect in a face of each.
bool meet_in_common_face(const RationalCone& a, const RationalCone& b);

/// Every cone containing v is replaced by the cones spanned by v and its facets
/// not containing v. An existing ray leaves the fan unchanged.
Fan stellar_subdivision(const Fan& f, const Vector& v);

/// Stellar subdivision at the primitive ray sum of every face of dimension >= 2,
/// in order of decreasing dimension.
Fan barycentric_subdivision(const Fan& f);

/// Regular refinement: simplicialize, then repeatedly subdivide the cone of
/// largest multiplicity at its parallelepiped point of least coefficient sum.
Fan resolve(const Fan& f);

/// The nonzero lattice point of the half-open parallelepiped of a simplicial
/// cone with minimal coefficient sum (ties lex), or nothing for a regular cone.
std::optional<Vector> resolution_point(const RationalCone& c);

}  // namespace logmonoid
