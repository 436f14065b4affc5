#pragma once

#include "logmonoid/integer.hpp"

#include <vector>

namespace logmonoid {

/// Rational polyhedral cone in R^n with both descriptions kept in canonical form.
///
/// V-side: cone = cone(rays) + span(lineality). H-side: cone = {x : f.x >= 0 for
/// f in facets, e.x = 0 for e in equations}. Rays are primitive and orthogonal to
/// the lineality space; facet normals are primitive and orthogonal to the span of
/// the equations; both lists are lex-sorted. Lineality and equations are Hermite
/// bases of saturated lattices.
class RationalCone {
public:
    RationalCone() = default;

    static RationalCone from_generators(std::size_t ambient_rank, const std::vector<Vector>& generators);
    static RationalCone from_inequalities(std::size_t ambient_rank, const std::vector<Vector>& inequalities,
                                          const std::vector<Vector>& equations = {});
    static RationalCone zero(std::size_t ambient_rank) { return from_generators(ambient_rank, {}); }
    static RationalCone whole_space(std::size_t ambient_rank) { return from_inequalities(ambient_rank, {}); }

    std::size_t ambient_rank() const { return n_; }
    const std::vector<Vector>& rays() const { return rays_; }
    const std::vector<Vector>& lineality() const { return lineality_; }
    const std::vector<Vector>& facet_normals() const { return facets_; }
    const std::vector<Vector>& equations() const { return equations_; }

    std::size_t dimension() const { return n_ - equations_.size(); }
    bool is_pointed() const { return lineality_.empty(); }  // strongly convex
    bool is_full_dimensional() const { return equations_.empty(); }
    bool is_simplicial() const { return is_pointed() && rays_.size() == dimension(); }

    bool contains(const Vector& x) const;
    bool contains_relative_interior(const Vector& x) const;
    /// rays plus ± lineality basis.
    std::vector<Vector> generators() const;

    /// {y : y.x >= 0 for all x in the cone}.
    RationalCone dual() const;

    /// A linear functional positive on every nonzero point of a pointed cone.
    Vector grading() const;

    friend bool operator==(const RationalCone& a, const RationalCone& b) {
        return a.n_ == b.n_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Vector> rays_, lineality_, facets_, equations_;
};

/// Result of a double-description run on {x : A x >= 0, E x = 0}.
struct DoubleDescription {
    std::vector<Vector> lineality;  // spans the lineality space (not canonical)
    std::vector<Vector> rays;       // extreme rays modulo lineality, primitive
};

DoubleDescription double_description(std::size_t n, const std::vector<Vector>& inequalities,
                                     const std::vector<Vector>& equations);

/// Primitive integer vector proportional to the orthogonal projection of v onto
/// the complement of span(basis).
Vector project_orthogonal(const Vector& v, const std::vector<Vector>& basis);

/// All faces (including the minimal face and the cone itself), sorted by
/// dimension then by ray lists.
std::vector<RationalCone> faces(const RationalCone& c);

/// Smallest face of c containing the point x (x must lie in c).
RationalCone face_containing(const RationalCone& c, const Vector& x);

bool is_face(const RationalCone& c, const RationalCone& f);

RationalCone intersect(const RationalCone& a, const RationalCone& b);

/// Index of the lattice generated by the rays inside the saturated lattice they
/// span. Requires a simplicial cone.
Integer multiplicity(const RationalCone& c);
bool is_regular(const RationalCone& c);

}  // namespace logmonoid
