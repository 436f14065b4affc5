#include "logmonoid/cone.hpp"
#include "logmonoid/errors.hpp"
#include "logmonoid/smith.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace logmonoid {
namespace {

std::vector<Vector> canonical_directions(const std::vector<Vector>& vs, const std::vector<Vector>& against) {
    std::vector<Vector> out;
    for (const auto& v : vs) {
        Vector p = project_orthogonal(v, against);
        if (!is_zero(p)) out.push_back(std::move(p));
    }
    sort_unique(out);
    return out;
}

void check_lengths(std::size_t n, const std::vector<Vector>& vs) {
    for (const auto& v : vs)
        if (v.size() != n)
            throw DomainError(ErrorCode::dimension_mismatch,
                              "vector " + to_string(v) + " does not have " + std::to_string(n) + " entries");
}

}  // namespace

RationalCone RationalCone::from_generators(std::size_t n, const std::vector<Vector>& generators) {
    check_lengths(n, generators);
    std::vector<Vector> gens;
    for (const auto& g : generators)
        if (!is_zero(g)) gens.push_back(g);
    // H-side from the dual, then V-side back from the H-side.
    DoubleDescription dual = double_description(n, gens, {});
    RationalCone c;
    c.n_ = n;
    c.equations_ = saturated_basis(n, dual.lineality);
    c.facets_ = canonical_directions(dual.rays, c.equations_);
    DoubleDescription primal = double_description(n, c.facets_, c.equations_);
    c.lineality_ = saturated_basis(n, primal.lineality);
    c.rays_ = canonical_directions(primal.rays, c.lineality_);
    return c;
}

RationalCone RationalCone::from_inequalities(std::size_t n, const std::vector<Vector>& inequalities,
                                             const std::vector<Vector>& equations) {
    check_lengths(n, inequalities);
    check_lengths(n, equations);
    DoubleDescription primal = double_description(n, inequalities, equations);
    RationalCone c;
    c.n_ = n;
    c.lineality_ = saturated_basis(n, primal.lineality);
    c.rays_ = canonical_directions(primal.rays, c.lineality_);
    DoubleDescription dual = double_description(n, c.rays_, c.lineality_);
    c.equations_ = saturated_basis(n, dual.lineality);
    c.facets_ = canonical_directions(dual.rays, c.equations_);
    return c;
}

bool RationalCone::contains(const Vector& x) const {
    if (x.size() != n_) throw DomainError(ErrorCode::dimension_mismatch, "point has wrong length");
    for (const auto& e : equations_)
        if (sgn(dot(e, x)) != 0) return false;
    for (const auto& f : facets_)
        if (sgn(dot(f, x)) < 0) return false;
    return true;
}

bool RationalCone::contains_relative_interior(const Vector& x) const {
    if (!contains(x)) return false;
    for (const auto& f : facets_)
        if (sgn(dot(f, x)) == 0) return false;
    return true;
}

std::vector<Vector> RationalCone::generators() const {
    std::vector<Vector> g = rays_;
    for (const auto& l : lineality_) {
        g.push_back(l);
        g.push_back(negate(l));
    }
    return g;
}

RationalCone RationalCone::dual() const {
    RationalCone d;
    d.n_ = n_;
    d.rays_ = facets_;
    d.lineality_ = equations_;
    d.facets_ = rays_;
    d.equations_ = lineality_;
    return d;
}

Vector RationalCone::grading() const {
    if (!is_pointed()) throw DomainError(ErrorCode::not_pointed, "grading requires a pointed cone");
    Vector w = zero_vector(n_);
    for (const auto& f : facets_) w = add(w, f);
    return w;
}

std::vector<RationalCone> faces(const RationalCone& c) {
    const auto& rays = c.rays();
    // Faces correspond to intersections of facet ray-sets.
    std::vector<std::set<std::size_t>> facet_sets;
    for (const auto& f : c.facet_normals()) {
        std::set<std::size_t> s;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (sgn(dot(f, rays[i])) == 0) s.insert(i);
        facet_sets.push_back(std::move(s));
    }
    std::set<std::set<std::size_t>> seen;
    std::vector<std::set<std::size_t>> queue;
    std::set<std::size_t> all;
    for (std::size_t i = 0; i < rays.size(); ++i) all.insert(i);
    seen.insert(all);
    queue.push_back(all);
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (const auto& fs : facet_sets) {
            std::set<std::size_t> meet;
            std::set_intersection(queue[q].begin(), queue[q].end(), fs.begin(), fs.end(),
                                  std::inserter(meet, meet.begin()));
            if (seen.insert(meet).second) queue.push_back(meet);
        }
    }
    std::vector<RationalCone> out;
    for (const auto& s : queue) {
        std::vector<Vector> gens;
        for (std::size_t i : s) gens.push_back(rays[i]);
        for (const auto& l : c.lineality()) {
            gens.push_back(l);
            gens.push_back(negate(l));
        }
        out.push_back(RationalCone::from_generators(c.ambient_rank(), gens));
    }
    std::sort(out.begin(), out.end(), [](const RationalCone& a, const RationalCone& b) {
        if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
        return std::lexicographical_compare(a.rays().begin(), a.rays().end(), b.rays().begin(), b.rays().end(),
                                            lex_less);
    });
    return out;
}

RationalCone face_containing(const RationalCone& c, const Vector& x) {
    std::vector<Vector> eqs = c.equations();
    for (const auto& f : c.facet_normals())
        if (sgn(dot(f, x)) == 0) eqs.push_back(f);
    std::vector<Vector> gens;
    for (const auto& r : c.rays()) {
        bool on = true;
        for (const auto& f : c.facet_normals())
            if (sgn(dot(f, x)) == 0 && sgn(dot(f, r)) != 0) on = false;
        if (on) gens.push_back(r);
    }
    for (const auto& l : c.lineality()) {
        gens.push_back(l);
        gens.push_back(negate(l));
    }
    return RationalCone::from_generators(c.ambient_rank(), gens);
}

bool is_face(const RationalCone& c, const RationalCone& f) {
    for (const auto& g : f.generators())
        if (!c.contains(g)) return false;
    // f is a face iff it equals the smallest face of c containing a relative
    // interior point of f (the sum of its generators).
    Vector inner = zero_vector(c.ambient_rank());
    for (const auto& r : f.rays()) inner = add(inner, r);
    return face_containing(c, inner) == f;
}

RationalCone intersect(const RationalCone& a, const RationalCone& b) {
    std::vector<Vector> ineq = a.facet_normals();
    ineq.insert(ineq.end(), b.facet_normals().begin(), b.facet_normals().end());
    std::vector<Vector> eqs = a.equations();
    eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
    return RationalCone::from_inequalities(a.ambient_rank(), ineq, eqs);
}

Integer multiplicity(const RationalCone& c) {
    if (!c.is_simplicial())
        throw DomainError(ErrorCode::not_simplicial, "multiplicity requires a simplicial cone");
    if (c.rays().empty()) return 1;
    auto snf = smith_normal_form(Matrix::from_columns(c.ambient_rank(), c.rays()));
    Integer m = 1;
    for (const auto& d : snf.diag) m *= d;
    return m;
}

bool is_regular(const RationalCone& c) { return c.is_simplicial() && multiplicity(c) == 1; }

}  // namespace logmonoid
