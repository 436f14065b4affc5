#include "logmonoid/fan.hpp"
#include "logmonoid/errors.hpp"
#include "logmonoid/kernels.hpp"
#include "logmonoid/smith.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace logmonoid {
namespace {

bool ray_list_less(const RationalCone& a, const RationalCone& b) {
    return std::lexicographical_compare(a.rays().begin(), a.rays().end(), b.rays().begin(), b.rays().end(),
                                        lex_less);
}

// All faces of the fan's cones, deduplicated.
std::vector<RationalCone> all_faces(const Fan& f) {
    std::vector<RationalCone> out;
    for (const auto& c : f.cone_list())
        for (auto& face : faces(c))
            if (std::find(out.begin(), out.end(), face) == out.end()) out.push_back(std::move(face));
    return out;
}

Vector barycenter(const RationalCone& c) {
    Vector s = zero_vector(c.ambient_rank());
    for (const auto& r : c.rays()) s = add(s, r);
    return primitive(s);
}

// Face of highest dimension (ties lex) satisfying pred, with dimension >= 2.
template <class Pred>
std::optional<RationalCone> pick_face(const Fan& f, Pred pred) {
    std::optional<RationalCone> best;
    for (auto& face : all_faces(f)) {
        if (face.dimension() < 2 || !pred(face)) continue;
        if (!best || face.dimension() > best->dimension() ||
            (face.dimension() == best->dimension() && ray_list_less(face, *best)))
            best = std::move(face);
    }
    return best;
}

}  // namespace

bool meet_in_common_face(const RationalCone& a, const RationalCone& b) {
    RationalCone m = intersect(a, b);
    return is_face(a, m) && is_face(b, m);
}

Fan Fan::from_cones(std::size_t n, const std::vector<RationalCone>& input) {
    for (const auto& c : input) {
        if (c.ambient_rank() != n) throw DomainError(ErrorCode::dimension_mismatch, "cone has wrong ambient rank");
        if (!c.is_pointed()) throw DomainError(ErrorCode::not_pointed, "fan cones must be strongly convex");
    }
    for (std::size_t i = 0; i < input.size(); ++i)
        for (std::size_t j = i + 1; j < input.size(); ++j)
            if (!meet_in_common_face(input[i], input[j]))
                throw DomainError(ErrorCode::invalid_argument, "cones do not meet in a common face");
    return assemble(n, input);
}

Fan Fan::assemble(std::size_t n, const std::vector<RationalCone>& input) {
    // In a fan a cone inside another is one of its faces, so containment of
    // the rays decides maximality.
    auto inside = [](const RationalCone& small, const RationalCone& big) {
        for (const auto& r : small.rays())
            if (!big.contains(r)) return false;
        return true;
    };
    std::vector<RationalCone> cones;
    for (std::size_t i = 0; i < input.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < input.size() && !dominated; ++j) {
            if (i == j) continue;
            if (input[i] == input[j]) dominated = j < i;
            else if (inside(input[i], input[j])) dominated = true;
        }
        if (!dominated) cones.push_back(input[i]);
    }
    Fan f;
    f.n_ = n;
    for (const auto& c : cones) f.rays_.insert(f.rays_.end(), c.rays().begin(), c.rays().end());
    sort_unique(f.rays_);
    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> order;
    for (std::size_t k = 0; k < cones.size(); ++k) {
        std::vector<std::size_t> idx;
        for (const auto& r : cones[k].rays())
            idx.push_back(static_cast<std::size_t>(std::lower_bound(f.rays_.begin(), f.rays_.end(), r, lex_less) -
                                                   f.rays_.begin()));
        std::sort(idx.begin(), idx.end());
        order.emplace_back(std::move(idx), k);
    }
    std::sort(order.begin(), order.end());
    for (auto& [idx, k] : order) {
        f.cones_.push_back(std::move(idx));
        f.cone_objects_.push_back(cones[k]);
    }
    return f;
}

bool Fan::support_contains(const Vector& v) const {
    for (const auto& c : cone_objects_)
        if (c.contains(v)) return true;
    return false;
}

bool Fan::is_simplicial() const {
    for (std::size_t i = 0; i < cones_.size(); ++i)
        if (!cone(i).is_simplicial()) return false;
    return true;
}

bool Fan::is_regular() const {
    for (std::size_t i = 0; i < cones_.size(); ++i)
        if (!logmonoid::is_regular(cone(i))) return false;
    return true;
}

Fan stellar_subdivision(const Fan& f, const Vector& v_in) {
    if (v_in.size() != f.ambient_rank()) throw DomainError(ErrorCode::dimension_mismatch, "point has wrong length");
    if (is_zero(v_in)) throw DomainError(ErrorCode::invalid_argument, "cannot subdivide at the origin");
    Vector v = primitive(v_in);
    if (!f.support_contains(v)) throw DomainError(ErrorCode::outside_support, to_string(v) + " is outside the support");
    if (std::binary_search(f.rays().begin(), f.rays().end(), v, lex_less)) return f;
    std::vector<RationalCone> out;
    for (const auto& c : f.cone_list()) {
        if (!c.contains(v)) {
            out.push_back(c);
            continue;
        }
        for (const auto& normal : c.facet_normals()) {
            if (sgn(dot(normal, v)) == 0) continue;
            std::vector<Vector> gens{v};
            for (const auto& r : c.rays())
                if (sgn(dot(normal, r)) == 0) gens.push_back(r);
            out.push_back(RationalCone::from_generators(f.ambient_rank(), gens));
        }
    }
    return Fan::assemble(f.ambient_rank(), out);
}

Fan barycentric_subdivision(const Fan& f) {
    std::vector<RationalCone> targets;
    for (auto& face : all_faces(f))
        if (face.dimension() >= 2) targets.push_back(std::move(face));
    std::sort(targets.begin(), targets.end(), [](const RationalCone& a, const RationalCone& b) {
        if (a.dimension() != b.dimension()) return a.dimension() > b.dimension();
        return ray_list_less(a, b);
    });
    Fan g = f;
    for (const auto& t : targets) g = stellar_subdivision(g, barycenter(t));
    return g;
}

std::optional<Vector> resolution_point(const RationalCone& c) {
    if (!c.is_simplicial()) throw DomainError(ErrorCode::not_simplicial, "resolution point needs a simplicial cone");
    const std::size_t n = c.ambient_rank();
    std::vector<Vector> span = saturated_basis(n, c.rays());
    Matrix s = Matrix::from_columns(n, span);
    auto snf = smith_normal_form(s);
    std::vector<Vector> local;
    for (const auto& r : c.rays()) {
        auto z = integer_solve(snf, s.cols(), r);
        LOGMONOID_CHECK(z.has_value(), "ray outside its saturated span");
        local.push_back(*z);
    }
    auto p = kernels::prepare_parallelepiped(local);
    std::optional<Vector> best;
    Integer best_sum;
    for (Integer t = 1; t < p.volume; ++t) {
        Vector coef = kernels::parallelepiped_coefficients(p, t);
        Integer sum = 0;
        for (const auto& x : coef) sum += x;
        Vector point = s.apply(kernels::parallelepiped_point(p, t));
        if (!best || sum < best_sum || (sum == best_sum && lex_less(point, *best))) {
            best = std::move(point);
            best_sum = sum;
        }
    }
    return best;
}

Fan resolve(const Fan& f) {
    Fan g = f;
    while (auto face = pick_face(g, [](const RationalCone& c) { return !c.is_simplicial(); }))
        g = stellar_subdivision(g, barycenter(*face));
    LOGMONOID_CHECK(g.is_simplicial(), "simplicialization left a non-simplicial cone");
    for (;;) {
        std::optional<RationalCone> worst;
        Integer worst_mult = 1;
        for (const auto& c : g.cone_list()) {
            Integer m = multiplicity(c);
            if (m > worst_mult || (worst && m == worst_mult && ray_list_less(c, *worst))) {
                worst = c;
                worst_mult = m;
            }
        }
        if (!worst) break;
        auto v = resolution_point(*worst);
        LOGMONOID_CHECK(v.has_value(), "non-regular cone without parallelepiped point");
        Fan next = stellar_subdivision(g, *v);
        auto old_cones = g.cone_list();
        for (const auto& c : next.cone_list()) {
            if (std::find(old_cones.begin(), old_cones.end(), c) != old_cones.end()) continue;
            if (worst->contains(barycenter(c)))
                LOGMONOID_CHECK(multiplicity(c) < worst_mult, "multiplicity failed to decrease");
        }
        g = std::move(next);
    }
    return g;
}

}  // namespace logmonoid
