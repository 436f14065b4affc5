#include "logmonoid/monoid.hpp"
#include "logmonoid/errors.hpp"
#include "logmonoid/hilbert.hpp"
#include "logmonoid/nonneg.hpp"
#include "logmonoid/smith.hpp"

#include <algorithm>

namespace logmonoid {

void MonoidPresentation::validate() const {
    for (const auto& [u, v] : relations) {
        if (u.size() != ngens || v.size() != ngens)
            throw DomainError(ErrorCode::dimension_mismatch, "relation exponent vectors must have ngens entries");
        for (const auto* w : {&u, &v})
            for (const auto& x : *w)
                if (sgn(x) < 0) throw DomainError(ErrorCode::invalid_argument, "exponents must be nonnegative");
    }
}

AffineMonoid::AffineMonoid(AbelianGroup ambient, std::vector<Vector> generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators)) {
    for (auto& g : generators_) {
        ambient_.check_element(g);
        g = ambient_.reduce(std::move(g));
    }
}

std::optional<Vector> AffineMonoid::witness(const Vector& element) const {
    ambient_.check_element(element);
    const std::size_t f = ambient_.free_rank(), t = ambient_.torsion_count(), m = generators_.size();
    NonnegSystem s;
    s.a = Matrix(f, m);
    s.t = Matrix(t, m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < f; ++i) s.a(i, j) = generators_[j][i];
        for (std::size_t i = 0; i < t; ++i) s.t(i, j) = generators_[j][f + i];
    }
    s.b.assign(element.begin(), element.begin() + static_cast<std::ptrdiff_t>(f));
    s.c.assign(element.begin() + static_cast<std::ptrdiff_t>(f), element.end());
    s.moduli = ambient_.invariant_factors();
    return solve_nonneg(s);
}

// The unit generators span a subgroup contained in the monoid, so membership
// can be decided in the quotient, where the remaining generators span a
// pointed cone.
struct AffineMonoid::UnitReduction {
    std::optional<QuotientMap> quotient;
    std::shared_ptr<const AffineMonoid> rest;
};

const AffineMonoid::UnitReduction& AffineMonoid::unit_reduction() const {
    if (!reduction_) {
        auto r = std::make_shared<UnitReduction>();
        auto unit_idx = unit_generator_indices(*this);
        if (!unit_idx.empty()) {
            std::vector<Vector> unit_gens, others;
            for (std::size_t i = 0; i < generators_.size(); ++i)
                (std::binary_search(unit_idx.begin(), unit_idx.end(), i) ? unit_gens : others).push_back(generators_[i]);
            r->quotient = quotient_map(ambient_, unit_gens);
            for (auto& g : others) g = (*r->quotient)(g);
            r->rest = std::make_shared<const AffineMonoid>(r->quotient->group, std::move(others));
        }
        reduction_ = std::move(r);
    }
    return *reduction_;
}

bool AffineMonoid::contains(const Vector& element) const {
    const UnitReduction& r = unit_reduction();
    if (!r.quotient) return witness(element).has_value();
    ambient_.check_element(element);
    return r.rest->contains((*r.quotient)(element));
}

std::vector<Vector> AffineMonoid::free_parts() const {
    std::vector<Vector> out;
    for (const auto& g : generators_)
        out.emplace_back(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(ambient_.free_rank()));
    return out;
}

RationalCone AffineMonoid::cone() const { return RationalCone::from_generators(ambient_.free_rank(), free_parts()); }

std::vector<Vector> AffineMonoid::canonical_generators() const {
    std::vector<Vector> out;
    for (const auto& g : generators_)
        if (!is_zero(g)) out.push_back(g);
    sort_unique(out);
    return out;
}

bool contains_monoid(const AffineMonoid& big, const AffineMonoid& small) {
    if (!(big.ambient() == small.ambient())) return false;
    for (const auto& g : small.generators())
        if (!big.contains(g)) return false;
    return true;
}

bool same_subset(const AffineMonoid& a, const AffineMonoid& b) {
    return contains_monoid(a, b) && contains_monoid(b, a);
}

GroupImages grothendieck_group(const MonoidPresentation& p) {
    p.validate();
    std::vector<Vector> rel;
    for (const auto& [u, v] : p.relations) rel.push_back(sub(u, v));
    QuotientMap q = quotient_map(p.ngens, rel);
    GroupImages out{q.group, {}};
    for (std::size_t i = 0; i < p.ngens; ++i) out.images.push_back(q(unit_vector(p.ngens, i)));
    return out;
}

AffineMonoid integralize(const MonoidPresentation& p) {
    GroupImages g = grothendieck_group(p);
    AffineMonoid m(g.group, g.images);
    return AffineMonoid(g.group, m.canonical_generators());
}

MonoidPresentation presentation(const AffineMonoid& m) {
    const auto& gens = m.generators();
    const std::size_t k = gens.size(), f = m.ambient().free_rank();
    std::vector<Vector> a_rows, t_rows;
    for (std::size_t i = 0; i < m.ambient().dimension(); ++i) {
        Vector row(2 * k);
        for (std::size_t j = 0; j < k; ++j) {
            row[j] = gens[j][i];
            row[k + j] = -gens[j][i];
        }
        (i < f ? a_rows : t_rows).push_back(std::move(row));
    }
    MonoidPresentation p;
    p.ngens = k;
    std::vector<Vector> pairs;
    for (const auto& h : nonneg_kernel_hilbert_basis(2 * k, a_rows, t_rows, m.ambient().invariant_factors())) {
        Vector u(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(k));
        Vector v(h.begin() + static_cast<std::ptrdiff_t>(k), h.end());
        if (u == v) continue;
        if (lex_less(v, u)) std::swap(u, v);
        u.insert(u.end(), v.begin(), v.end());
        pairs.push_back(std::move(u));
    }
    sort_unique(pairs);
    for (const auto& w : pairs)
        p.relations.emplace_back(Vector(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)),
                                 Vector(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()));
    return p;
}

namespace {
AffineMonoid minimal_generators_impl(const AffineMonoid& m, bool saturated);
}

AffineMonoid saturate_within(const AffineMonoid& m, const std::vector<Vector>& group_generators) {
    Subgroup gamma(m.ambient(), group_generators);
    const AbelianGroup& g = gamma.group();
    const std::size_t f = g.free_rank();
    std::vector<Vector> free_images;
    for (const auto& x : m.generators()) {
        auto local = gamma.to_local(x);
        if (!local) throw DomainError(ErrorCode::invalid_argument, "monoid is not contained in the given group");
        free_images.emplace_back(local->begin(), local->begin() + static_cast<std::ptrdiff_t>(f));
    }
    std::vector<Vector> gens;
    if (f > 0) {
        for (auto v : lattice_generators(RationalCone::from_generators(f, free_images))) {
            v.resize(g.dimension());
            gens.push_back(gamma.to_ambient(v));
        }
    }
    for (std::size_t i = 0; i < g.torsion_count(); ++i) gens.push_back(gamma.to_ambient(unit_vector(g.dimension(), f + i)));
    return minimal_generators_impl(AffineMonoid(m.ambient(), gens), true);
}

AffineMonoid saturate(const AffineMonoid& m) { return saturate_within(m, m.generators()); }

std::vector<std::size_t> unit_generator_indices(const AffineMonoid& m) {
    // A generator is a unit iff its free part lies in the lineality space of
    // the cone: a strictly positive relation then inverts it up to torsion.
    RationalCone c = m.cone();
    auto parts = m.free_parts();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (c.contains(negate(parts[i]))) out.push_back(i);
    return out;
}

namespace {
std::vector<Vector> unit_generators(const AffineMonoid& m) {
    std::vector<Vector> out;
    for (std::size_t i : unit_generator_indices(m)) out.push_back(m.generators()[i]);
    return out;
}
}  // namespace

Subgroup units(const AffineMonoid& m) { return Subgroup(m.ambient(), unit_generators(m)); }

AffineMonoid sharpen(const AffineMonoid& m) {
    QuotientMap q = quotient_map(m.ambient(), unit_generators(m));
    auto unit_idx = unit_generator_indices(m);
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < m.generators().size(); ++i)
        if (!std::binary_search(unit_idx.begin(), unit_idx.end(), i)) gens.push_back(q(m.generators()[i]));
    AffineMonoid s(q.group, gens);
    return AffineMonoid(q.group, s.canonical_generators());
}

namespace {

std::vector<Vector> greedy_minimal(const AbelianGroup& ambient, std::vector<Vector> gens) {
    for (std::size_t i = 0; i < gens.size();) {
        std::vector<Vector> others = gens;
        others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
        if (AffineMonoid(ambient, others).contains(gens[i])) gens = std::move(others);
        else ++i;
    }
    return gens;
}

}  // namespace

// Same result as greedy removal over all generators. A unit is only a sum of
// units, and a non-unit is redundant iff its class modulo the units is; there
// the monoid is sharp, so only classes of smaller degree can contribute.
AffineMonoid minimal_generators(const AffineMonoid& m) { return minimal_generators_impl(m, false); }

namespace {

// With `saturated` set, membership in the sharp quotient is membership in its
// cone, so g is redundant iff g - h lies in the cone for a smaller h.
AffineMonoid minimal_generators_impl(const AffineMonoid& m, bool saturated) {
    const std::vector<Vector> gens = m.canonical_generators();
    AffineMonoid canon(m.ambient(), gens);
    const auto unit_idx = unit_generator_indices(canon);
    std::vector<Vector> unit_gens, rest;
    for (std::size_t i = 0; i < gens.size(); ++i)
        (std::binary_search(unit_idx.begin(), unit_idx.end(), i) ? unit_gens : rest).push_back(gens[i]);
    std::vector<Vector> kept = greedy_minimal(m.ambient(), unit_gens);
    if (!rest.empty()) {
        QuotientMap q = quotient_map(m.ambient(), unit_gens);
        std::vector<Vector> img;
        for (const auto& g : rest) img.push_back(q(g));
        AffineMonoid sharp(q.group, img);
        const RationalCone sharp_cone = sharp.cone();
        const Vector w = sharp_cone.grading();
        const std::size_t f = q.group.free_rank();
        std::vector<Integer> deg;
        for (const auto& p : sharp.free_parts()) deg.push_back(dot(w, p));
        std::vector<bool> removed(rest.size(), false);
        for (std::size_t i = 0; i < rest.size(); ++i) {
            std::vector<Vector> lower;
            bool duplicate = false;
            for (std::size_t j = 0; j < rest.size(); ++j) {
                if (j == i || removed[j]) continue;
                if (img[j] == img[i]) duplicate = true;
                if (deg[j] < deg[i]) lower.push_back(img[j]);
            }
            if (duplicate || lower.empty()) {
                removed[i] = duplicate;
            } else if (saturated) {
                for (const auto& h : lower) {
                    Vector d = sub(img[i], h);
                    d.resize(f);
                    if (sharp_cone.contains(d)) {
                        removed[i] = true;
                        break;
                    }
                }
            } else {
                removed[i] = AffineMonoid(q.group, lower).witness(img[i]).has_value();
            }
        }
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (!removed[i]) kept.push_back(rest[i]);
    }
    sort_unique(kept);
    return AffineMonoid(m.ambient(), kept);
}

}  // namespace

bool is_sharp(const AffineMonoid& m) {
    for (std::size_t i : unit_generator_indices(m))
        if (!m.ambient().is_zero_element(m.generators()[i])) return false;
    return true;
}

bool is_saturated(const AffineMonoid& m) { return contains_monoid(m, saturate(m)); }

bool is_toric(const AffineMonoid& m) {
    return is_sharp(m) && m.gp().group().is_torsion_free() && is_saturated(m);
}

MonoidPredicates predicates(const AffineMonoid& m) {
    MonoidPredicates p;
    p.is_sharp = is_sharp(m);
    p.is_saturated = is_saturated(m);
    p.is_toric = p.is_sharp && p.is_saturated && m.gp().group().is_torsion_free();
    AffineMonoid s = minimal_generators(sharpen(m));
    p.is_free = Subgroup(s.ambient(), s.generators()).relations().empty();
    return p;
}

std::vector<Face> spec(const AffineMonoid& m) {
    const auto parts = m.free_parts();
    std::vector<Face> out;
    if (m.ambient().free_rank() == 0) {
        Face all;
        for (std::size_t i = 0; i < parts.size(); ++i) all.generator_indices.push_back(i);
        out.push_back(all);
        return out;
    }
    for (const auto& face : faces(m.cone())) {
        Face fc;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (face.contains(parts[i])) fc.generator_indices.push_back(i);
        out.push_back(std::move(fc));
    }
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.generator_indices.size() != b.generator_indices.size())
            return a.generator_indices.size() < b.generator_indices.size();
        return a.generator_indices < b.generator_indices;
    });
    return out;
}

std::size_t characteristic_rank(const AffineMonoid& m) {
    const auto parts = m.free_parts();
    if (parts.empty() || m.ambient().free_rank() == 0) return 0;
    std::size_t r = rank(Matrix::from_columns(m.ambient().free_rank(), parts));
    return r - m.cone().lineality().size();
}

AffineMonoid monoid_of_cone(const RationalCone& sigma) {
    return AffineMonoid(AbelianGroup::free(sigma.ambient_rank()), lattice_generators(sigma.dual()));
}

AffineMonoid direct_sum(const AffineMonoid& m, const AffineMonoid& n) {
    DirectSum ds = direct_sum(m.ambient(), n.ambient());
    std::vector<Vector> gens;
    for (const auto& g : m.generators()) gens.push_back(ds.left.apply(g));
    for (const auto& g : n.generators()) gens.push_back(ds.right.apply(g));
    return AffineMonoid(ds.group, gens);
}

}  // namespace logmonoid
