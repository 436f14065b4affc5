#include "logmonoid/errors.hpp"
#include "logmonoid/hilbert.hpp"
#include "logmonoid/monoid.hpp"

namespace logmonoid {

MonoidHom::MonoidHom(AffineMonoid source, AffineMonoid target, std::vector<Vector> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.generators().size())
        throw DomainError(ErrorCode::dimension_mismatch, "need one image per source generator");
    for (auto& y : images_) {
        target_.ambient().check_element(y);
        y = target_.ambient().reduce(std::move(y));
        if (!target_.contains(y))
            throw DomainError(ErrorCode::not_a_homomorphism,
                              "not a homomorphism: image " + to_string(y) + " is outside the target monoid");
    }
    const Subgroup gp = source_.gp();
    for (const auto& r : gp.relations())
        if (!target_.ambient().is_zero_element(apply_combination(r)))
            throw DomainError(ErrorCode::not_a_homomorphism,
                              "not a homomorphism: relation " + to_string(r) + " is not preserved");
}

Vector MonoidHom::apply_combination(std::span<const Integer> c) const {
    Vector y = target_.ambient().zero();
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (sgn(c[i])) y = add(y, scale(c[i], images_[i]));
    return target_.ambient().reduce(std::move(y));
}

GroupHom MonoidHom::gp_map() const {
    Subgroup p = source_.gp(), q = target_.gp();
    GroupHom h{p.group(), q.group(), Matrix(q.group().dimension(), p.group().dimension())};
    for (std::size_t k = 0; k < p.group().dimension(); ++k) {
        Vector y = apply_combination(p.local_to_combination(unit_vector(p.group().dimension(), k)));
        auto local = q.to_local(y);
        LOGMONOID_CHECK(local.has_value(), "image outside the target group");
        for (std::size_t i = 0; i < local->size(); ++i) h.matrix(i, k) = (*local)[i];
    }
    return h;
}

MonoidHom MonoidHom::zero_from(const AffineMonoid& source, const AffineMonoid& target) {
    return MonoidHom(source, target, std::vector<Vector>(source.generators().size(), target.ambient().zero()));
}

MonoidHom MonoidHom::identity(const AffineMonoid& m) { return MonoidHom(m, m, m.generators()); }

MonoidPresentation pushout_presentation(const MonoidPresentation& m, const MonoidPresentation& n,
                                        const std::vector<Vector>& f_exp, const std::vector<Vector>& g_exp) {
    m.validate();
    n.validate();
    if (f_exp.size() != g_exp.size())
        throw DomainError(ErrorCode::dimension_mismatch, "both maps need one image per base generator");
    MonoidPresentation p;
    p.ngens = m.ngens + n.ngens;
    auto left = [&](const Vector& u) {
        Vector w = u;
        w.resize(p.ngens);
        return w;
    };
    auto right = [&](const Vector& u) {
        Vector w = zero_vector(m.ngens);
        w.insert(w.end(), u.begin(), u.end());
        return w;
    };
    for (const auto& [u, v] : m.relations) p.relations.emplace_back(left(u), left(v));
    for (const auto& [u, v] : n.relations) p.relations.emplace_back(right(u), right(v));
    for (std::size_t i = 0; i < f_exp.size(); ++i) {
        if (f_exp[i].size() != m.ngens || g_exp[i].size() != n.ngens)
            throw DomainError(ErrorCode::dimension_mismatch, "exponent vector has wrong length");
        Vector u = left(f_exp[i]), v = right(g_exp[i]);
        if (u != v) p.relations.emplace_back(std::move(u), std::move(v));
    }
    return p;
}

namespace {

void check_common_source(const MonoidHom& f, const MonoidHom& g) {
    if (!(f.source().ambient() == g.source().ambient()) || f.source().generators() != g.source().generators())
        throw DomainError(ErrorCode::invalid_argument, "pushout maps must share their source");
}

}  // namespace

MonoidPresentation pushout_presentation(const MonoidHom& f, const MonoidHom& g) {
    check_common_source(f, g);
    std::vector<Vector> fe, ge;
    for (const auto& y : f.images()) {
        auto w = f.target().witness(y);
        LOGMONOID_CHECK(w.has_value(), "image outside the target monoid");
        fe.push_back(*w);
    }
    for (const auto& y : g.images()) {
        auto w = g.target().witness(y);
        LOGMONOID_CHECK(w.has_value(), "image outside the target monoid");
        ge.push_back(*w);
    }
    return pushout_presentation(presentation(f.target()), presentation(g.target()), fe, ge);
}

AffineMonoid pushout(const MonoidHom& f, const MonoidHom& g, PushoutMode mode) {
    if (mode == PushoutMode::presentation)
        throw DomainError(ErrorCode::invalid_argument, "presentation mode returns a presentation");
    check_common_source(f, g);
    Subgroup gm = f.target().gp(), gn = g.target().gp();
    DirectSum ds = direct_sum(gm.group(), gn.group());
    std::vector<Vector> rel;
    for (std::size_t i = 0; i < f.images().size(); ++i) {
        auto a = gm.to_local(f.images()[i]);
        auto b = gn.to_local(g.images()[i]);
        LOGMONOID_CHECK(a && b, "image outside the target group");
        rel.push_back(sub(ds.left.apply(*a), ds.right.apply(*b)));
    }
    QuotientMap q = quotient_map(ds.group, rel);
    std::vector<Vector> gens;
    for (std::size_t j = 0; j < f.target().generators().size(); ++j)
        gens.push_back(q(ds.left.apply(gm.generator_image(j))));
    for (std::size_t j = 0; j < g.target().generators().size(); ++j)
        gens.push_back(q(ds.right.apply(gn.generator_image(j))));
    AffineMonoid fine(q.group, gens);
    if (mode == PushoutMode::fs) return saturate(fine);
    return fine;
}

MonoidHom pushout_induced(const MonoidHom& f, const MonoidHom& g, const MonoidHom& u, const MonoidHom& v) {
    if (u.source().generators() != f.target().generators() || v.source().generators() != g.target().generators() ||
        !(u.target().ambient() == v.target().ambient()))
        throw DomainError(ErrorCode::invalid_argument, "maps out of the pushout legs do not match");
    std::vector<Vector> images = u.images();
    images.insert(images.end(), v.images().begin(), v.images().end());
    return MonoidHom(pushout(f, g, PushoutMode::fine), u.target(), images);
}

AffineMonoid fiber_product(const MonoidHom& f, const MonoidHom& g) {
    const AbelianGroup& l = f.target().ambient();
    if (!(l == g.target().ambient()))
        throw DomainError(ErrorCode::invalid_argument, "fiber product maps must share their target group");
    const std::size_t a = f.images().size(), b = g.images().size();
    std::vector<Vector> a_rows, t_rows;
    for (std::size_t i = 0; i < l.dimension(); ++i) {
        Vector row(a + b);
        for (std::size_t j = 0; j < a; ++j) row[j] = f.images()[j][i];
        for (std::size_t j = 0; j < b; ++j) row[a + j] = -g.images()[j][i];
        (i < l.free_rank() ? a_rows : t_rows).push_back(std::move(row));
    }
    const AffineMonoid& m = f.source();
    const AffineMonoid& n = g.source();
    DirectSum ds = direct_sum(m.ambient(), n.ambient());
    std::vector<Vector> gens;
    for (const auto& h : nonneg_kernel_hilbert_basis(a + b, a_rows, t_rows, l.invariant_factors())) {
        Vector x = m.ambient().zero(), y = n.ambient().zero();
        for (std::size_t j = 0; j < a; ++j)
            if (sgn(h[j])) x = add(x, scale(h[j], m.generators()[j]));
        for (std::size_t j = 0; j < b; ++j)
            if (sgn(h[a + j])) y = add(y, scale(h[a + j], n.generators()[j]));
        gens.push_back(add(ds.left.apply(x), ds.right.apply(y)));
    }
    return minimal_generators(AffineMonoid(ds.group, gens));
}

}  // namespace logmonoid
