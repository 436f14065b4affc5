#include "logmonoid/hom_analysis.hpp"
#include "logmonoid/errors.hpp"
#include "logmonoid/hilbert.hpp"

namespace logmonoid {

AbelianGroup gp_kernel(const MonoidHom& phi) { return kernel(phi.gp_map()); }
AbelianGroup gp_cokernel(const MonoidHom& phi) { return cokernel(phi.gp_map()); }

namespace {

bool kernel_meets(const MonoidHom& phi) {
    const AbelianGroup& t = phi.target().ambient();
    const std::size_t m = phi.images().size();
    std::vector<Vector> a_rows, t_rows;
    for (std::size_t i = 0; i < t.dimension(); ++i) {
        Vector row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = phi.images()[j][i];
        (i < t.free_rank() ? a_rows : t_rows).push_back(std::move(row));
    }
    const AffineMonoid& p = phi.source();
    for (const auto& h : nonneg_kernel_hilbert_basis(m, a_rows, t_rows, t.invariant_factors())) {
        Vector x = p.ambient().zero();
        for (std::size_t j = 0; j < m; ++j)
            if (sgn(h[j])) x = add(x, scale(h[j], p.generators()[j]));
        if (!p.ambient().is_zero_element(x)) return true;
    }
    return false;
}

}  // namespace

SmoothnessVerdict kato_criterion(const MonoidHom& phi, const Integer& p) {
    check_characteristic(p);
    SmoothnessVerdict v;
    v.residue_char = p;
    v.ker = gp_kernel(phi);
    v.coker = gp_cokernel(phi);
    v.smooth = v.ker.is_finite() && is_order_invertible(v.ker, p) && is_order_invertible(v.coker, p);
    v.etale = v.smooth && v.coker.is_finite();
    v.gp_injective = v.ker.is_trivial();
    v.kernel_meets_monoid = kernel_meets(phi);
    return v;
}

bool is_kummer(const MonoidHom& phi) {
    if (!is_toric(phi.source()) || !is_toric(phi.target()))
        throw DomainError(ErrorCode::not_toric, "Kummer test needs toric monoids");
    if (!gp_kernel(phi).is_trivial() || !gp_cokernel(phi).is_finite()) return false;
    AffineMonoid image(phi.target().ambient(), phi.images());
    return same_subset(saturate_within(image, phi.target().generators()), phi.target());
}

AffineMonoid relative_characteristic(const MonoidHom& phi) {
    AffineMonoid zero(AbelianGroup::free(0), {});
    MonoidHom to_zero = MonoidHom::zero_from(phi.source(), zero);
    AffineMonoid fine = pushout(phi, to_zero, PushoutMode::fine);
    return minimal_generators(sharpen(fine));
}

const char* to_string(NeatClass c) {
    switch (c) {
        case NeatClass::zariski: return "zariski";
        case NeatClass::etale: return "etale";
        case NeatClass::fppf: return "fppf";
    }
    return "fppf";
}

NeatClass neat_chart_class(const MonoidHom& phi, const Integer& p) {
    check_characteristic(p);
    AbelianGroup c = gp_cokernel(phi);
    if (c.is_torsion_free()) return NeatClass::zariski;
    if (is_order_invertible(c, p)) return NeatClass::etale;
    return NeatClass::fppf;
}

std::size_t differential_rank(const MonoidHom& phi, const Integer& p) { return p_rank(gp_cokernel(phi), p); }

DifferentialPresentation universal_differential_presentation(const MonoidHom& phi, const Integer& p) {
    check_characteristic(p);
    const AffineMonoid& q = phi.target();
    Subgroup gq = q.gp();
    DifferentialPresentation d;
    d.symbols = q.generators().size();
    for (const auto& r : gq.relations()) d.relations.push_back(r);
    for (const auto& y : phi.images()) {
        auto w = q.witness(y);
        LOGMONOID_CHECK(w.has_value(), "image outside the target monoid");
        if (!is_zero(*w)) d.relations.push_back(*w);
    }
    sort_unique(d.relations);
    d.reduced = gp_cokernel(phi);
    d.rank = p_rank(d.reduced, p);
    return d;
}

}  // namespace logmonoid
