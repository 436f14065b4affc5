#include "logmonoid/blowup.hpp"
#include "logmonoid/errors.hpp"

#include <algorithm>

namespace logmonoid {
namespace {

void check_generators(const MonoidIdeal& j) {
    for (const auto& g : j.generators) {
        j.host.ambient().check_element(g);
        if (!j.host.contains(g))
            throw DomainError(ErrorCode::invalid_argument, "ideal generator " + to_string(g) + " is outside the monoid");
    }
}

bool in_ideal_of(const AffineMonoid& host, const std::vector<Vector>& gens, const Vector& m) {
    for (const auto& g : gens)
        if (host.contains(host.ambient().reduce(sub(m, g)))) return true;
    return false;
}

AffineMonoid chart_monoid(const AffineMonoid& host, const std::vector<Vector>& gens, const Vector& s) {
    std::vector<Vector> all = host.generators();
    for (const auto& g : gens) all.push_back(sub(g, s));
    return AffineMonoid(host.ambient(), all);
}

}  // namespace

bool ideal_contains(const MonoidIdeal& j, const Vector& m) {
    j.host.ambient().check_element(m);
    return in_ideal_of(j.host, j.generators, m);
}

MonoidIdeal reduce_ideal(const MonoidIdeal& j) {
    check_generators(j);
    std::vector<Vector> gens;
    for (const auto& g : j.generators) gens.push_back(j.host.ambient().reduce(g));
    sort_unique(gens);
    for (std::size_t i = 0; i < gens.size();) {
        std::vector<Vector> others = gens;
        others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
        if (in_ideal_of(j.host, others, gens[i])) gens = std::move(others);
        else ++i;
    }
    return MonoidIdeal{j.host, gens};
}

MonoidIdeal maximal_ideal(const AffineMonoid& p) {
    auto units = unit_generator_indices(p);
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < p.generators().size(); ++i)
        if (!std::binary_search(units.begin(), units.end(), i)) gens.push_back(p.generators()[i]);
    return reduce_ideal(MonoidIdeal{p, gens});
}

bool is_invertible(const MonoidIdeal& j) {
    if (j.generators.empty()) throw DomainError(ErrorCode::empty_ideal, "the empty ideal is not invertible");
    check_generators(j);
    for (const auto& s : j.generators) {
        bool ok = true;
        for (const auto& g : j.generators)
            if (!j.host.contains(j.host.ambient().reduce(sub(g, s)))) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

std::vector<BlowupChart> blowup_charts(const MonoidIdeal& j) {
    if (j.generators.empty()) throw DomainError(ErrorCode::empty_ideal, "cannot blow up the empty ideal");
    if (!is_toric(j.host)) throw DomainError(ErrorCode::not_toric, "blowup charts need a toric monoid");
    MonoidIdeal r = reduce_ideal(j);
    std::vector<BlowupChart> out;
    for (const auto& s : r.generators) {
        AffineMonoid fine = chart_monoid(r.host, r.generators, s);
        for (const auto& g : r.generators)
            LOGMONOID_CHECK(fine.contains(fine.ambient().reduce(sub(g, s))), "pulled-back ideal is not principal");
        AffineMonoid fs = saturate(fine);
        out.push_back(BlowupChart{s, minimal_generators(fine), fs});
    }
    return out;
}

BlowupFan blowup_fan(const RationalCone& sigma, const MonoidIdeal& j) {
    if (j.generators.empty()) throw DomainError(ErrorCode::empty_ideal, "cannot blow up the empty ideal");
    if (!sigma.is_pointed()) throw DomainError(ErrorCode::not_pointed, "blowup fan needs a strongly convex cone");
    const std::size_t n = sigma.ambient_rank();
    if (j.host.ambient() != AbelianGroup::free(n))
        throw DomainError(ErrorCode::dimension_mismatch, "ideal must live in the dual lattice of the cone");
    RationalCone dual = sigma.dual();
    for (const auto& g : j.generators)
        if (!dual.contains(g)) throw DomainError(ErrorCode::invalid_argument, "ideal generator outside the dual cone");
    MonoidIdeal r = reduce_ideal(j);
    BlowupFan out;
    out.centers = r.generators;
    std::vector<RationalCone> maximal;
    for (const auto& s : r.generators) {
        std::vector<Vector> ineq = sigma.facet_normals();
        for (const auto& g : r.generators) ineq.push_back(sub(g, s));
        RationalCone piece = RationalCone::from_inequalities(n, ineq, sigma.equations());
        if (piece.dimension() == sigma.dimension()) maximal.push_back(piece);
        out.chart_cones.push_back(std::move(piece));
    }
    out.fan = Fan::from_cones(n, maximal);
    return out;
}

bool idempotence_check(const MonoidIdeal& j) {
    for (const auto& chart : blowup_charts(j)) {
        const AffineMonoid& c = chart.fine;
        MonoidIdeal pulled = reduce_ideal(MonoidIdeal{c, j.generators});
        if (pulled.generators.size() != 1) return false;
        AffineMonoid again = chart_monoid(c, pulled.generators, pulled.generators.front());
        if (!same_subset(again, c)) return false;
    }
    return true;
}

}  // namespace logmonoid
