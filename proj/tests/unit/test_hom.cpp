#include "oracles.hpp"

#include "logmonoid/hom_analysis.hpp"

#include <doctest.h>

using namespace logmonoid;
using namespace logmonoid::testing;

namespace {

AffineMonoid free_monoid(std::size_t n) {
    std::vector<Vector> g;
    for (std::size_t i = 0; i < n; ++i) g.push_back(unit_vector(n, i));
    return AffineMonoid(AbelianGroup::free(n), g);
}

MonoidHom nodal(long a, long b) { return MonoidHom(free_monoid(1), free_monoid(2), {make_vector({a, b})}); }
MonoidHom times(long n) { return MonoidHom(free_monoid(1), free_monoid(1), {make_vector({n})}); }

}  // namespace

TEST_CASE("kernel and cokernel of the gp map") {
    auto id = MonoidHom::identity(free_monoid(2));
    CHECK(gp_kernel(id).is_trivial());
    CHECK(gp_cokernel(id).is_trivial());
    CHECK(gp_kernel(nodal(2, 4)).is_trivial());
    CHECK(gp_cokernel(nodal(2, 4)) == AbelianGroup(1, make_vector({2})));
    CHECK(gp_cokernel(times(2)) == AbelianGroup(0, make_vector({2})));
}

TEST_CASE("chart criterion") {
    for (long a = 1; a <= 6; ++a)
        for (long b = 1; b <= 6; ++b)
            for (long p : {0, 2, 3, 5}) CHECK(kato_criterion(nodal(a, b), p).smooth == nodal_smooth_oracle(a, b, p));
    CHECK(kato_criterion(times(2), 3).etale);
    CHECK_FALSE(kato_criterion(times(2), 2).etale);
    CHECK_FALSE(kato_criterion(times(2), 2).smooth);
    for (long p : {0, 2, 3, 5, 7}) CHECK(kato_criterion(MonoidHom::identity(free_monoid(2)), p).etale);
}

TEST_CASE("etale implies smooth") {
    Rng rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t m = uniform(rng, 1, 2), n = uniform(rng, 1, 3);
        std::vector<Vector> images;
        for (std::size_t i = 0; i < m; ++i) images.push_back(random_vector(rng, n, 0, 4));
        MonoidHom phi(free_monoid(m), free_monoid(n), images);
        for (long p : {0, 2, 3}) {
            auto v = kato_criterion(phi, p);
            if (v.etale) CHECK(v.smooth);
            if (p == 0 && v.gp_injective) CHECK(v.smooth);
        }
        CHECK((differential_rank(phi, 0) == 0) == gp_cokernel(phi).is_finite());
    }
}

TEST_CASE("kummer maps") {
    for (long n = 1; n <= 4; ++n) {
        CHECK(is_kummer(times(n)));
        for (long p : {3, 5, 7})
            if (n % p != 0) CHECK(kato_criterion(times(n), p).etale);
    }
    MonoidHom d(free_monoid(2), free_monoid(2), {make_vector({1, 0}), make_vector({0, 2})});
    CHECK(is_kummer(d));
    CHECK_FALSE(is_kummer(nodal(1, 1)));
}

TEST_CASE("relative characteristic") {
    CHECK(relative_characteristic(MonoidHom::identity(free_monoid(2))).ambient().is_trivial());
    AffineMonoid z(AbelianGroup(), {});
    AffineMonoid q(AbelianGroup::free(2), {make_vector({1, 0}), make_vector({-1, 1})});
    AffineMonoid rc = relative_characteristic(MonoidHom::zero_from(z, q));
    // Q is sharp, so the result is a copy of Q (in its own coordinates).
    CHECK(rc.ambient() == AbelianGroup::free(2));
    CHECK(rc.generators().size() == 2);
    CHECK(predicates(rc).is_free);
    MonoidHom inc(free_monoid(2), q, free_monoid(2).generators());
    CHECK(relative_characteristic(inc).ambient().is_trivial());
}

TEST_CASE("neat chart classes") {
    CHECK(neat_chart_class(nodal(1, 1), 0) == NeatClass::zariski);
    CHECK(neat_chart_class(times(2), 3) == NeatClass::etale);
    CHECK(neat_chart_class(times(2), 2) == NeatClass::fppf);
}

TEST_CASE("differential ranks") {
    for (long a = 1; a <= 4; ++a)
        for (long b = 1; b <= 4; ++b) CHECK(differential_rank(nodal(a, b), 0) == 1);
    CHECK(differential_rank(MonoidHom::identity(free_monoid(2)), 0) == 0);
    AffineMonoid z(AbelianGroup(), {});
    CHECK(differential_rank(MonoidHom::zero_from(z, free_monoid(1)), 0) == 1);
    CHECK(differential_rank(times(2), 2) == 1);
    CHECK(differential_rank(times(2), 3) == 0);
}

TEST_CASE("differential presentations") {
    auto d = universal_differential_presentation(nodal(2, 3), 0);
    CHECK(d.symbols == 2);
    CHECK(std::find(d.relations.begin(), d.relations.end(), make_vector({2, 3})) != d.relations.end());
    CHECK(d.reduced == AbelianGroup::free(1));
    auto id = universal_differential_presentation(MonoidHom::identity(free_monoid(2)), 0);
    CHECK(id.reduced.is_trivial());
    CHECK(id.rank == 0);
    AffineMonoid z(AbelianGroup(), {});
    auto pt = universal_differential_presentation(MonoidHom::zero_from(z, free_monoid(1)), 0);
    CHECK(pt.symbols == 1);
    CHECK(pt.relations.empty());
    CHECK(pt.reduced == AbelianGroup::free(1));
}
