#include "oracles.hpp"

#include "logmonoid/errors.hpp"
#include "logmonoid/fan.hpp"
#include "logmonoid/hilbert.hpp"
#include "logmonoid/kernels.hpp"
#include "logmonoid/monoid.hpp"
#include "logmonoid/nonneg.hpp"

#include <doctest.h>

using namespace logmonoid;
using namespace logmonoid::testing;

namespace {

RationalCone cone2(std::initializer_list<std::initializer_list<long>> rays) {
    std::vector<Vector> v;
    for (auto r : rays) v.push_back(make_vector(r));
    return RationalCone::from_generators(v.front().size(), v);
}

std::vector<Vector> vecs(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Vector> v;
    for (auto r : rows) v.push_back(make_vector(r));
    return v;
}

bool refines_with_same_support(const Fan& input, const Fan& output, long box) {
    for (const auto& c : output.cone_list()) {
        bool inside = false;
        for (const auto& d : input.cone_list()) {
            bool all = true;
            for (const auto& r : c.rays()) all = all && d.contains(r);
            inside = inside || all;
        }
        if (!inside) return false;
    }
    bool same = true;
    for_each_symmetric_box(input.ambient_rank(), box, [&](const Vector& x) {
        if (input.support_contains(x) != output.support_contains(x)) same = false;
    });
    return same;
}

}  // namespace

TEST_CASE("dual cones") {
    RationalCone quadrant = cone2({{1, 0}, {0, 1}});
    CHECK(quadrant.dual() == quadrant);
    CHECK(cone2({{1, 0}, {1, 2}}).dual().rays() == vecs({{0, 1}, {2, -1}}));
    RationalCone plane = RationalCone::whole_space(2);
    CHECK_FALSE(plane.is_pointed());
    CHECK(plane.dual() == RationalCone::zero(2));
}

TEST_CASE("dual is an involution on random cones") {
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = uniform(rng, 2, 3);
        RationalCone c = random_cone(rng, n, uniform(rng, n, n + 2), 4);
        RationalCone d = c.dual();
        CHECK(d.dual() == c);
        for (const auto& r : c.rays())
            for (const auto& f : d.rays()) CHECK(sgn(dot(r, f)) >= 0);
    }
}

TEST_CASE("face counts") {
    CHECK(faces(cone2({{1, 0}, {0, 1}})).size() == 4);
    CHECK(faces(cone2({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}})).size() == 10);
    CHECK(faces(cone2({{1, 0}})).size() == 2);
}

TEST_CASE("faces are closed under intersection") {
    RationalCone c = cone2({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}});
    auto fs = faces(c);
    for (const auto& a : fs) {
        CHECK(is_face(c, a));
        for (const auto& b : fs) {
            RationalCone m = intersect(a, b);
            CHECK(std::find(fs.begin(), fs.end(), m) != fs.end());
        }
    }
}

TEST_CASE("monoids of cones") {
    CHECK(same_subset(monoid_of_cone(cone2({{1, 0}, {0, 1}})),
                      AffineMonoid(AbelianGroup::free(2), vecs({{1, 0}, {0, 1}}))));
    CHECK(monoid_of_cone(cone2({{1, 0}, {1, 2}})).generators() == vecs({{0, 1}, {1, 0}, {2, -1}}));
    AffineMonoid whole = monoid_of_cone(RationalCone::zero(2));
    CHECK(whole.contains(make_vector({-3, 5})));
    CHECK(whole.contains(make_vector({3, -5})));
}

TEST_CASE("hilbert basis examples") {
    CHECK(hilbert_basis(cone2({{1, 0}, {0, 1}})) == vecs({{0, 1}, {1, 0}}));
    CHECK(hilbert_basis(cone2({{2, -1}, {0, 1}})) == vecs({{0, 1}, {1, 0}, {2, -1}}));
    CHECK(hilbert_basis(cone2({{1, 1}, {1, -1}})) == vecs({{1, -1}, {1, 0}, {1, 1}}));
}

TEST_CASE("hilbert basis is irreducible and generating") {
    Rng rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = uniform(rng, 2, 3);
        RationalCone c = random_cone(rng, n, uniform(rng, n, n + 1), 3);
        auto hb = hilbert_basis(c);
        for (const auto& x : hb) {
            CHECK(c.contains(x));
            for (const auto& y : hb)
                if (x != y) CHECK_FALSE(c.contains(sub(x, y)));
        }
        Matrix a = Matrix::from_columns(n, hb);
        for (int k = 0; k < 10; ++k) {
            Vector x = random_vector(rng, n, -10, 10);
            if (c.contains(x)) CHECK(solve_nonneg(a, x).has_value());
        }
    }
}

TEST_CASE("multiplicity and regularity") {
    CHECK(multiplicity(cone2({{1, 0}, {0, 1}})) == 1);
    CHECK(is_regular(cone2({{1, 0}, {0, 1}})));
    CHECK(multiplicity(cone2({{1, 0}, {1, 2}})) == 2);
    CHECK_FALSE(is_regular(cone2({{1, 0}, {1, 2}})));
    for (long k = 1; k <= 8; ++k) CHECK(multiplicity(cone2({{1, 0}, {1, k}})) == k);
    CHECK_THROWS_AS(multiplicity(cone2({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}})), DomainError);
}

TEST_CASE("stellar subdivision") {
    Fan q = Fan::from_cone(cone2({{1, 0}, {0, 1}}));
    Fan s = stellar_subdivision(q, make_vector({1, 1}));
    CHECK(s.cones().size() == 2);
    CHECK(s.is_regular());
    CHECK(stellar_subdivision(q, make_vector({1, 0})) == q);
    Fan a1 = Fan::from_cone(cone2({{1, 0}, {1, 2}}));
    Fan t = stellar_subdivision(a1, make_vector({1, 1}));
    CHECK(t.rays() == vecs({{1, 0}, {1, 1}, {1, 2}}));
    CHECK(t.cones() == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(stellar_subdivision(a1, make_vector({0, 1})), DomainError);
}

TEST_CASE("barycentric subdivision") {
    Fan q = Fan::from_cone(cone2({{1, 0}, {0, 1}}));
    CHECK(barycentric_subdivision(q).cones().size() == 2);
    Fan ray = Fan::from_cone(cone2({{1, 0}}));
    CHECK(barycentric_subdivision(ray) == ray);
    Fan square = Fan::from_cone(cone2({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}));
    Fan b = barycentric_subdivision(square);
    CHECK(b.is_simplicial());
    CHECK(refines_with_same_support(square, b, 2));
}

TEST_CASE("resolution") {
    Fan q = Fan::from_cone(cone2({{1, 0}, {0, 1}}));
    CHECK(resolve(q) == q);
    Fan a1 = resolve(Fan::from_cone(cone2({{1, 0}, {1, 2}})));
    CHECK(a1.rays() == vecs({{1, 0}, {1, 1}, {1, 2}}));
    CHECK(a1.is_regular());
    for (long k = 1; k <= 12; ++k) {
        Fan f = resolve(Fan::from_cone(cone2({{1, 0}, {1, k}})));
        CHECK(f.cones().size() == static_cast<std::size_t>(k));
        CHECK(f.rays().size() == static_cast<std::size_t>(k + 1));
        CHECK(f.is_regular());
    }
}

TEST_CASE("resolution of random cones") {
    Rng rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t n = uniform(rng, 2, 3);
        Fan f = Fan::from_cone(random_cone(rng, n, n, 4));
        Fan r = resolve(f);
        CHECK(r.is_regular());
        CHECK(refines_with_same_support(f, r, 3));
    }
}

TEST_CASE("fans reject overlapping cones") {
    auto c1 = cone2({{1, 0}, {1, 2}});
    auto c2 = cone2({{1, 1}, {0, 1}});
    CHECK_FALSE(meet_in_common_face(c1, c2));
    CHECK_THROWS_AS(Fan::from_cones(2, {c1, c2}), DomainError);
    CHECK_THROWS_AS(Fan::from_cone(RationalCone::whole_space(2)), DomainError);
}

TEST_CASE("serial and parallel kernels agree") {
    Rng rng(24);
    for (int trial = 0; trial < 10; ++trial) {
        RationalCone c = random_cone(rng, 3, 3, 5);
        auto p = kernels::prepare_parallelepiped(c.rays());
        auto a = kernels::serial::parallelepiped_points(p);
        auto b = kernels::omp::parallelepiped_points(p);
        CHECK(a == b);
        CHECK(a.size() + 1 == p.volume.get_ui());
        std::vector<Vector> cand = a;
        cand.insert(cand.end(), c.rays().begin(), c.rays().end());
        Vector w = c.grading();
        std::sort(cand.begin(), cand.end(), [&](const Vector& x, const Vector& y) { return dot(w, x) < dot(w, y); });
        std::vector<Integer> deg;
        for (const auto& x : cand) deg.push_back(dot(w, x));
        CHECK(kernels::serial::irreducible_mask(cand, deg, c.facet_normals()) ==
              kernels::omp::irreducible_mask(cand, deg, c.facet_normals()));
    }
}
