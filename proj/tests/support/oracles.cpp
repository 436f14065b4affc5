#include "oracles.hpp"

#include "logmonoid/errors.hpp"

#include <map>

namespace logmonoid::testing {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Vector random_vector(Rng& rng, std::size_t n, long lo, long hi) {
    Vector v(n);
    for (auto& x : v) x = uniform(rng, lo, hi);
    return v;
}

RationalCone random_cone(Rng& rng, std::size_t n, std::size_t count, long bound) {
    for (;;) {
        std::vector<Vector> rays;
        for (std::size_t i = 0; i < count; ++i) rays.push_back(random_vector(rng, n, -bound, bound));
        RationalCone c = RationalCone::from_generators(n, rays);
        if (c.is_pointed() && c.is_full_dimensional()) return c;
    }
}

Vector random_element(Rng& rng, const AffineMonoid& m, long max_coeff) {
    Vector x = m.ambient().zero();
    for (const auto& g : m.generators()) x = add(x, scale(Integer(uniform(rng, 0, max_coeff)), g));
    return m.ambient().reduce(x);
}

void for_each_box(std::size_t n, long bound, const std::function<void(const Vector&)>& visit) {
    Vector x(n, Integer(0));
    for (;;) {
        visit(x);
        std::size_t i = 0;
        while (i < n && x[i] == bound) x[i++] = 0;
        if (i == n) return;
        ++x[i];
    }
}

void for_each_symmetric_box(std::size_t n, long bound, const std::function<void(const Vector&)>& visit) {
    for_each_box(n, 2 * bound, [&](const Vector& y) {
        Vector x = y;
        for (auto& e : x) e -= bound;
        visit(x);
    });
}

std::optional<Vector> brute_force_nonneg(const Matrix& a, const Vector& b, long bound) {
    std::optional<Vector> best;
    for_each_box(a.cols(), bound, [&](const Vector& x) {
        if (a.apply(x) == b && (!best || lex_less(x, *best))) best = x;
    });
    return best;
}

std::size_t cokernel_dimension_mod_p(const Matrix& a, long p) {
    // Row reduction over F_p, or over Q with fraction-free elimination when p = 0.
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            m[i][j] = a(i, j);
            if (p) {
                m[i][j] %= p;
                if (m[i][j] < 0) m[i][j] += p;
            }
        }
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        std::size_t piv = r;
        while (piv < rows && m[piv][j] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][j] == 0) continue;
            Integer f = m[i][j], g = m[r][j];
            for (std::size_t k = 0; k < cols; ++k) {
                m[i][k] = m[i][k] * g - m[r][k] * f;
                if (p) {
                    m[i][k] %= p;
                    if (m[i][k] < 0) m[i][k] += p;
                }
            }
        }
        ++r;
    }
    return rows - r;
}

bool nodal_smooth_oracle(long a, long b, long p) {
    if (p == 0) return true;
    long x = a, y = b;
    while (y) {
        long t = x % y;
        x = y;
        y = t;
    }
    return x % p != 0;
}

std::vector<Vector> small_elements(const AffineMonoid& m, long bound) {
    std::vector<Vector> out;
    for_each_box(m.generators().size(), bound, [&](const Vector& e) {
        Vector x = m.ambient().zero();
        for (std::size_t i = 0; i < e.size(); ++i) x = add(x, scale(e[i], m.generators()[i]));
        out.push_back(m.ambient().reduce(x));
    });
    sort_unique(out);
    return out;
}

std::vector<MonoidHom> enumerate_homs(const AffineMonoid& m, const AffineMonoid& t,
                                      const std::vector<Vector>& candidates) {
    std::vector<MonoidHom> out;
    const std::size_t k = m.generators().size();
    if (candidates.empty()) return out;
    for_each_box(k, static_cast<long>(candidates.size()) - 1, [&](const Vector& idx) {
        std::vector<Vector> images;
        for (const auto& i : idx) images.push_back(candidates[i.get_ui()]);
        try {
            out.emplace_back(m, t, images);
        } catch (const DomainError&) {
        }
    });
    return out;
}

std::vector<Vector> compose_images(const MonoidHom& u, const MonoidHom& f) {
    std::vector<Vector> out;
    for (const auto& y : f.images()) {
        auto w = f.target().witness(y);
        LOGMONOID_CHECK(w.has_value(), "image outside target");
        out.push_back(u.apply_combination(*w));
    }
    return out;
}

UniversalPropertyReport check_pushout_universal_property(const MonoidHom& f, const MonoidHom& g,
                                                         const AffineMonoid& target, long bound) {
    auto candidates = small_elements(target, bound);
    auto us = enumerate_homs(f.target(), target, candidates);
    auto vs = enumerate_homs(g.target(), target, candidates);
    UniversalPropertyReport r;
    std::vector<std::vector<Vector>> uf, vg;
    for (const auto& u : us) uf.push_back(compose_images(u, f));
    for (const auto& v : vs) vg.push_back(compose_images(v, g));
    for (std::size_t i = 0; i < us.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j) {
            const bool agree = uf[i] == vg[j];
            bool factors = true;
            try {
                MonoidHom h = pushout_induced(f, g, us[i], vs[j]);
                // The factorization restricts to u and v on the two legs.
                const std::size_t a = us[i].images().size();
                for (std::size_t k = 0; k < h.images().size(); ++k) {
                    const Vector& want = k < a ? us[i].images()[k] : vs[j].images()[k - a];
                    if (h.images()[k] != want) ++r.failures;
                }
            } catch (const DomainError&) {
                factors = false;
            }
            if (agree) ++r.agreeing_pairs;
            else ++r.disagreeing_pairs;
            if (agree != factors) ++r.failures;
        }
    return r;
}

FiberReport check_fiber_product(const MonoidHom& f, const MonoidHom& g, const AffineMonoid& fp, long bound) {
    FiberReport r;
    const AffineMonoid &m = f.source(), &n = g.source();
    const std::size_t dm = m.ambient().dimension(), a = m.generators().size(), b = n.generators().size();
    for (const auto& z : fp.generators()) {
        Vector x(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(dm));
        Vector y(z.begin() + static_cast<std::ptrdiff_t>(dm), z.end());
        auto wx = m.witness(x), wy = n.witness(y);
        if (!wx || !wy || f.apply_combination(*wx) != g.apply_combination(*wy)) ++r.bad_generators;
    }
    for_each_box(a + b, bound, [&](const Vector& e) {
        Vector ex(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(a));
        Vector ey(e.begin() + static_cast<std::ptrdiff_t>(a), e.end());
        if (f.apply_combination(ex) != g.apply_combination(ey)) return;
        ++r.solutions;
        Vector x = m.ambient().zero(), y = n.ambient().zero();
        for (std::size_t i = 0; i < a; ++i) x = add(x, scale(ex[i], m.generators()[i]));
        for (std::size_t i = 0; i < b; ++i) y = add(y, scale(ey[i], n.generators()[i]));
        x.insert(x.end(), y.begin(), y.end());
        if (!fp.contains(x)) ++r.missing;
    });
    return r;
}

}  // namespace logmonoid::testing
