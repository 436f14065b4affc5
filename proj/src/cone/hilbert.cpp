#include "logmonoid/hilbert.hpp"
#include "logmonoid/abelian_group.hpp"
#include "logmonoid/errors.hpp"
#include "logmonoid/kernels.hpp"
#include "logmonoid/smith.hpp"

#include <algorithm>
#include <numeric>

namespace logmonoid {
namespace {

void triangulate_into(const RationalCone& c, const std::vector<std::size_t>& idx, const std::vector<Vector>& all,
                      std::vector<std::vector<std::size_t>>& out) {
    // idx: indices (into all) of the rays of c, in lex order of the rays.
    if (idx.size() == c.dimension()) {
        out.push_back(idx);
        return;
    }
    const std::size_t apex = idx.front();
    for (const auto& f : c.facet_normals()) {
        if (sgn(dot(f, all[apex])) == 0) continue;
        std::vector<std::size_t> sub;
        std::vector<Vector> gens;
        for (std::size_t i : idx)
            if (sgn(dot(f, all[i])) == 0) {
                sub.push_back(i);
                gens.push_back(all[i]);
            }
        std::vector<std::vector<std::size_t>> parts;
        triangulate_into(RationalCone::from_generators(c.ambient_rank(), gens), sub, all, parts);
        for (auto& s : parts) {
            s.insert(s.begin(), apex);
            out.push_back(std::move(s));
        }
    }
}

// Hilbert basis of a full-dimensional pointed cone in Z^d.
std::vector<Vector> full_dimensional_basis(const RationalCone& c) {
    const auto& rays = c.rays();
    std::vector<Vector> cands = rays;
    for (const auto& simplex : triangulate(c)) {
        std::vector<Vector> r;
        for (std::size_t i : simplex) r.push_back(rays[i]);
        auto pts = kernels::omp::parallelepiped_points(kernels::prepare_parallelepiped(r));
        cands.insert(cands.end(), std::make_move_iterator(pts.begin()), std::make_move_iterator(pts.end()));
    }
    sort_unique(cands);
    const Vector w = c.grading();
    std::vector<Integer> deg(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) deg[i] = dot(w, cands[i]);
    std::vector<std::size_t> order(cands.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] < deg[b]; });
    std::vector<Vector> sorted;
    std::vector<Integer> sdeg;
    for (std::size_t i : order) {
        sorted.push_back(cands[i]);
        sdeg.push_back(deg[i]);
    }
    auto mask = kernels::omp::irreducible_mask(sorted, sdeg, c.facet_normals());
    std::vector<Vector> out;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (mask[i]) out.push_back(std::move(sorted[i]));
    sort_unique(out);
    return out;
}

Vector solve_exact(const std::vector<Vector>& basis, std::size_t n, const Vector& v) {
    auto z = integer_solve(Matrix::from_columns(n, basis), v);
    LOGMONOID_CHECK(z.has_value(), "vector outside the expected lattice");
    return *z;
}

Vector combine_columns(const std::vector<Vector>& cols, std::size_t n, const Vector& z) {
    Vector x = zero_vector(n);
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (sgn(z[i])) x = add(x, scale(z[i], cols[i]));
    return x;
}

}  // namespace

std::vector<std::vector<std::size_t>> triangulate(const RationalCone& c) {
    if (!c.is_pointed()) throw DomainError(ErrorCode::not_pointed, "triangulation requires a pointed cone");
    std::vector<std::vector<std::size_t>> out;
    if (c.rays().empty()) return out;
    std::vector<std::size_t> idx(c.rays().size());
    std::iota(idx.begin(), idx.end(), 0);
    triangulate_into(c, idx, c.rays(), out);
    for (auto& s : out) std::sort(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vector> hilbert_basis(const RationalCone& c) {
    std::vector<Vector> lattice;
    for (std::size_t i = 0; i < c.ambient_rank(); ++i) lattice.push_back(unit_vector(c.ambient_rank(), i));
    return hilbert_basis(c, lattice);
}

std::vector<Vector> hilbert_basis(const RationalCone& c, const std::vector<Vector>& lattice_basis) {
    if (!c.is_pointed()) throw DomainError(ErrorCode::not_pointed, "Hilbert basis requires a pointed cone");
    const std::size_t n = c.ambient_rank();
    const std::size_t k = lattice_basis.size();
    if (k == 0) return {};
    Matrix b = Matrix::from_columns(n, lattice_basis);
    Matrix bt = b.transpose();
    // Pull back to lattice coordinates.
    std::vector<Vector> ineq, eqs;
    for (const auto& f : c.facet_normals()) ineq.push_back(bt.apply(f));
    for (const auto& e : c.equations()) eqs.push_back(bt.apply(e));
    RationalCone pulled = RationalCone::from_inequalities(k, ineq, eqs);
    if (pulled.rays().empty()) return {};
    // Restrict to the saturated span, where the cone is full-dimensional.
    std::vector<Vector> span = saturated_basis(k, pulled.rays());
    const std::size_t d = span.size();
    std::vector<Vector> local_rays;
    for (const auto& r : pulled.rays()) local_rays.push_back(solve_exact(span, k, r));
    RationalCone local = RationalCone::from_generators(d, local_rays);
    std::vector<Vector> out;
    for (const auto& z : full_dimensional_basis(local))
        out.push_back(combine_columns(lattice_basis, n, combine_columns(span, k, z)));
    sort_unique(out);
    return out;
}

std::vector<Vector> lattice_generators(const RationalCone& c) {
    const std::size_t n = c.ambient_rank();
    if (c.is_pointed()) return hilbert_basis(c);
    const auto& lin = c.lineality();
    QuotientMap q = quotient_map(n, lin);
    LOGMONOID_CHECK(q.group.is_torsion_free(), "lineality lattice must be saturated");
    std::vector<Vector> image;
    for (const auto& r : c.rays()) image.push_back(q.transform.apply(r));
    std::vector<Vector> out;
    const std::size_t m = q.group.dimension();
    if (m > 0) {
        for (const auto& h : hilbert_basis(RationalCone::from_generators(m, image))) {
            Vector x = q.section.apply(h);
            // Reduce modulo the Hermite basis of the lineality lattice.
            for (const auto& l : lin) {
                std::size_t piv = 0;
                while (sgn(l[piv]) == 0) ++piv;
                Integer t;
                mpz_fdiv_q(t.get_mpz_t(), x[piv].get_mpz_t(), l[piv].get_mpz_t());
                if (sgn(t)) x = sub(x, scale(t, l));
            }
            out.push_back(std::move(x));
        }
    }
    for (const auto& l : lin) {
        out.push_back(l);
        out.push_back(negate(l));
    }
    sort_unique(out);
    return out;
}

std::vector<Vector> congruence_lattice(std::size_t m, const std::vector<Vector>& a_rows,
                                       const std::vector<Vector>& t_rows, const Vector& moduli) {
    LOGMONOID_CHECK(t_rows.size() == moduli.size(), "one modulus per congruence row");
    const std::size_t ra = a_rows.size(), rt = t_rows.size();
    if (ra + rt == 0) {
        std::vector<Vector> id;
        for (std::size_t i = 0; i < m; ++i) id.push_back(unit_vector(m, i));
        return id;
    }
    // Kernel of [A 0; T D] projected to the first m coordinates.
    Matrix big(ra + rt, m + rt);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < m; ++j) big(i, j) = a_rows[i][j];
    for (std::size_t i = 0; i < rt; ++i) {
        for (std::size_t j = 0; j < m; ++j) big(ra + i, j) = t_rows[i][j];
        big(ra + i, m + i) = moduli[i];
    }
    std::vector<Vector> gens;
    for (const auto& k : kernel_vectors(big)) gens.emplace_back(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(m));
    return hermite_basis(m, gens);
}

std::vector<Vector> nonneg_kernel_hilbert_basis(std::size_t m, const std::vector<Vector>& a_rows,
                                                const std::vector<Vector>& t_rows, const Vector& moduli) {
    std::vector<Vector> orthant;
    for (std::size_t i = 0; i < m; ++i) orthant.push_back(unit_vector(m, i));
    RationalCone c = RationalCone::from_inequalities(m, orthant, a_rows);
    return hilbert_basis(c, congruence_lattice(m, a_rows, t_rows, moduli));
}

}  // namespace logmonoid
