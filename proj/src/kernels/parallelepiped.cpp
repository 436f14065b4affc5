#include "logmonoid/kernels.hpp"
#include "logmonoid/errors.hpp"
#include "logmonoid/smith.hpp"

namespace logmonoid::kernels {

Parallelepiped prepare_parallelepiped(const std::vector<Vector>& rays) {
    const std::size_t n = rays.size();
    Parallelepiped p;
    p.rays = Matrix::from_columns(n, rays);
    SmithDecomposition snf = smith_normal_form(p.rays);
    LOGMONOID_CHECK(snf.rank() == n, "parallelepiped needs linearly independent rays");
    p.right = snf.right;
    p.diag = snf.diag;
    p.volume = 1;
    for (const auto& d : p.diag) p.volume *= d;
    return p;
}

Vector parallelepiped_coefficients(const Parallelepiped& p, Integer t) {
    const std::size_t n = p.diag.size();
    if (n == 0) return {};
    const Integer& dmax = p.diag.back();
    Vector scaled(n);
    for (std::size_t i = 0; i < n; ++i) {
        Integer a;
        mpz_fdiv_qr(t.get_mpz_t(), a.get_mpz_t(), t.get_mpz_t(), p.diag[i].get_mpz_t());
        scaled[i] = a * (dmax / p.diag[i]);
    }
    Vector c = p.right.apply(scaled);
    for (auto& x : c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), dmax.get_mpz_t());
    return c;
}

Vector parallelepiped_point(const Parallelepiped& p, Integer t) {
    if (p.diag.empty()) return {};
    const Integer& dmax = p.diag.back();
    Vector x = p.rays.apply(parallelepiped_coefficients(p, std::move(t)));
    for (auto& v : x) {
        LOGMONOID_CHECK(mpz_divisible_p(v.get_mpz_t(), dmax.get_mpz_t()), "parallelepiped point not integral");
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), dmax.get_mpz_t());
    }
    return x;
}

namespace {

bool reduces(const Vector& x, const Vector& y, const std::vector<Vector>& facets) {
    Vector z = sub(x, y);
    for (const auto& f : facets)
        if (sgn(dot(f, z)) < 0) return false;
    return true;
}

bool is_irreducible(std::size_t i, const std::vector<Vector>& cands, const std::vector<Integer>& degree,
                    const std::vector<Vector>& facets) {
    for (std::size_t j = 0; j < i; ++j) {
        if (degree[j] >= degree[i]) break;
        if (reduces(cands[i], cands[j], facets)) return false;
    }
    return true;
}

}  // namespace

namespace serial {

std::vector<Vector> parallelepiped_points(const Parallelepiped& p) {
    std::vector<Vector> out;
    for (Integer t = 1; t < p.volume; ++t) out.push_back(parallelepiped_point(p, t));
    return out;
}

std::vector<char> irreducible_mask(const std::vector<Vector>& candidates, const std::vector<Integer>& degree,
                                   const std::vector<Vector>& facets) {
    std::vector<char> mask(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) mask[i] = is_irreducible(i, candidates, degree, facets);
    return mask;
}

}  // namespace serial

namespace omp {

std::vector<Vector> parallelepiped_points(const Parallelepiped& p) {
    if (p.volume <= 1) return {};
    LOGMONOID_CHECK(p.volume.fits_slong_p(), "parallelepiped too large to enumerate");
    const long count = p.volume.get_si() - 1;
    std::vector<Vector> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
    for (long t = 0; t < count; ++t) out[static_cast<std::size_t>(t)] = parallelepiped_point(p, Integer(t + 1));
    return out;
}

std::vector<char> irreducible_mask(const std::vector<Vector>& candidates, const std::vector<Integer>& degree,
                                   const std::vector<Vector>& facets) {
    const long count = static_cast<long>(candidates.size());
    std::vector<char> mask(candidates.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < count; ++i)
        mask[static_cast<std::size_t>(i)] = is_irreducible(static_cast<std::size_t>(i), candidates, degree, facets);
    return mask;
}

}  // namespace omp

}  // namespace logmonoid::kernels
