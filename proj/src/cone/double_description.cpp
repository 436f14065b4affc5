#include "logmonoid/cone.hpp"
#include "logmonoid/errors.hpp"
#include "logmonoid/smith.hpp"

#include <algorithm>

namespace logmonoid {
namespace {

class Bits {
public:
    explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
    void set(std::size_t i) {
        if (i / 64 >= words_.size()) words_.resize(i / 64 + 1, 0);
        words_[i / 64] |= (std::uint64_t{1} << (i % 64));
    }
    Bits operator&(const Bits& o) const {
        Bits r;
        r.words_.resize(std::min(words_.size(), o.words_.size()));
        for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }
    bool contains(const Bits& o) const {  // o ⊆ this
        for (std::size_t i = 0; i < o.words_.size(); ++i) {
            std::uint64_t mine = i < words_.size() ? words_[i] : 0;
            if ((o.words_[i] & ~mine) != 0) return false;
        }
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Ray {
    Vector v;
    Bits zeros;  // processed inequalities vanishing on v
};

// (s * x - t * y), made primitive.
Vector combine(const Integer& s, const Vector& x, const Integer& t, const Vector& y) {
    Vector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = s * x[i] - t * y[i];
    return primitive(r);
}

}  // namespace

DoubleDescription double_description(std::size_t n, const std::vector<Vector>& inequalities,
                                     const std::vector<Vector>& equations) {
    std::vector<Vector> lin;
    if (equations.empty()) {
        for (std::size_t i = 0; i < n; ++i) lin.push_back(unit_vector(n, i));
    } else {
        lin = kernel_vectors(Matrix::from_rows(n, equations));
    }
    std::vector<Ray> rays;

    for (std::size_t k = 0; k < inequalities.size(); ++k) {
        const Vector& a = inequalities[k];
        if (a.size() != n) throw DomainError(ErrorCode::dimension_mismatch, "inequality has wrong length");
        if (is_zero(a)) continue;

        // Case 1: the inequality is not constant on the lineality space.
        std::optional<std::size_t> l0;
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (sgn(dot(a, lin[i])) != 0) {
                l0 = i;
                break;
            }
        if (l0) {
            Vector pivot = lin[*l0];
            Integer ap = dot(a, pivot);
            if (sgn(ap) < 0) {
                pivot = negate(pivot);
                ap = -ap;
            }
            std::vector<Vector> next_lin;
            for (std::size_t i = 0; i < lin.size(); ++i) {
                if (i == *l0) continue;
                next_lin.push_back(combine(ap, lin[i], dot(a, lin[i]), pivot));
            }
            for (auto& r : rays) {
                Integer ar = dot(a, r.v);
                if (sgn(ar) != 0) r.v = combine(ap, r.v, ar, pivot);
                r.zeros.set(k);
            }
            Bits all_previous(k);
            for (std::size_t j = 0; j < k; ++j) all_previous.set(j);
            rays.push_back(Ray{primitive(pivot), all_previous});
            lin = std::move(next_lin);
            continue;
        }

        // Case 2: ordinary double-description step on the pointed part.
        std::vector<Integer> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i].v);
            int s = sgn(val[i]);
            if (s > 0) pos.push_back(i);
            else if (s < 0) neg.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (sgn(val[i]) == 0) rays[i].zeros.set(k);
            continue;
        }
        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (sgn(val[i]) < 0) continue;
            Ray r = rays[i];
            if (sgn(val[i]) == 0) r.zeros.set(k);
            next.push_back(std::move(r));
        }
        for (std::size_t p : pos)
            for (std::size_t q : neg) {
                Bits common = rays[p].zeros & rays[q].zeros;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    if (rays[r].zeros.contains(common)) adjacent = false;
                }
                if (!adjacent) continue;
                // val[p] > 0 > val[q]: val[p]*q - val[q]*p lies on the hyperplane.
                Ray nr{combine(val[p], rays[q].v, val[q], rays[p].v), common};
                nr.zeros.set(k);
                next.push_back(std::move(nr));
            }
        rays = std::move(next);
    }

    DoubleDescription out;
    out.lineality = std::move(lin);
    for (auto& r : rays)
        if (!is_zero(r.v)) out.rays.push_back(std::move(r.v));
    return out;
}

Vector project_orthogonal(const Vector& v, const std::vector<Vector>& basis) {
    if (basis.empty() || is_zero(v)) return primitive(v);
    const std::size_t k = basis.size();
    // Solve (B B^T) c = B v over Q.
    std::vector<std::vector<mpq_class>> m(k, std::vector<mpq_class>(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) m[i][j] = mpq_class(dot(basis[i], basis[j]));
        m[i][k] = mpq_class(dot(basis[i], v));
    }
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (p < k && sgn(m[p][c]) == 0) ++p;
        LOGMONOID_CHECK(p < k, "projection basis must be linearly independent");
        std::swap(m[c], m[p]);
        for (std::size_t i = 0; i < k; ++i) {
            if (i == c || sgn(m[i][c]) == 0) continue;
            mpq_class f = m[i][c] / m[c][c];
            for (std::size_t j = c; j <= k; ++j) m[i][j] -= f * m[c][j];
        }
    }
    std::vector<mpq_class> proj(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) proj[j] = mpq_class(v[j]);
    for (std::size_t i = 0; i < k; ++i) {
        mpq_class coef = m[i][k] / m[i][i];
        for (std::size_t j = 0; j < v.size(); ++j) proj[j] -= coef * mpq_class(basis[i][j]);
    }
    Integer den = 1;
    for (auto& q : proj) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    Vector out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        mpq_class s = proj[j] * mpq_class(den);
        out[j] = s.get_num();
    }
    return primitive(out);
}

}  // namespace logmonoid
