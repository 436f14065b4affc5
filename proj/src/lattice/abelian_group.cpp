#include "logmonoid/abelian_group.hpp"

#include "logmonoid/errors.hpp"

#include <sstream>

namespace logmonoid {

AbelianGroup::AbelianGroup(std::size_t free_rank, Vector invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2)
            throw DomainError(ErrorCode::invalid_argument, "invariant factors must be >= 2");
        if (i + 1 < factors_.size() &&
            !mpz_divisible_p(factors_[i + 1].get_mpz_t(), factors_[i].get_mpz_t()))
            throw DomainError(ErrorCode::invalid_argument, "invariant factors must form a divisibility chain");
    }
}

Vector AbelianGroup::reduce(Vector v) const {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        Integer& x = v[free_rank_ + i];
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), factors_[i].get_mpz_t());
    }
    return v;
}

bool AbelianGroup::is_zero_element(std::span<const Integer> v) const {
    for (std::size_t i = 0; i < free_rank_; ++i)
        if (sgn(v[i]) != 0) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (!mpz_divisible_p(v[free_rank_ + i].get_mpz_t(), factors_[i].get_mpz_t())) return false;
    return true;
}

void AbelianGroup::check_element(std::span<const Integer> v) const {
    if (v.size() != dimension())
        throw DomainError(ErrorCode::dimension_mismatch,
                          "element has " + std::to_string(v.size()) + " coordinates, group expects " +
                              std::to_string(dimension()));
}

std::vector<Vector> AbelianGroup::relation_vectors() const {
    std::vector<Vector> rel;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        Vector v = zero_vector(dimension());
        v[free_rank_ + i] = factors_[i];
        rel.push_back(std::move(v));
    }
    return rel;
}

std::string to_string(const AbelianGroup& g) {
    std::ostringstream os;
    os << "Z^" << g.free_rank();
    for (const auto& d : g.invariant_factors()) os << " + Z/" << d.get_str();
    return os.str();
}

Integer torsion_order(const AbelianGroup& g) {
    Integer n = 1;
    for (const auto& d : g.invariant_factors()) n *= d;
    return n;
}

bool is_prime(const Integer& p) { return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0; }

void check_characteristic(const Integer& p) {
    if (sgn(p) != 0 && !is_prime(p))
        throw DomainError(ErrorCode::invalid_characteristic,
                          "characteristic must be 0 or a prime, got " + p.get_str());
}

bool is_order_invertible(const AbelianGroup& g, const Integer& p) {
    check_characteristic(p);
    if (sgn(p) == 0) return true;
    return !mpz_divisible_p(torsion_order(g).get_mpz_t(), p.get_mpz_t());
}

std::size_t p_rank(const AbelianGroup& g, const Integer& p) {
    check_characteristic(p);
    std::size_t r = g.free_rank();
    if (sgn(p) == 0) return r;
    for (const auto& d : g.invariant_factors())
        if (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) ++r;
    return r;
}

AbelianGroup cokernel(const Matrix& a) {
    return quotient_map(a.rows(), a.columns()).group;
}

Vector QuotientMap::operator()(std::span<const Integer> x) const {
    return group.reduce(transform.apply(x));
}

QuotientMap quotient_map(std::size_t n, const std::vector<Vector>& relations) {
    Matrix s = Matrix::from_columns(n, relations);
    SmithDecomposition snf = s.cols() ? smith_normal_form(s)
                                      : SmithDecomposition{Matrix::identity(n), Matrix::identity(n), {},
                                                           Matrix(0, 0)};
    // Coordinates i >= rank are free; i < rank with d_i > 1 are torsion.
    std::vector<std::size_t> order;
    Vector factors;
    for (std::size_t i = snf.rank(); i < n; ++i) order.push_back(i);
    for (std::size_t i = 0; i < snf.rank(); ++i)
        if (snf.diag[i] > 1) {
            order.push_back(i);
            factors.push_back(snf.diag[i]);
        }
    QuotientMap q;
    q.group = AbelianGroup(n - snf.rank(), std::move(factors));
    q.transform = Matrix(order.size(), n);
    q.section = Matrix(n, order.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        for (std::size_t j = 0; j < n; ++j) {
            q.transform(k, j) = snf.left(order[k], j);
            q.section(j, k) = snf.left_inverse(j, order[k]);
        }
    return q;
}

QuotientMap quotient_map(const AbelianGroup& g, const std::vector<Vector>& elements) {
    std::vector<Vector> rel = g.relation_vectors();
    for (const auto& e : elements) {
        g.check_element(e);
        rel.push_back(e);
    }
    return quotient_map(g.dimension(), rel);
}

Subgroup::Subgroup(AbelianGroup ambient, std::vector<Vector> generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators)) {
    const std::size_t dim = ambient_.dimension();
    const std::size_t m = generators_.size();
    std::vector<Vector> cols;
    for (auto& g : generators_) {
        ambient_.check_element(g);
        g = ambient_.reduce(g);
        cols.push_back(g);
    }
    for (auto& r : ambient_.relation_vectors()) cols.push_back(std::move(r));
    lifted_ = Matrix::from_columns(dim, cols);
    if (dim > 0 && lifted_.cols() > 0) lifted_snf_ = smith_normal_form(lifted_);
    // Relations: projections of kernel vectors of [H | D] onto the first m coordinates.
    if (dim == 0) {
        for (std::size_t i = 0; i < m; ++i) relations_.push_back(unit_vector(m, i));
    } else {
        for (const auto& k : kernel_vectors(lifted_)) {
            Vector r(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(m));
            if (!is_zero(r)) relations_.push_back(std::move(r));
        }
    }
    quotient_ = quotient_map(m, relations_);
}

Vector Subgroup::generator_image(std::size_t i) const {
    return quotient_.group.reduce(quotient_.transform.column(i));
}

Vector Subgroup::to_ambient(std::span<const Integer> local) const {
    Vector c = quotient_.section.apply(local);
    Vector out = ambient_.zero();
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (sgn(c[i]))
            for (std::size_t k = 0; k < out.size(); ++k) out[k] += c[i] * generators_[i][k];
    return ambient_.reduce(std::move(out));
}

std::optional<Vector> Subgroup::combination(const Vector& element) const {
    ambient_.check_element(element);
    const std::size_t m = generators_.size();
    if (ambient_.dimension() == 0) return zero_vector(m);
    if (lifted_.cols() == 0) {
        if (is_zero(element)) return zero_vector(m);
        return std::nullopt;
    }
    auto x = integer_solve(lifted_snf_, lifted_.cols(), element);
    if (!x) return std::nullopt;
    x->resize(m);
    return x;
}

std::optional<Vector> Subgroup::to_local(const Vector& element) const {
    auto c = combination(element);
    if (!c) return std::nullopt;
    return quotient_(*c);
}

AbelianGroup kernel(const GroupHom& f) {
    // K = {x : F x in D_target Z^k}; Ker = image of K in the source group.
    const std::size_t a = f.source.dimension();
    std::vector<Vector> cols = f.matrix.columns();
    for (auto& r : f.target.relation_vectors()) cols.push_back(std::move(r));
    std::vector<Vector> gens;
    if (f.target.dimension() == 0) {
        for (std::size_t i = 0; i < a; ++i) gens.push_back(unit_vector(a, i));
    } else {
        for (const auto& k : kernel_vectors(Matrix::from_columns(f.target.dimension(), cols)))
            gens.emplace_back(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(a));
    }
    return Subgroup(f.source, std::move(gens)).group();
}

DirectSum direct_sum(const AbelianGroup& g, const AbelianGroup& h) {
    const std::size_t fg = g.free_rank(), fh = h.free_rank(), tg = g.torsion_count(), th = h.torsion_count();
    Vector factors = g.invariant_factors();
    factors.insert(factors.end(), h.invariant_factors().begin(), h.invariant_factors().end());
    bool chain = true;
    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
        if (!mpz_divisible_p(factors[i + 1].get_mpz_t(), factors[i].get_mpz_t())) chain = false;
    DirectSum s;
    if (chain) {
        s.group = AbelianGroup(fg + fh, factors);
        s.left = Matrix(s.group.dimension(), g.dimension());
        s.right = Matrix(s.group.dimension(), h.dimension());
        for (std::size_t i = 0; i < fg; ++i) s.left(i, i) = 1;
        for (std::size_t i = 0; i < fh; ++i) s.right(fg + i, i) = 1;
        for (std::size_t i = 0; i < tg; ++i) s.left(fg + fh + i, fg + i) = 1;
        for (std::size_t i = 0; i < th; ++i) s.right(fg + fh + tg + i, fh + i) = 1;
        return s;
    }
    const std::size_t n = g.dimension() + h.dimension();
    std::vector<Vector> rel;
    for (const auto& r : g.relation_vectors()) {
        Vector v = r;
        v.resize(n);
        rel.push_back(std::move(v));
    }
    for (const auto& r : h.relation_vectors()) {
        Vector v = zero_vector(g.dimension());
        v.insert(v.end(), r.begin(), r.end());
        rel.push_back(std::move(v));
    }
    QuotientMap q = quotient_map(n, rel);
    s.group = q.group;
    s.left = Matrix(s.group.dimension(), g.dimension());
    s.right = Matrix(s.group.dimension(), h.dimension());
    for (std::size_t i = 0; i < s.group.dimension(); ++i) {
        for (std::size_t j = 0; j < g.dimension(); ++j) s.left(i, j) = q.transform(i, j);
        for (std::size_t j = 0; j < h.dimension(); ++j) s.right(i, j) = q.transform(i, g.dimension() + j);
    }
    return s;
}

QuotientMap cokernel_map(const GroupHom& f) {
    return quotient_map(f.target, f.matrix.columns());
}

}  // namespace logmonoid
