#include "sylv/sylvmatrix.hpp"

#include <string>

#include "sylv/doublesum.hpp"
#include "sylv/errors.hpp"

namespace sylv {

namespace {

// destination-offset copy of src into dst
void paste(PolyMatrix& dst, const PolyMatrix& src, int row0, int col0) {
    for (int i = 0; i < src.rows(); ++i)
        for (int j = 0; j < src.cols(); ++j)
            dst.at(row0 + i, col0 + j) = src.at(i, j);
}

BiPoly t_minus_one_pow(int e) {
    return pow(BiPoly(std::vector<UniPoly>{UniPoly(-1), UniPoly::one()}), e);
}

} // namespace

UdContext::UdContext(RootList a, RootList b, int d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (a_.size() < 1 || a_.size() > b_.size())
        throw DomainError("context requires 1 <= |A| <= |B|");
    if (d_ < 0 || d_ > a_.size() + b_.size())
        throw DomainError("d=" + std::to_string(d_) + " out of [0, m+n]");
    f_ = UniPoly::from_roots(a_);
    g_ = UniPoly::from_roots(b_);
    va_ = vandermonde(a_);
    vb_ = vandermonde(b_);
}

PolyMatrix build_ud(const UdContext& ctx) {
    const int m = ctx.m(), n = ctx.n(), d = ctx.d(), dp = ctx.d_prime();
    PolyMatrix u(m + n, m + n);
    paste(u, block(Kernel::One, ctx.b(), dp), 0, 0);
    paste(u, block(Kernel::T, ctx.a(), dp), 0, n);
    paste(u, block(Kernel::XMinusRoot, ctx.b(), d), dp, 0);
    paste(u, block(Kernel::XMinusRoot, ctx.a(), d), dp, n);
    return u;
}

BiPoly ud_det(const UdContext& ctx) {
    return det(build_ud(ctx));
}

UniPoly ud_coeff(const UdContext& ctx, int p) {
    if (p < 0 || p > ctx.m())
        throw DomainError("coefficient index p=" + std::to_string(p) + " out of [0, m]");
    return ud_det(ctx).t_coeff(ctx.m() - p);
}

bool scaling_relation_check(const UdContext& ctx, int p) {
    const int m = ctx.m(), n = ctx.n(), q = ctx.d() - p;
    const UniPoly lhs = ud_coeff(ctx, p);
    if (q < 0 || q > n)
        return lhs.is_zero();
    const Rat scale = sign_pow(static_cast<long long>(q) * (m - p)) * ctx.vand_a() * ctx.vand_b();
    return lhs == scale * sylvester_double_sum(ctx.a(), ctx.b(), p, q);
}

PolyMatrix factor_left(const UdContext& ctx) {
    const int d = ctx.d(), dp = ctx.d_prime(), size = ctx.m() + ctx.n();
    PolyMatrix left(size, size + 1);
    paste(left, PolyMatrix::identity(dp), 0, 0);
    for (int i = 0; i < d; ++i) {
        left.at(dp + i, dp + i) = BiPoly(UniPoly::x());
        left.at(dp + i, dp + i + 1) = BiPoly(-1);
    }
    return left;
}

PolyMatrix factor_right(const UdContext& ctx) {
    const int m = ctx.m(), n = ctx.n(), d = ctx.d(), dp = ctx.d_prime();
    PolyMatrix right(m + n + 1, m + n);
    paste(right, block(Kernel::One, ctx.b(), dp), 0, 0);
    paste(right, block(Kernel::T, ctx.a(), dp), 0, n);
    paste(right, block(Kernel::One, ctx.b(), d + 1), dp, 0);
    paste(right, block(Kernel::One, ctx.a(), d + 1), dp, n);
    return right;
}

bool factor1_check(const UdContext& ctx) {
    return factor_left(ctx) * factor_right(ctx) == build_ud(ctx);
}

PQPair pq_polys(const UdContext& ctx) {
    const int m = ctx.m(), n = ctx.n(), d = ctx.d(), dp = ctx.d_prime();
    const UniPoly& f = ctx.f();
    const UniPoly& g = ctx.g();

    PQPair pq;
    if (d < m || (d == m && m < n)) {
        // P = Sres_d,  Q = -F_d f - (1/T) G_d g
        const CofactorPair c = cofactors(f, g, d);
        pq.p = BiPoly(sres(f, g, d));
        pq.tq = BiPoly::t_monomial(1, -(c.f_cof * f)) + BiPoly(-(c.g_cof * g));
    } else if (m < d && d == n - 1) {
        pq.p = BiPoly(f);
        pq.tq = BiPoly::t_monomial(1, -f);
    } else if (n <= d && d < m + n) {
        // P = F_{d'-1} f + T G_{d'-1} g,  Q = -Sres_{d'-1}
        const CofactorPair c = cofactors(f, g, dp - 1);
        pq.p = BiPoly(c.f_cof * f) + BiPoly::t_monomial(1, c.g_cof * g);
        pq.tq = BiPoly::t_monomial(1, -sres(f, g, dp - 1));
    } else if (d == m + n) {
        pq.p = BiPoly(f * g);
        pq.tq = BiPoly();
    } else {
        throw NotApplicable("no P/Q pair exists for m < d < n-1 (d=" + std::to_string(d) + ")");
    }
    pq.k = pq.p.deg_x();
    pq.p_lead = pq.p.x_leading();
    return pq;
}

bool condition_check(const UdContext& ctx, const PQPair& pq) {
    for (const Rat& beta : ctx.b()) {
        UniPoly in_t = pq.tq.eval_x(beta) + pq.p.eval_x(beta).shifted(1);
        if (!in_t.is_zero())
            return false;
    }
    for (const Rat& alpha : ctx.a()) {
        UniPoly in_t = pq.tq.eval_x(alpha) + pq.p.eval_x(alpha);
        if (!in_t.is_zero())
            return false;
    }
    return true;
}

PolyMatrix companion_matrix(const UdContext& ctx, const PQPair& pq) {
    const int d = ctx.d(), dp = ctx.d_prime(), size = ctx.m() + ctx.n() + 1;
    PolyMatrix c(size, size);
    paste(c, PolyMatrix::identity(dp), 0, 0);
    for (int i = 0; i < d; ++i) {
        c.at(dp + i, dp + i) = BiPoly(UniPoly::x());
        c.at(dp + i, dp + i + 1) = BiPoly(-1);
    }
    const BiPoly tp = BiPoly::t() * pq.p;
    for (int j = 0; j < dp; ++j)
        c.at(size - 1, j) = pq.tq.x_coeff(j);
    for (int j = 0; j <= d; ++j)
        c.at(size - 1, dp + j) = tp.x_coeff(j);
    return c;
}

bool companion_det_check(const UdContext& ctx, const PQPair& pq) {
    return det(companion_matrix(ctx, pq)) == BiPoly::t() * pq.p;
}

PolyMatrix md_matrix(const UdContext& ctx, int k) {
    const int m = ctx.m(), n = ctx.n(), d = ctx.d(), dp = ctx.d_prime();
    if (k < 0 || k > d)
        throw DomainError("border index k=" + std::to_string(k) + " out of [0, d]");
    PolyMatrix md(m + n + 1, m + n + 1);
    paste(md, block(Kernel::One, ctx.b(), dp), 0, 0);
    paste(md, block(Kernel::T, ctx.a(), dp), 0, n);
    paste(md, block(Kernel::One, ctx.b(), d + 1), dp, 0);
    paste(md, block(Kernel::One, ctx.a(), d + 1), dp, n);
    md.at(dp + k, m + n) = BiPoly::one();
    return md;
}

BiPoly md_det(const UdContext& ctx, int k) {
    return det(md_matrix(ctx, k));
}

int md_border_index(const UdContext& ctx) {
    const int m = ctx.m(), n = ctx.n(), d = ctx.d();
    if (m < d && d < n - 1)
        throw NotApplicable("no border index for m < d < n-1 (d=" + std::to_string(d) + ")");
    return (m < d && d == n - 1) ? m : d;
}

BiPoly md_closed_form(const UdContext& ctx) {
    const int m = ctx.m(), n = ctx.n(), d = ctx.d(), dp = ctx.d_prime();
    const Rat vv = ctx.vand_a() * ctx.vand_b();

    // d = m = n belongs to both the first and third branch of the closed
    // form (the values coincide); route it with the third, as pq_polys does.
    if (d <= m && !(d == m && m == n)) {
        const Rat delta = scalar_subresultant(ctx.f(), ctx.g(), d);
        return sign_pow(static_cast<long long>(d) * m) * vv * delta *
               BiPoly::t_monomial(m - d) * t_minus_one_pow(d);
    }
    if (m < d && d == n - 1)
        return sign_pow(static_cast<long long>(m) * (d - 1) + d) * vv * t_minus_one_pow(m);
    if (n <= d && d < m + n) {
        const Rat delta = scalar_subresultant(ctx.f(), ctx.g(), dp);
        return sign_pow(static_cast<long long>(dp) * n) * vv * delta * t_minus_one_pow(dp);
    }
    if (d == m + n)
        return BiPoly(UniPoly(vv * resultant(ctx.f(), ctx.g())));
    throw NotApplicable("no closed form for m < d < n-1 (d=" + std::to_string(d) + ")");
}

bool factor_product_check(const UdContext& ctx, const PQPair& pq) {
    const int size = ctx.m() + ctx.n();
    const PolyMatrix product = companion_matrix(ctx, pq) * md_matrix(ctx, pq.k);
    const PolyMatrix ud = build_ud(ctx);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            if (product.at(i, j) != ud.at(i, j))
                return false;
    for (int j = 0; j < size; ++j)
        if (!product.at(size, j).is_zero())
            return false;
    return product.at(size, size) == BiPoly::t() * pq.p_lead;
}

BiPoly ud_closed_form(const UdContext& ctx) {
    const int m = ctx.m(), n = ctx.n(), d = ctx.d(), dp = ctx.d_prime();
    const Rat vv = ctx.vand_a() * ctx.vand_b();
    const UniPoly& f = ctx.f();
    const UniPoly& g = ctx.g();

    if (d < m || (d == m && m < n))
        return sign_pow(static_cast<long long>(d) * m) * vv *
               (BiPoly(sres(f, g, d)) * BiPoly::t_monomial(m - d) * t_minus_one_pow(d));
    if (m < d && d < n - 1)
        return BiPoly();
    const long long sigma = static_cast<long long>(dp - 1) * n + d;
    if (m < d && d == n - 1)
        return sign_pow(sigma) * vv * (BiPoly(f) * t_minus_one_pow(m));
    if (n <= d && d < m + n) {
        const CofactorPair c = cofactors(f, g, dp - 1);
        const BiPoly combo = BiPoly(c.f_cof * f) + BiPoly::t_monomial(1, c.g_cof * g);
        return sign_pow(sigma) * vv * (combo * t_minus_one_pow(dp - 1));
    }
    return BiPoly(UniPoly(vv * resultant(f, g))) * BiPoly(f * g);
}

} // namespace sylv
