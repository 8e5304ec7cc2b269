#include <doctest.h>

#include "generators.hpp"
#include "sylv/doublesum.hpp"
#include "sylv/sylvmatrix.hpp"

using namespace sylv;

namespace {

// split a distinct pool into (A, B) with |A| = m
std::pair<RootList, RootList> split_roots(std::mt19937_64& rng, int m, int n) {
    const RootList all = testgen::roots(rng, m + n);
    return {RootList(std::vector<Rat>(all.begin(), all.begin() + m)),
            RootList(std::vector<Rat>(all.begin() + m, all.end()))};
}

const RootList a2{Rat(2)};
const RootList b3{Rat(3)};

} // namespace

TEST_CASE("context validation") {
    CHECK_THROWS_AS(UdContext(RootList{Rat(1), Rat(2)}, RootList{Rat(3)}, 1), DomainError);
    CHECK_THROWS_AS(UdContext(RootList{}, b3, 0), DomainError);
    CHECK_THROWS_AS(UdContext(a2, b3, 3), DomainError);
    CHECK_THROWS_AS(UdContext(a2, b3, -1), DomainError);
    const UdContext ctx(a2, b3, 1);
    CHECK(ctx.d_prime() == 1);
}

TEST_CASE("U_d fixtures for m = n = 1") {
    // d=1: [[1, T], [x-3, x-2]]
    const UdContext ctx(a2, b3, 1);
    const PolyMatrix u = build_ud(ctx);
    CHECK(u.at(0, 0) == BiPoly(1));
    CHECK(u.at(0, 1) == BiPoly::t());
    CHECK(u.at(1, 0) == BiPoly(UniPoly(std::vector<Rat>{Rat(-3), Rat(1)})));
    CHECK(u.at(1, 1) == BiPoly(UniPoly(std::vector<Rat>{Rat(-2), Rat(1)})));

    // u_1 = (x-2) - T(x-3)
    const BiPoly expected(std::vector<UniPoly>{
        UniPoly(std::vector<Rat>{Rat(-2), Rat(1)}),
        UniPoly(std::vector<Rat>{Rat(3), Rat(-1)}),
    });
    CHECK(ud_det(ctx) == expected);
    CHECK(ud_coeff(ctx, 0) == UniPoly(std::vector<Rat>{Rat(3), Rat(-1)}));
    CHECK(ud_coeff(ctx, 1) == UniPoly(std::vector<Rat>{Rat(-2), Rat(1)}));

    // d=2 (d'=0): only the x-t rows; u_2 = -(x-2)(x-3), no T
    const UdContext ctx2(a2, b3, 2);
    const UniPoly prod = UniPoly::from_roots(RootList{Rat(2), Rat(3)});
    CHECK(ud_det(ctx2) == BiPoly(-prod));

    // d=0: pure marker rows; u_0 = -T for these roots
    const UdContext ctx0(a2, b3, 0);
    CHECK(ud_det(ctx0) == BiPoly::t_monomial(1, UniPoly(-1)));
}

TEST_CASE("u_d vanishes in the gap m < d < n-1") {
    std::mt19937_64 rng(401);
    auto [a, b] = split_roots(rng, 1, 4);
    const UdContext ctx(a, b, 2);
    CHECK(ud_det(ctx) == BiPoly());
    CHECK(ud_closed_form(ctx) == BiPoly());
}

TEST_CASE("scaling relation against the double sum") {
    const UdContext ctx(a2, b3, 1);
    CHECK(ud_coeff(ctx, 0) ==
          sign_pow(1) * UniPoly(std::vector<Rat>{Rat(-3), Rat(1)})); // -(x-3)
    CHECK(scaling_relation_check(ctx, 0));
    CHECK(scaling_relation_check(ctx, 1));

    // q out of range: the coefficient must vanish
    std::mt19937_64 rng(409);
    auto [a, b] = split_roots(rng, 1, 1);
    const UdContext big(a, b, 2);
    CHECK(scaling_relation_check(big, 0)); // q = 2 > n = 1

    for (int trial = 0; trial < 4; ++trial) {
        const int m = static_cast<int>(testgen::pick(rng, 1, 3));
        const int n = static_cast<int>(testgen::pick(rng, m, 3));
        auto [ra, rb] = split_roots(rng, m, n);
        for (int d = 0; d <= m + n; ++d) {
            const UdContext c(ra, rb, d);
            for (int p = 0; p <= m; ++p)
                CHECK(scaling_relation_check(c, p));
        }
    }
}

TEST_CASE("rectangular factorization reproduces U_d") {
    const UdContext ctx(a2, b3, 1);
    CHECK(factor1_check(ctx));
    CHECK(factor1_check(UdContext(a2, b3, 0)));
    CHECK(factor1_check(UdContext(a2, b3, 2)));

    std::mt19937_64 rng(419);
    for (int trial = 0; trial < 4; ++trial) {
        const int m = static_cast<int>(testgen::pick(rng, 1, 4));
        const int n = static_cast<int>(testgen::pick(rng, m, 5));
        auto [a, b] = split_roots(rng, m, n);
        for (int d = 0; d <= m + n; ++d)
            CHECK(factor1_check(UdContext(a, b, d)));
    }
}

TEST_CASE("P/Q pairs: the four cases and their leading data") {
    // d = m+n: P = fg, k = d, P_k = 1
    {
        const UdContext ctx(a2, b3, 2);
        const PQPair pq = pq_polys(ctx);
        CHECK(pq.p == BiPoly(UniPoly::from_roots(RootList{Rat(2), Rat(3)})));
        CHECK(pq.tq == BiPoly());
        CHECK(pq.k == 2);
        CHECK(pq.p_lead == BiPoly::one());
        CHECK(condition_check(ctx, pq));
    }
    // m=1, n=3, d=2=n-1: P = f, k = m, P_k = 1
    {
        std::mt19937_64 rng(421);
        auto [a, b] = split_roots(rng, 1, 3);
        const UdContext ctx(a, b, 2);
        const PQPair pq = pq_polys(ctx);
        CHECK(pq.p == BiPoly(ctx.f()));
        CHECK(pq.tq == BiPoly::t_monomial(1, -ctx.f()));
        CHECK(pq.k == 1);
        CHECK(pq.p_lead == BiPoly::one());
        CHECK(condition_check(ctx, pq));
    }
    // m=n=2, d=2: P_k = Delta_{d'}(T-1) = (T-1) by the Delta_m = 1 convention
    {
        std::mt19937_64 rng(431);
        auto [a, b] = split_roots(rng, 2, 2);
        const UdContext ctx(a, b, 2);
        const PQPair pq = pq_polys(ctx);
        CHECK(pq.k == 2);
        CHECK(pq.p_lead == BiPoly(std::vector<UniPoly>{UniPoly(-1), UniPoly(1)}));
        CHECK(condition_check(ctx, pq));
    }
    // the uncovered gap throws
    {
        std::mt19937_64 rng(433);
        auto [a, b] = split_roots(rng, 1, 4);
        CHECK_THROWS_AS(pq_polys(UdContext(a, b, 2)), NotApplicable);
        CHECK_THROWS_AS(md_closed_form(UdContext(a, b, 2)), NotApplicable);
    }
}

TEST_CASE("companion determinant equals T*P") {
    std::mt19937_64 rng(439);
    for (int trial = 0; trial < 3; ++trial) {
        const int m = static_cast<int>(testgen::pick(rng, 1, 3));
        const int n = static_cast<int>(testgen::pick(rng, m, 4));
        auto [a, b] = split_roots(rng, m, n);
        for (int d = 0; d <= m + n; ++d) {
            if (d > m && d < n - 1)
                continue;
            const UdContext ctx(a, b, d);
            const PQPair pq = pq_polys(ctx);
            CHECK(companion_det_check(ctx, pq));
            CHECK(condition_check(ctx, pq));
            CHECK(factor_product_check(ctx, pq));
        }
    }
}

TEST_CASE("bordered determinant closed form") {
    // m=n=1, d=0: value is Res(f,g)*T = -T for A=(2), B=(3)
    {
        const UdContext ctx(a2, b3, 0);
        CHECK(md_closed_form(ctx) == BiPoly::t_monomial(1, UniPoly(-1)));
        CHECK(md_det(ctx, md_border_index(ctx)) == md_closed_form(ctx));
    }
    // m=1, n=3, d=2: -V(A)V(B)(T-1)
    {
        std::mt19937_64 rng(443);
        auto [a, b] = split_roots(rng, 1, 3);
        const UdContext ctx(a, b, 2);
        const Rat vv = ctx.vand_a() * ctx.vand_b();
        const BiPoly expected =
            Rat(-1) * vv * BiPoly(std::vector<UniPoly>{UniPoly(-1), UniPoly(1)});
        CHECK(md_closed_form(ctx) == expected);
        CHECK(md_border_index(ctx) == 1);
        CHECK(md_det(ctx, 1) == expected);
    }
    // d = m+n: V(A)V(B)Res = V(A cup B)
    {
        const UdContext ctx(a2, b3, 2);
        CHECK(md_closed_form(ctx) ==
              BiPoly(UniPoly(vandermonde(RootList{Rat(3), Rat(2)}))));
        CHECK(md_det(ctx, 2) == md_closed_form(ctx));
    }
}

TEST_CASE("u_d closed form across all branches") {
    // worked 1x1 cases
    CHECK(ud_closed_form(UdContext(a2, b3, 1)) == ud_det(UdContext(a2, b3, 1)));
    CHECK(ud_closed_form(UdContext(a2, b3, 2)) == ud_det(UdContext(a2, b3, 2)));
    CHECK(ud_closed_form(UdContext(a2, b3, 0)) == ud_det(UdContext(a2, b3, 0)));

    std::mt19937_64 rng(449);
    for (int trial = 0; trial < 3; ++trial) {
        const int m = static_cast<int>(testgen::pick(rng, 1, 3));
        const int n = static_cast<int>(testgen::pick(rng, m, 4));
        auto [a, b] = split_roots(rng, m, n);
        for (int d = 0; d <= m + n; ++d) {
            const UdContext ctx(a, b, d);
            CHECK(ud_det(ctx) == ud_closed_form(ctx));
        }
    }
}

TEST_CASE("pivotal identity u_d * P_k = P * det(M_d)") {
    std::mt19937_64 rng(457);
    for (int trial = 0; trial < 3; ++trial) {
        const int m = static_cast<int>(testgen::pick(rng, 1, 3));
        const int n = static_cast<int>(testgen::pick(rng, m, 4));
        auto [a, b] = split_roots(rng, m, n);
        for (int d = 0; d <= m + n; ++d) {
            if (d > m && d < n - 1)
                continue;
            const UdContext ctx(a, b, d);
            const PQPair pq = pq_polys(ctx);
            CHECK(ud_det(ctx) * pq.p_lead == pq.p * md_det(ctx, pq.k));
        }
    }
}
