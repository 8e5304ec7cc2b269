#pragma once

#include "sylv/matrix.hpp"
#include "sylv/subresultant.hpp"

namespace sylv {

/// Root lists A (size m), B (size n) with 1 <= m <= n, plus the block index
/// d in [0, m+n]; d' = m+n-d.  Caches f, g and the two Vandermonde scalars.
class UdContext {
public:
    UdContext(RootList a, RootList b, int d);

    const RootList& a() const { return a_; }
    const RootList& b() const { return b_; }
    int m() const { return a_.size(); }
    int n() const { return b_.size(); }
    int d() const { return d_; }
    int d_prime() const { return m() + n() - d_; }
    const UniPoly& f() const { return f_; }
    const UniPoly& g() const { return g_; }
    const Rat& vand_a() const { return va_; }
    const Rat& vand_b() const { return vb_; }

private:
    RootList a_, b_;
    int d_;
    UniPoly f_, g_;
    Rat va_, vb_;
};

/// The (m+n)-square matrix with block rows
///   [ <1,B>_{d'}   | <T,A>_{d'}   ]
///   [ <x-t,B>_d    | <x-t,A>_d    ].
PolyMatrix build_ud(const UdContext& ctx);

/// u_d(x,T) = det(build_ud), with T-expansion
/// u_{d,0} T^m + ... + u_{d,m-1} T + u_{d,m}.
BiPoly ud_det(const UdContext& ctx);

/// u_{d,p} = coefficient of T^{m-p} in u_d; requires 0 <= p <= m.
UniPoly ud_coeff(const UdContext& ctx, int p);

/// With q = d-p: checks u_{d,p} = (-1)^{q(m-p)} V(A) V(B) Sylv^{p,q} when
/// 0 <= q <= n, and u_{d,p} = 0 otherwise.
bool scaling_relation_check(const UdContext& ctx, int p);

/// Left factor of the rectangular factorization of U_d:
/// (m+n) x (m+n+1), identity block of size d' and the d x (d+1) bidiagonal
/// block with x on the diagonal and -1 beside it.
PolyMatrix factor_left(const UdContext& ctx);

/// Right factor: (m+n+1) x (m+n), <1,B>_{d'} | <T,A>_{d'} stacked over
/// <1,B>_{d+1} | <1,A>_{d+1}.
PolyMatrix factor_right(const UdContext& ctx);

/// factor_left * factor_right == build_ud, entrywise.
bool factor1_check(const UdContext& ctx);

/// The P, Q pair solving the annihilation conditions
///   Q(beta) + P(beta) = 0 for beta in B,
///   T Q(alpha) + P(alpha) = 0 for alpha in A.
/// Q may carry a 1/T term (the d <= m case), so the pair stores TQ = T*Q,
/// which is a genuine polynomial in every case.  k = deg_x P and p_lead is
/// the leading x-coefficient of P, a polynomial in T.
struct PQPair {
    BiPoly p;
    BiPoly tq;
    int k = 0;
    BiPoly p_lead;
};

/// Defined for 0 <= d <= m and n-1 <= d <= m+n; throws NotApplicable in the
/// gap m < d < n-1.
PQPair pq_polys(const UdContext& ctx);

/// The annihilation conditions, cleared of the 1/T denominator:
/// (TQ)(beta) + T*P(beta) = 0 and (TQ)(alpha) + P(alpha) = 0, as
/// polynomial identities in T.
bool condition_check(const UdContext& ctx, const PQPair& pq);

/// (m+n+1)-square: identity block, bidiagonal x/-1 block, bottom row
/// (TQ_0 ... TQ_{d'-1}, (TP)_0 ... (TP)_d).
PolyMatrix companion_matrix(const UdContext& ctx, const PQPair& pq);

/// det(companion_matrix) == T * P(x)  (bottom row cleared by T).
bool companion_det_check(const UdContext& ctx, const PQPair& pq);

/// The bordered square matrix
///   [ <1,B>_{d'}   <T,A>_{d'}   0   ]
///   [ <1,B>_{d+1}  <1,A>_{d+1}  e_k ]
/// with e_k the (d+1)-vector with a single 1 in position k+1.
PolyMatrix md_matrix(const UdContext& ctx, int k);

BiPoly md_det(const UdContext& ctx, int k);

/// Border position for the standalone closed form: deg_x P, i.e. m for
/// m < d = n-1 and d otherwise (covered d only).
int md_border_index(const UdContext& ctx);

/// Closed form of det(md_matrix):
///   (-1)^{dm} V(A)V(B) Delta_d T^{m-d} (T-1)^d          for 0 <= d <= m
///   (-1)^{m(d-1)+d} V(A)V(B) (T-1)^m                    for m < d = n-1
///   (-1)^{d'n} V(A)V(B) Delta_{d'} (T-1)^{d'}           for n <= d < m+n
///   V(A)V(B) Res(f,g)                                   for d = m+n.
BiPoly md_closed_form(const UdContext& ctx);

/// companion_matrix * md_matrix reproduces the block identity: top-left
/// (m+n)-square equals U_d, bottom row is (0 ... 0, T*P_k).  The last
/// column above the bottom row is unconstrained.
bool factor_product_check(const UdContext& ctx, const PQPair& pq);

/// The complete closed form of u_d(x,T), sigma = (d'-1)n + d:
///   (-1)^{dm} V(A)V(B) Sres_d T^{m-d}(T-1)^d            for d < m or m = d < n
///   0                                                   for m < d < n-1
///   (-1)^sigma V(A)V(B) f (T-1)^m                       for m < d = n-1
///   (-1)^sigma V(A)V(B) (F_{d'-1}f + T G_{d'-1}g)(T-1)^{d'-1}
///                                                       for n <= d < m+n
///   V(A)V(B) Res(f,g) f g                               for d = m+n.
BiPoly ud_closed_form(const UdContext& ctx);

} // namespace sylv
