#pragma once

#include "sylv/matrix.hpp"
#include "sylv/unipoly.hpp"

namespace sylv {

/// Bezout-style multipliers with Sres_k = f_cof * f + g_cof * g,
/// deg f_cof <= n-k-1 and deg g_cof <= m-k-1.
struct CofactorPair {
    UniPoly f_cof;
    UniPoly g_cof;
};

/// The (m+n-2k)-square matrix defining the k-th subresultant of monic f, g
/// (m = deg f, n = deg g, m <= n): n-k rows of shifted f-coefficients and
/// m-k rows of shifted g-coefficients, with last column
/// x^{n-k-1}f ... x^0 f, x^{m-k-1}g ... x^0 g.  Requires 0 <= k <= m < n or
/// 0 <= k < m = n.
PolyMatrix sres_matrix(const UniPoly& f, const UniPoly& g, int k);

/// Sres_k(f, g): determinant of sres_matrix, expanded along the last
/// column.  Degree <= k, and Sres_m = f for k = m < n.
UniPoly sres(const UniPoly& f, const UniPoly& g, int k);

/// F_k and G_k from splitting the last column of the defining matrix.
CofactorPair cofactors(const UniPoly& f, const UniPoly& g, int k);

/// Coefficient of x^k in Sres_k (zero in the defective case).  Also accepts
/// k = m = n, where it is 1 by convention.
Rat scalar_subresultant(const UniPoly& f, const UniPoly& g, int k);

/// Res(f, g) = Sres_0 read as a constant; equals the product of g over the
/// roots of f.
Rat resultant(const UniPoly& f, const UniPoly& g);

/// Checks the scalar-subresultant determinant identity
///   Delta_k(f, g) * V(A) = det [ <1,A>_k ; <g(t),A>_{m-k} ]
/// with f built from the root list A and 0 <= k <= m = |A|.
bool delta_vandermonde_check(const RootList& a_roots, const UniPoly& g, int k);

} // namespace sylv
