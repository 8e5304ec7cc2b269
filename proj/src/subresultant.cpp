#include "sylv/subresultant.hpp"

#include <string>

#include "sylv/errors.hpp"

namespace sylv {

namespace {

void require_monic_pair(const UniPoly& f, const UniPoly& g) {
    if (f.degree() < 1 || g.degree() < 1)
        throw DomainError("subresultants require deg f >= 1 and deg g >= 1");
    if (!f.is_monic() || !g.is_monic())
        throw DomainError("subresultants require monic polynomials");
    if (f.degree() > g.degree())
        throw DomainError("subresultants require deg f <= deg g");
}

void require_k_range(const UniPoly& f, const UniPoly& g, int k) {
    const int m = f.degree(), n = g.degree();
    const bool ok = (m < n) ? (k >= 0 && k <= m) : (k >= 0 && k < m);
    if (!ok)
        throw DomainError("subresultant index k=" + std::to_string(k) +
                          " out of range for m=" + std::to_string(m) +
                          ", n=" + std::to_string(n));
}

// Signed scalar minors of the defining matrix along its last column:
// c_i = (-1)^{i+s-1} det(minor_i), 0-based, s = m+n-2k.  The band rows are
// coefficients of x^{n-k-i}f and x^{m-k-i}g on the powers
// x^{m+n-k-1}, ..., x^{k+1}: entry (i,j) = a_{m+i-j} resp. b_{n+i-j}
// (1-based, zero outside [0, deg]).
std::vector<Rat> last_column_cofactors(const UniPoly& f, const UniPoly& g, int k) {
    const int m = f.degree(), n = g.degree();
    const int s = m + n - 2 * k;
    const int frows = n - k;

    auto band_entry = [&](int i, int j) -> Rat { // 0-based row/col of the scalar band
        return i < frows ? f.coeff(m + (i + 1) - (j + 1)) : g.coeff(n + (i - frows + 1) - (j + 1));
    };

    std::vector<Rat> cof(static_cast<size_t>(s));
    for (int skip = 0; skip < s; ++skip) {
        PolyMatrix minor(s - 1, s - 1);
        for (int i = 0, r = 0; i < s; ++i) {
            if (i == skip)
                continue;
            for (int j = 0; j + 1 < s; ++j)
                minor.at(r, j) = BiPoly(UniPoly(band_entry(i, j)));
            ++r;
        }
        Rat d = det(minor).eval_t(Rat(0)).eval(Rat(0));
        cof[static_cast<size_t>(skip)] = ((skip + s - 1) % 2 != 0) ? -d : d;
    }
    return cof;
}

} // namespace

PolyMatrix sres_matrix(const UniPoly& f, const UniPoly& g, int k) {
    require_monic_pair(f, g);
    require_k_range(f, g, k);
    const int m = f.degree(), n = g.degree();
    const int s = m + n - 2 * k;
    const int frows = n - k;

    PolyMatrix out(s, s);
    for (int i = 0; i < s; ++i) {
        const bool frow = i < frows;
        const UniPoly& p = frow ? f : g;
        const int deg = frow ? m : n;
        const int r = frow ? i : i - frows;
        for (int j = 0; j + 1 < s; ++j)
            out.at(i, j) = BiPoly(UniPoly(p.coeff(deg + (r + 1) - (j + 1))));
        out.at(i, s - 1) = BiPoly(p.shifted(frow ? n - k - 1 - r : m - k - 1 - r));
    }
    return out;
}

CofactorPair cofactors(const UniPoly& f, const UniPoly& g, int k) {
    require_monic_pair(f, g);
    require_k_range(f, g, k);
    const int m = f.degree(), n = g.degree();
    const int s = m + n - 2 * k;
    const int frows = n - k;

    const std::vector<Rat> cof = last_column_cofactors(f, g, k);
    CofactorPair pair;
    for (int i = 0; i < frows; ++i)
        pair.f_cof += UniPoly::monomial(n - k - 1 - i, cof[static_cast<size_t>(i)]);
    for (int i = frows; i < s; ++i)
        pair.g_cof += UniPoly::monomial(m - k - 1 - (i - frows), cof[static_cast<size_t>(i)]);
    return pair;
}

UniPoly sres(const UniPoly& f, const UniPoly& g, int k) {
    const CofactorPair c = cofactors(f, g, k);
    return c.f_cof * f + c.g_cof * g;
}

Rat scalar_subresultant(const UniPoly& f, const UniPoly& g, int k) {
    require_monic_pair(f, g);
    const int m = f.degree(), n = g.degree();
    if (k == m && m == n)
        return Rat(1);
    require_k_range(f, g, k);
    return sres(f, g, k).coeff(k);
}

Rat resultant(const UniPoly& f, const UniPoly& g) {
    require_monic_pair(f, g);
    const UniPoly r = sres(f, g, 0);
    return r.coeff(0);
}

bool delta_vandermonde_check(const RootList& a_roots, const UniPoly& g, int k) {
    const int m = a_roots.size();
    if (k < 0 || k > m)
        throw DomainError("delta_vandermonde_check requires 0 <= k <= |A|");
    const UniPoly f = UniPoly::from_roots(a_roots);

    const Rat delta = scalar_subresultant(f, g, k);
    const Rat lhs = delta * vandermonde(a_roots);

    PolyMatrix stacked(m, m);
    const PolyMatrix top = block(Kernel::One, a_roots, k);
    const PolyMatrix bottom = block(g, a_roots, m - k);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < k; ++i)
            stacked.at(i, j) = top.at(i, j);
        for (int i = 0; i < m - k; ++i)
            stacked.at(k + i, j) = bottom.at(i, j);
    }
    const BiPoly rhs = det(stacked);
    return BiPoly(UniPoly(lhs)) == rhs;
}

} // namespace sylv
