#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sylv/rootlist.hpp"
#include "sylv/unipoly.hpp"

namespace sylv {

/// The five branches of the closed-form case split for Sylv^{p,q}.
enum class MainBranch {
    SresBranch,     // d < m  or  m = d < n
    ZeroBranch,     // m < d < n-1
    FBranch,        // m < d = n-1
    CofactorBranch, // n <= d <= m+n-1
    ResBranch,      // d = m+n
};

std::string_view branch_name(MainBranch b);

/// Classification of a legal (p, q) cell: the unique branch plus the derived
/// quantities d = p+q, k = m+n-d-1 and
/// sigma = q(m-p) + n(d-m) + d + n - q - 1.
struct SumCase {
    MainBranch tag;
    int m, n, p, q;
    int d, k;
    long long sigma;
};

SumCase classify(int m, int n, int p, int q);

/// The closed-form value of Sylv^{p,q}(A, B; x) for the cell's branch:
///   SresBranch:     (-1)^{p(m-d)} C(d,p) Sres_d(f,g)
///   ZeroBranch:     0
///   FBranch:        (-1)^{(m+q)(p+1)} C(m,p) f
///   CofactorBranch: (-1)^sigma ( C(k,m-p) F_k f - C(k,n-q) G_k g )
///   ResBranch:      Res(f,g) f g
/// with f, g the monic polynomials with root lists A, B.
UniPoly double_sum_closed_form(const RootList& a, const RootList& b, int p, int q);

struct CheckRecord {
    std::string name;
    std::string case_tag;
    bool pass = false;
    // witnesses, rendered; empty on pass
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    int m = 0, n = 0;
    std::uint64_t seed = 0;
    std::string a_desc, b_desc;
    std::vector<CheckRecord> checks;

    bool pass() const;
    int failures() const;
};

/// Compares sylvester_double_sum against double_sum_closed_form on every
/// (p, q) in [0,m] x [0,n].  Requires |A| <= |B|.  Failures are recorded,
/// never thrown.
VerificationReport verify_double_sum(const RootList& a, const RootList& b);

/// Runs the full matrix-identity suite for every 0 <= d <= m+n:
/// the rectangular factorization, u_d against its closed form, the
/// vanishing range, the T-scaling relation for every p, and for covered d
/// the P/Q construction checks (annihilation conditions, companion
/// determinant, leading data, factor product, bordered-determinant closed
/// form, and u_d * P_k = P * det(M_d)).
VerificationReport verify_matrix_suite(const RootList& a, const RootList& b);

/// Deterministic random root lists: numerators uniform in [-99, 99],
/// denominators uniform in [1, 20], reduced, resampled until all m+n values
/// are pairwise distinct across both lists.  Identical (m, n, seed) yields
/// identical lists on every platform.
std::pair<RootList, RootList> random_instance(int m, int n, std::uint64_t seed);

} // namespace sylv
