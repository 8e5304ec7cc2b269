#include "sylv/verify.hpp"

#include <random>
#include <sstream>

#include "sylv/doublesum.hpp"
#include "sylv/errors.hpp"
#include "sylv/format.hpp"
#include "sylv/sylvmatrix.hpp"

namespace sylv {

std::string_view branch_name(MainBranch b) {
    switch (b) {
    case MainBranch::SresBranch: return "SresBranch";
    case MainBranch::ZeroBranch: return "ZeroBranch";
    case MainBranch::FBranch: return "FBranch";
    case MainBranch::CofactorBranch: return "CofactorBranch";
    case MainBranch::ResBranch: return "ResBranch";
    }
    return "?";
}

SumCase classify(int m, int n, int p, int q) {
    if (m < 1 || m > n)
        throw DomainError("classify requires 1 <= m <= n");
    if (p < 0 || p > m || q < 0 || q > n)
        throw DomainError("classify requires 0 <= p <= m and 0 <= q <= n");

    SumCase c;
    c.m = m;
    c.n = n;
    c.p = p;
    c.q = q;
    c.d = p + q;
    c.k = m + n - c.d - 1;
    c.sigma = static_cast<long long>(q) * (m - p) + static_cast<long long>(n) * (c.d - m) +
              c.d + n - q - 1;

    if (c.d < m || (c.d == m && m < n))
        c.tag = MainBranch::SresBranch;
    else if (m < c.d && c.d < n - 1)
        c.tag = MainBranch::ZeroBranch;
    else if (m < c.d && c.d == n - 1)
        c.tag = MainBranch::FBranch;
    else if (c.d == m + n)
        c.tag = MainBranch::ResBranch;
    else
        c.tag = MainBranch::CofactorBranch;
    return c;
}

UniPoly double_sum_closed_form(const RootList& a, const RootList& b, int p, int q) {
    const SumCase c = classify(a.size(), b.size(), p, q);
    const UniPoly f = UniPoly::from_roots(a);
    const UniPoly g = UniPoly::from_roots(b);

    switch (c.tag) {
    case MainBranch::SresBranch:
        return (sign_pow(static_cast<long long>(p) * (c.m - c.d)) * Rat(binomial(c.d, p))) *
               sres(f, g, c.d);
    case MainBranch::ZeroBranch:
        return UniPoly();
    case MainBranch::FBranch:
        return (sign_pow(static_cast<long long>(c.m + q) * (p + 1)) * Rat(binomial(c.m, p))) * f;
    case MainBranch::CofactorBranch: {
        const CofactorPair cof = cofactors(f, g, c.k);
        const UniPoly lhs = Rat(binomial(c.k, c.m - p)) * (cof.f_cof * f);
        const UniPoly rhs = Rat(binomial(c.k, c.n - q)) * (cof.g_cof * g);
        return sign_pow(c.sigma) * (lhs - rhs);
    }
    case MainBranch::ResBranch:
        return resultant(f, g) * (f * g);
    }
    throw DomainError("unreachable branch");
}

bool VerificationReport::pass() const {
    for (const CheckRecord& c : checks)
        if (!c.pass)
            return false;
    return true;
}

int VerificationReport::failures() const {
    int count = 0;
    for (const CheckRecord& c : checks)
        if (!c.pass)
            ++count;
    return count;
}

namespace {

std::string describe(const RootList& roots) {
    std::ostringstream out;
    for (int i = 0; i < roots.size(); ++i) {
        if (i)
            out << ",";
        out << roots[i].str();
    }
    return out.str();
}

VerificationReport make_report(const RootList& a, const RootList& b) {
    if (a.size() > b.size())
        throw DomainError("verification requires |A| <= |B|");
    if (a.size() < 1)
        throw DomainError("verification requires |A| >= 1");
    VerificationReport rep;
    rep.m = a.size();
    rep.n = b.size();
    rep.a_desc = describe(a);
    rep.b_desc = describe(b);
    return rep;
}

void record_poly_check(VerificationReport& rep, std::string name, std::string case_tag,
                       const UniPoly& actual, const UniPoly& expected) {
    CheckRecord rec{std::move(name), std::move(case_tag), actual == expected, "", ""};
    if (!rec.pass) {
        rec.expected = to_text(expected);
        rec.actual = to_text(actual);
    }
    rep.checks.push_back(std::move(rec));
}

void record_poly_check(VerificationReport& rep, std::string name, std::string case_tag,
                       const BiPoly& actual, const BiPoly& expected) {
    CheckRecord rec{std::move(name), std::move(case_tag), actual == expected, "", ""};
    if (!rec.pass) {
        rec.expected = to_text(expected);
        rec.actual = to_text(actual);
    }
    rep.checks.push_back(std::move(rec));
}

void record_bool_check(VerificationReport& rep, std::string name, std::string case_tag, bool ok) {
    rep.checks.push_back(CheckRecord{std::move(name), std::move(case_tag), ok,
                                     ok ? "" : "true", ok ? "" : "false"});
}

} // namespace

VerificationReport verify_double_sum(const RootList& a, const RootList& b) {
    VerificationReport rep = make_report(a, b);
    for (int p = 0; p <= rep.m; ++p)
        for (int q = 0; q <= rep.n; ++q) {
            const SumCase c = classify(rep.m, rep.n, p, q);
            const UniPoly lhs = sylvester_double_sum(a, b, p, q);
            const UniPoly rhs = double_sum_closed_form(a, b, p, q);
            record_poly_check(rep,
                              "double_sum_vs_closed_form(p=" + std::to_string(p) +
                                  ",q=" + std::to_string(q) + ")",
                              std::string(branch_name(c.tag)), lhs, rhs);
        }
    return rep;
}

VerificationReport verify_matrix_suite(const RootList& a, const RootList& b) {
    VerificationReport rep = make_report(a, b);
    const int m = rep.m, n = rep.n;

    for (int d = 0; d <= m + n; ++d) {
        const UdContext ctx(a, b, d);
        const std::string dcase = "d=" + std::to_string(d);
        auto named = [&](const char* base) { return std::string(base) + "(" + dcase + ")"; };

        record_bool_check(rep, named("factorization"), dcase, factor1_check(ctx));

        const BiPoly ud = ud_det(ctx);
        record_poly_check(rep, named("ud_closed_form"), dcase, ud, ud_closed_form(ctx));
        if (m < d && d < n - 1)
            record_poly_check(rep, named("ud_vanishes"), dcase, ud, BiPoly());

        for (int p = 0; p <= m; ++p) {
            const int q = d - p;
            UniPoly expected;
            if (q >= 0 && q <= n)
                expected = (sign_pow(static_cast<long long>(q) * (m - p)) * ctx.vand_a() *
                            ctx.vand_b()) *
                           sylvester_double_sum(a, b, p, q);
            record_poly_check(rep,
                              "scaling_relation(" + dcase + ",p=" + std::to_string(p) + ")",
                              dcase, ud.t_coeff(m - p), expected);
        }

        const bool covered = d <= m || d >= n - 1;
        if (!covered)
            continue;

        // Degenerate inputs (a vanishing subresultant making P = 0) abort the
        // P/Q construction; report that as a failure instead of throwing.
        try {
            const PQPair pq = pq_polys(ctx);
            record_bool_check(rep, named("condition_eqs"), dcase, condition_check(ctx, pq));
            record_bool_check(rep, named("companion_det"), dcase, companion_det_check(ctx, pq));

            // leading data: deg_x P and its leading coefficient, per case
            int expected_k;
            BiPoly expected_lead;
            if (d <= m && !(d == m && m == n)) {
                expected_k = d;
                expected_lead = BiPoly(UniPoly(scalar_subresultant(ctx.f(), ctx.g(), d)));
            } else if (m < d && d == n - 1) {
                expected_k = m;
                expected_lead = BiPoly::one();
            } else if (d < m + n) {
                expected_k = d;
                expected_lead = sign_pow(d - n) *
                                scalar_subresultant(ctx.f(), ctx.g(), ctx.d_prime()) *
                                BiPoly(std::vector<UniPoly>{UniPoly(-1), UniPoly::one()});
            } else {
                expected_k = d;
                expected_lead = BiPoly::one();
            }
            record_bool_check(rep, named("leading_data"), dcase,
                              pq.k == expected_k && pq.p_lead == expected_lead);

            record_bool_check(rep, named("factor_product"), dcase,
                              factor_product_check(ctx, pq));

            const BiPoly md = md_det(ctx, pq.k);
            record_poly_check(rep, named("md_closed_form"), dcase, md, md_closed_form(ctx));
            record_poly_check(rep, named("pivotal_identity"), dcase, ud * pq.p_lead, pq.p * md);
        } catch (const std::exception& e) {
            rep.checks.push_back(
                CheckRecord{named("pq_construction"), dcase, false, "no exception", e.what()});
        }
    }
    return rep;
}

std::pair<RootList, RootList> random_instance(int m, int n, std::uint64_t seed) {
    if (m < 1 || m > n)
        throw DomainError("random_instance requires 1 <= m <= n");
    std::mt19937_64 rng(seed);
    auto draw_int = [&](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    std::vector<Rat> all;
    while (static_cast<int>(all.size()) < m + n) {
        Rat candidate(Int(draw_int(-99, 99)), Int(draw_int(1, 20)));
        bool fresh = true;
        for (const Rat& r : all)
            if (r == candidate) {
                fresh = false;
                break;
            }
        if (fresh)
            all.push_back(candidate);
    }
    std::vector<Rat> a(all.begin(), all.begin() + m);
    std::vector<Rat> b(all.begin() + m, all.end());
    return {RootList(std::move(a)), RootList(std::move(b))};
}

} // namespace sylv
