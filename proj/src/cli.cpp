#include "sylv/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sylv/doublesum.hpp"
#include "sylv/errors.hpp"
#include "sylv/format.hpp"
#include "sylv/subresultant.hpp"
#include "sylv/sylvmatrix.hpp"
#include "sylv/verify.hpp"

namespace sylv::cli {

namespace {

RootList parse_roots(const std::string& text) {
    return RootList(parse_rat_list(text));
}

UniPoly parse_monic_coeffs(const std::string& text) {
    UniPoly p(parse_rat_list(text));
    if (!p.is_monic())
        throw DomainError("polynomial must be monic: leading coefficient is " +
                          p.leading().str());
    return p;
}

// one polynomial given either as roots or as ascending monic coefficients
struct PolyInput {
    std::string roots;
    std::string coeffs;

    UniPoly poly() const {
        return roots.empty() ? parse_monic_coeffs(coeffs)
                             : UniPoly::from_roots(parse_roots(roots));
    }
    bool given() const { return !roots.empty() || !coeffs.empty(); }
};

struct VerifyOptions {
    int m = 0, n = 0;
    int trials = 1;
    std::uint64_t seed = 0;
    std::string suite = "all";
    bool json = false;
};

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    int m = opt.m, n = opt.n;
    if (m > n) {
        std::swap(m, n);
        err << "note: swapped m and n to enforce m <= n\n";
    }
    const bool run_main = opt.suite == "main" || opt.suite == "all";
    const bool run_matrix = opt.suite == "matrix" || opt.suite == "all";

    std::ostringstream text;
    ordered_json reports = ordered_json::array();
    bool all_pass = true;
    for (int t = 0; t < opt.trials; ++t) {
        const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(t);
        const auto [a, b] = random_instance(m, n, seed);
        std::vector<VerificationReport> runs;
        if (run_main)
            runs.push_back(verify_double_sum(a, b));
        if (run_matrix)
            runs.push_back(verify_matrix_suite(a, b));
        for (size_t i = 0; i < runs.size(); ++i) {
            VerificationReport& rep = runs[i];
            rep.seed = seed;
            all_pass = all_pass && rep.pass();
            if (opt.json) {
                reports.push_back(to_json(rep));
            } else {
                const char* label = (run_main && i == 0) ? "main" : "matrix";
                text << "instance m=" << rep.m << " n=" << rep.n << " seed=" << seed
                     << " suite=" << label << ": "
                     << (rep.pass() ? "pass" : "FAIL") << " ("
                     << (rep.checks.size() - static_cast<size_t>(rep.failures())) << "/"
                     << rep.checks.size() << " checks)\n";
                for (const CheckRecord& c : rep.checks)
                    if (!c.pass)
                        text << "  FAIL " << c.name << " [" << c.case_tag
                             << "] expected " << c.expected << ", got " << c.actual << "\n";
            }
        }
    }
    if (opt.json) {
        out << reports.dump() << "\n";
    } else {
        text << (all_pass ? "all checks passed" : "verification FAILED") << "\n";
        out << text.str();
    }
    return all_pass ? 0 : 1;
}

void emit_poly(const UniPoly& p, bool json, std::ostream& out) {
    if (json)
        out << to_json(p).dump() << "\n";
    else
        out << to_text(p) << "\n";
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Sylvester double sums, subresultants and their matrix identities"};
    app.require_subcommand(1);

    // --- sylv ---
    auto* sylv_cmd = app.add_subcommand("sylv", "Compute Sylv^{p,q}(A,B;x) by direct summation");
    std::string sylv_a, sylv_b;
    int sylv_p = 0, sylv_q = 0;
    bool sylv_json = false;
    sylv_cmd->add_option("--a", sylv_a, "roots of f, comma separated")->required();
    sylv_cmd->add_option("--b", sylv_b, "roots of g, comma separated")->required();
    sylv_cmd->add_option("--p", sylv_p, "subset size p")->required();
    sylv_cmd->add_option("--q", sylv_q, "subset size q")->required();
    sylv_cmd->add_flag("--json", sylv_json, "JSON output");

    // --- sres / cof ---
    auto add_pair_inputs = [](CLI::App* cmd, PolyInput& fin, PolyInput& gin) {
        auto* fa = cmd->add_option("--a", fin.roots, "roots of f, comma separated");
        auto* fc = cmd->add_option("--f", fin.coeffs, "ascending monic coefficients of f");
        auto* gb = cmd->add_option("--b", gin.roots, "roots of g, comma separated");
        auto* gc = cmd->add_option("--g", gin.coeffs, "ascending monic coefficients of g");
        fa->excludes(fc);
        gb->excludes(gc);
    };

    auto* sres_cmd = app.add_subcommand("sres", "Compute the subresultant Sres_k(f,g)");
    PolyInput sres_f, sres_g;
    int sres_k = 0;
    bool sres_json = false;
    add_pair_inputs(sres_cmd, sres_f, sres_g);
    sres_cmd->add_option("--k", sres_k, "subresultant index")->required();
    sres_cmd->add_flag("--json", sres_json, "JSON output");

    auto* cof_cmd = app.add_subcommand("cof", "Compute the cofactors F_k, G_k of Sres_k");
    PolyInput cof_f, cof_g;
    int cof_k = 0;
    bool cof_json = false;
    add_pair_inputs(cof_cmd, cof_f, cof_g);
    cof_cmd->add_option("--k", cof_k, "subresultant index")->required();
    cof_cmd->add_flag("--json", cof_json, "JSON output");

    // --- ud ---
    auto* ud_cmd = app.add_subcommand("ud", "Compute u_d(x,T) or one T-coefficient of it");
    std::string ud_a, ud_b;
    int ud_d = 0;
    std::optional<int> ud_p;
    bool ud_json = false;
    ud_cmd->add_option("--a", ud_a, "roots of f, comma separated")->required();
    ud_cmd->add_option("--b", ud_b, "roots of g, comma separated")->required();
    ud_cmd->add_option("--d", ud_d, "block index d in [0, m+n]")->required();
    ud_cmd->add_option("--coeff", ud_p, "emit u_{d,p}(x) instead of u_d(x,T)");
    ud_cmd->add_flag("--json", ud_json, "JSON output");

    // --- verify ---
    auto* verify_cmd = app.add_subcommand("verify", "Run the randomized verification suites");
    VerifyOptions vopt;
    verify_cmd->add_option("--m", vopt.m, "size of A")->required();
    verify_cmd->add_option("--n", vopt.n, "size of B")->required();
    verify_cmd->add_option("--trials", vopt.trials, "number of random instances")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", vopt.seed, "base seed");
    verify_cmd->add_option("--suite", vopt.suite, "main|matrix|all")
        ->check(CLI::IsMember({"main", "matrix", "all"}));
    verify_cmd->add_flag("--json", vopt.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (sylv_cmd->parsed()) {
            const RootList a = parse_roots(sylv_a);
            const RootList b = parse_roots(sylv_b);
            emit_poly(sylvester_double_sum(a, b, sylv_p, sylv_q), sylv_json, out);
            return 0;
        }
        if (sres_cmd->parsed() || cof_cmd->parsed()) {
            const bool is_sres = sres_cmd->parsed();
            PolyInput& fin = is_sres ? sres_f : cof_f;
            PolyInput& gin = is_sres ? sres_g : cof_g;
            if (!fin.given() || !gin.given())
                throw DomainError("both polynomials are required (give --a/--f and --b/--g)");
            UniPoly f = fin.poly();
            UniPoly g = gin.poly();
            if (f.degree() > g.degree()) {
                std::swap(f, g);
                err << "note: swapped f and g to enforce deg f <= deg g\n";
            }
            if (is_sres) {
                emit_poly(sres(f, g, sres_k), sres_json, out);
            } else {
                const CofactorPair pair = cofactors(f, g, cof_k);
                if (cof_json) {
                    ordered_json j;
                    j["F"] = to_json(pair.f_cof);
                    j["G"] = to_json(pair.g_cof);
                    out << j.dump() << "\n";
                } else {
                    out << "F = " << to_text(pair.f_cof) << "\n";
                    out << "G = " << to_text(pair.g_cof) << "\n";
                }
            }
            return 0;
        }
        if (ud_cmd->parsed()) {
            RootList a = parse_roots(ud_a);
            RootList b = parse_roots(ud_b);
            if (a.size() > b.size()) {
                std::swap(a, b);
                err << "note: swapped A and B to enforce |A| <= |B|\n";
            }
            const UdContext ctx(std::move(a), std::move(b), ud_d);
            if (ud_p.has_value()) {
                emit_poly(ud_coeff(ctx, *ud_p), ud_json, out);
            } else if (ud_json) {
                out << to_json(ud_det(ctx)).dump() << "\n";
            } else {
                out << to_text(ud_det(ctx)) << "\n";
            }
            return 0;
        }
        return run_verify(vopt, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace sylv::cli
