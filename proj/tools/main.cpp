// Command-line surface for the counting, theta, cone and zeta pipelines.
// Exit codes: 0 success, 1 verification failure, 2 usage or guard error.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "dstar/errors.hpp"
#include "dstar/json_io.hpp"
#include "dstar/verify.hpp"
#include "dstar/zeta.hpp"

namespace {

using namespace dstar;

int cmd_count(long p, int alpha, int beta, int n, const std::string& mode) {
    Int value = mode == "brute" ? f_brute(p, alpha, beta, n) : f_fast(p, alpha, beta, n);
    std::cout << value.get_str() << "\n";
    return 0;
}

std::string plain_series(const std::map<int, Rat>& coeffs) {
    std::string out;
    for (const auto& [d, c] : coeffs)
        out += "t^" + std::to_string(d) + ": " + c.get_str() + "\n";
    return out;
}

int cmd_zeta(const std::string& group, bool symbolic, long p, int series,
             const std::string& format) {
    GroupTag tag = group == "x2" ? GroupTag::X2 : GroupTag::X3;
    if (symbolic || p == 0) {
        FactoredRational z = tag == GroupTag::X2 ? zeta_x2_closed() : zeta_x3_closed_s();
        if (format == "json")
            std::cout << rational_to_json(z) << "\n";
        else if (format == "latex")
            std::cout << zeta_closed_latex(tag) << "\n";
        else
            std::cout << z.str() << "\n";
        return 0;
    }
    if (tag == GroupTag::X3 && p == 2)
        throw OddPrimeRequired("the x^3 pipeline requires p > 2");
    int order = series >= 0 ? series : 10;
    auto coeffs = eval_coefficients(expand(
        tag == GroupTag::X2 ? zeta_x2_closed() : zeta_x3_closed_s(), order), p);
    if (format == "json")
        std::cout << numeric_series_to_json(coeffs) << "\n";
    else
        std::cout << plain_series(coeffs);
    return 0;
}

int cmd_theta(long p, int k, int m, int n, const std::string& mode,
              const std::string& format) {
    ThetaArgs args(p, k, m, n);
    ThetaMode tm = mode == "oracle" ? ThetaMode::Oracle : ThetaMode::Formula;
    Rat tilde = tm == ThetaMode::Formula ? theta_tilde_formula(args)
                                         : theta_tilde_oracle(args);
    Rat t0 = theta0(args, tm);
    Int t3 = theta3(args);
    Rat full = theta_full(args, tm);
    if (format == "json") {
        std::cout << "{\"case\":\"" << case_name(classify(args)) << "\",\"theta_tilde\":\""
                  << tilde.get_str() << "\",\"theta0\":\"" << t0.get_str()
                  << "\",\"theta3\":\"" << t3.get_str() << "\",\"theta\":\""
                  << full.get_str() << "\"}\n";
    } else {
        std::cout << "case: " << case_name(classify(args)) << "\n"
                  << "theta_tilde: " << tilde.get_str() << "\n"
                  << "theta0: " << t0.get_str() << "\n"
                  << "theta3: " << t3.get_str() << "\n"
                  << "theta: " << full.get_str() << "\n";
    }
    return 0;
}

int cmd_fseries(int alpha, int beta, int terms, const std::string& format) {
    TruncatedSeries s = beta >= 0 ? F_series(FKind::ZeroA, beta, terms)
                                  : F_series(FKind::A0, alpha, terms);
    if (format == "json") {
        std::cout << series_to_json(s) << "\n";
        return 0;
    }
    for (int d = 0; d <= terms; ++d) {
        // coefficients carry T^d; print them as polynomials in p
        Polynomial coeff = s.coefficient(d);
        Polynomial in_p;
        for (const auto& [m, c] : coeff.terms()) {
            Monomial stripped = m;
            stripped[Var::T] = 0;
            in_p.add_term(stripped, c);
        }
        std::cout << "T^" << d << ": " << in_p.str() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, bool deep) {
    auto results = suite == "all" ? run_suite("all", deep) : run_suite(suite, deep);
    bool ok = true;
    for (const auto& r : results) {
        std::printf("[%s] %s (%.2f s)%s%s\n",
                    r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL"), r.name.c_str(),
                    r.seconds, r.detail.empty() ? "" : " -- ", r.detail.c_str());
        if (!r.pass) {
            ok = false;
            break;  // report the first failing identity and stop
        }
    }
    std::printf("%s\n", ok ? "verify: ok" : "verify: FAILED");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local pro-isomorphic zeta functions of the D* groups for x^2 and x^3"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "count solutions of p^a xi^2 + p^b eta zeta = 0 mod p^n");
    long c_p = 3;
    int c_alpha = 0, c_beta = 0, c_n = 0;
    std::string c_mode = "fast";
    count->add_option("--p", c_p, "prime")->required();
    count->add_option("--alpha", c_alpha)->required();
    count->add_option("--beta", c_beta)->required();
    count->add_option("--n", c_n)->required();
    count->add_option("--mode", c_mode)->check(CLI::IsMember({"brute", "fast"}));

    // zeta
    auto* zeta = app.add_subcommand("zeta", "closed forms and series of the local zeta functions");
    std::string z_group;
    bool z_symbolic = false;
    long z_p = 0;
    int z_series = -1;
    std::string z_format = "plain";
    zeta->add_option("--group", z_group)->required()->check(CLI::IsMember({"x2", "x3"}));
    zeta->add_flag("--symbolic", z_symbolic);
    zeta->add_option("--p", z_p);
    zeta->add_option("--series", z_series);
    zeta->add_option("--format", z_format)->check(CLI::IsMember({"json", "latex", "plain"}));

    // theta
    auto* theta = app.add_subcommand("theta", "the weight theta on torus elements (x^3)");
    long t_p = 3;
    int t_k = 0, t_m = 0, t_n = 0;
    std::string t_mode = "formula", t_format = "plain";
    theta->add_option("--p", t_p)->required();
    theta->add_option("--k", t_k)->required();
    theta->add_option("--m", t_m)->required();
    theta->add_option("--n", t_n)->required();
    theta->add_option("--mode", t_mode)->check(CLI::IsMember({"formula", "oracle"}));
    theta->add_option("--format", t_format)->check(CLI::IsMember({"json", "plain"}));

    // fseries
    auto* fs = app.add_subcommand("fseries", "series of the counting generating functions");
    int f_alpha = -1, f_beta = -1, f_terms = 5;
    std::string f_format = "plain";
    fs->add_option("--alpha", f_alpha, "series F_{alpha,0}");
    fs->add_option("--beta", f_beta, "series F_{0,beta}");
    fs->add_option("--terms", f_terms);
    fs->add_option("--format", f_format)->check(CLI::IsMember({"json", "plain"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    std::string v_suite = "all";
    bool v_deep = false;
    verify->add_option("--suite", v_suite)
        ->check(CLI::IsMember({"arith", "lie", "count", "theta", "cones", "zeta", "funeq", "all"}));
    verify->add_flag("--deep", v_deep, "raise the sweep bounds");

    try {
        app.parse(argc, argv);
        if (count->parsed()) return cmd_count(c_p, c_alpha, c_beta, c_n, c_mode);
        if (zeta->parsed()) return cmd_zeta(z_group, z_symbolic, z_p, z_series, z_format);
        if (theta->parsed()) return cmd_theta(t_p, t_k, t_m, t_n, t_mode, t_format);
        if (fs->parsed()) {
            if ((f_alpha < 0) == (f_beta < 0)) {
                std::cerr << "fseries: exactly one of --alpha/--beta required\n";
                return 2;
            }
            return cmd_fseries(f_alpha, f_beta, f_terms, f_format);
        }
        if (verify->parsed()) return cmd_verify(v_suite, v_deep);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const TooLarge& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionOverflow& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgs& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const OddPrimeRequired& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
