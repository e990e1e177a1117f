#include "alia/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "alia/elliptic.hpp"
#include "alia/intertwiner.hpp"
#include "alia/report.hpp"
#include "alia/suites.hpp"

namespace alia {

namespace {

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    f << text;
}

std::array<cplx, 3> parse_r_triple(const std::string& text) {
    std::array<cplx, 3> r;
    std::stringstream ss(text);
    std::string part;
    int n = 0;
    while (std::getline(ss, part, ',')) {
        if (n >= 3) throw std::invalid_argument("expected three comma-separated values");
        r[static_cast<std::size_t>(n++)] = parse_complex(part);
    }
    if (n != 3) throw std::invalid_argument("expected three comma-separated values");
    return r;
}

double env_default_tol() {
    if (const char* s = std::getenv("ALIA_TOL")) return std::stod(s);
    return 1e-9;
}

cplx eval_function(const std::string& fn, cplx z, const ModularParam& tau, cplx p, int order,
                   double a, double b, cplx scale) {
    if (fn == "theta1") return theta_jacobi(1, z, tau);
    if (fn == "theta2") return theta_jacobi(2, z, tau);
    if (fn == "theta3") return theta_jacobi(3, z, tau);
    if (fn == "theta4") return theta_jacobi(4, z, tau);
    if (fn == "theta") return theta_general(a, b, z, tau);
    if (fn == "theta1-deriv") return theta_deriv(1, z, tau, order);
    if (fn == "theta2-deriv") return theta_deriv(2, z, tau, order);
    if (fn == "theta3-deriv") return theta_deriv(3, z, tau, order);
    if (fn == "theta4-deriv") return theta_deriv(4, z, tau, order);
    if (fn == "mu1") return mu(1, z, tau);
    if (fn == "mu2") return mu(2, z, tau);
    if (fn == "mu3") return mu(3, z, tau);
    if (fn == "w1") return jacobi_w(1, z, tau);
    if (fn == "w2") return jacobi_w(2, z, tau);
    if (fn == "w3") return jacobi_w(3, z, tau);
    if (fn == "sn") return jacobi_sn(z, tau);
    if (fn == "cn") return jacobi_cn(z, tau);
    if (fn == "dn") return jacobi_dn(z, tau);
    if (fn == "wp") return wp(z, Lattice(tau, scale));
    if (fn == "wp-prime") return wp_prime(z, Lattice(tau, scale));
    if (fn == "modular-lambda") return modular_lambda(tau);
    if (fn == "psi-plus") return psi_pm(1, z, tau);
    if (fn == "psi-minus") return psi_pm(-1, z, tau);
    if (fn == "det-omega") return omega(z, tau).determinant();
    if (fn == "xi-p") return xi_p(z, p, tau);
    throw std::invalid_argument("unknown function '" + fn + "'");
}

int print_report(const VerificationReport& rep, const std::string& out_path) {
    write_out(out_path, rep.to_json());
    if (!out_path.empty()) {
        for (const auto& c : rep.cases)
            if (!c.pass)
                std::cerr << "FAIL " << c.name << " residual " << format_double(c.max_abs_residual)
                          << " tol " << format_double(c.tol) << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"elliptic automorphic Lie algebra workbench"};
    app.require_subcommand(1);

    std::string fn, tau_s = "i", z_s = "0.25+0.1i", p_s = "0.3+0.2i", out_path, format;
    std::string suite, r_s = "2,1,0", in_path, nu_plus_s = "0", nu_minus_s = "0.3+0.2i";
    std::string scale_s = "1";
    int samples = 100, order = 1;
    std::uint64_t seed = 7;
    double tol = env_default_tol();
    double char_a = 0.0, char_b = 0.0;

    auto* eval = app.add_subcommand("eval", "evaluate one function at a point");
    eval->add_option("--fn", fn, "function name")->required();
    eval->add_option("--z", z_s, "evaluation point");
    eval->add_option("--tau", tau_s, "modular parameter");
    eval->add_option("--p", p_s, "shift parameter (xi-p)");
    eval->add_option("--order", order, "derivative order");
    eval->add_option("--a", char_a, "theta characteristic a");
    eval->add_option("--b", char_b, "theta characteristic b");
    eval->add_option("--scale", scale_s, "lattice scale (wp, wp-prime)");
    eval->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite id")->required();
    verify->add_option("--tau", tau_s, "modular parameter");
    verify->add_option("--samples", samples, "sample count per case");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--tol", tol, "default tolerance for unpinned cases");
    verify->add_option("--r", r_s, "curve triple r1,r2,r3");
    verify->add_option("--nu-plus", nu_plus_s, "first puncture (uglov)");
    verify->add_option("--nu-minus", nu_minus_s, "second puncture (uglov)");
    verify->add_option("--format", format, "output format (json)");
    verify->add_option("--out", out_path, "output file (default stdout)");

    auto* tausolve = app.add_subcommand("tau-solve", "invert the modular lambda for an r triple");
    tausolve->add_option("--r", r_s, "curve triple r1,r2,r3")->required();
    tausolve->add_option("--out", out_path, "output file (default stdout)");

    auto* table = app.add_subcommand("table", "sample a function into a CSV table");
    table->add_option("--fn", fn, "function name")->required();
    table->add_option("--tau", tau_s, "modular parameter");
    table->add_option("--samples", samples, "number of rows");
    table->add_option("--seed", seed, "RNG seed");
    table->add_option("--p", p_s, "shift parameter (xi-p)");
    table->add_option("--order", order, "derivative order");
    table->add_option("--a", char_a, "theta characteristic a");
    table->add_option("--b", char_b, "theta characteristic b");
    table->add_option("--scale", scale_s, "lattice scale (wp, wp-prime)");
    table->add_option("--format", format, "output format (csv)");
    table->add_option("--out", out_path, "output file (default stdout)");

    auto* report = app.add_subcommand("report", "re-validate and round-trip a JSON report");
    report->add_option("--in", in_path, "report file")->required();
    report->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) {
            ModularParam tau(parse_complex(tau_s));
            cplx value = eval_function(fn, parse_complex(z_s), tau, parse_complex(p_s), order,
                                       char_a, char_b, parse_complex(scale_s));
            write_out(out_path, format_complex(value) + "\n");
            return 0;
        }
        if (verify->parsed()) {
            if (!format.empty() && format != "json") {
                std::cerr << "verify emits the JSON report schema; unknown format '" << format
                          << "'\n";
                return 2;
            }
            SuiteOptions opts;
            opts.tau = parse_complex(tau_s);
            opts.r = parse_r_triple(r_s);
            opts.samples = samples;
            opts.seed = seed;
            opts.default_tol = tol;
            opts.nu_plus = parse_complex(nu_plus_s);
            opts.nu_minus = parse_complex(nu_minus_s);
            return print_report(run_suite(suite, opts), out_path);
        }
        if (tausolve->parsed()) {
            auto r = parse_r_triple(r_s);
            ModularParam t = tau_from_r(r[0], r[1], r[2]);
            write_out(out_path, format_complex(t.tau()) + "\n");
            return 0;
        }
        if (table->parsed()) {
            if (!format.empty() && format != "csv") {
                std::cerr << "table emits the CSV schema; unknown format '" << format << "'\n";
                return 2;
            }
            ModularParam tau(parse_complex(tau_s));
            Rng rng(seed);
            Lattice half(tau, 0.5);
            std::ostringstream os;
            os << csv_header() << "\n";
            for (int s = 0; s < samples; ++s) {
                cplx z;
                do {
                    z = rng.real01() + rng.real01() * tau.tau();
                } while (half.dist_to_lattice(z) < 5e-2);
                cplx value = eval_function(fn, z, tau, parse_complex(p_s), order, char_a, char_b,
                                           parse_complex(scale_s));
                os << csv_row(z, value) << "\n";
            }
            write_out(out_path, os.str());
            return 0;
        }
        if (report->parsed()) {
            std::ifstream f(in_path);
            if (!f) {
                std::cerr << "cannot open report '" << in_path << "'\n";
                return 2;
            }
            std::stringstream buf;
            buf << f.rdbuf();
            VerificationReport rep = VerificationReport::from_json(buf.str());
            for (auto& c : rep.cases) c.pass = c.max_abs_residual < c.tol;
            write_out(out_path, rep.to_json());
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << " (tau=" << tau_s << ", r=" << r_s << ")\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace alia
