// Command-line front end: analyze / factorize / matrix / mellin-sweep /
// verify for piecewise continuous symbols of Toeplitz+Hankel operators.
//
// Exit codes: 0 success, 1 invalid input or failed precondition (including
// non-Fredholm where Fredholmness is required and failed verify suites),
// 2 internal numeric failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "th/spec_io.hpp"
#include "th/verify.hpp"

namespace {

using th::cplx;
using nlohmann::json;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw th::SpecParseError("cannot open output file: " + out_path);
    os << text;
}

int run_analyze(const std::string& spec_path, const std::string& out_path) {
    th::SymbolSpec spec = th::spec_from_file(spec_path);
    th::PCSymbol sym = th::to_symbol(spec);
    th::FredholmReport rep = th::analyze(sym);
    emit(th::analyze_report_json(spec, rep), out_path);
    return 0;
}

int run_factorize(const std::string& spec_path, int grid, const std::string& out_path) {
    th::SymbolSpec spec = th::spec_from_file(spec_path);
    th::PCSymbol sym = th::to_symbol(spec);
    th::AsymmetricFactorization fact = th::factor_pc(sym);
    th::ValidationReport val = th::validate_factorization(fact, sym, grid);
    emit(th::factorize_report_json(spec, fact, val), out_path);
    return 0;
}

int run_matrix(const std::string& spec_path, const std::string& op, int size,
               const std::string& out_path) {
    th::SymbolSpec spec = th::spec_from_file(spec_path);
    th::PCSymbol sym = th::to_symbol(spec);
    if (size < 1) throw th::SpecParseError("--size must be >= 1");
    th::OperatorSection sec;
    if (op == "T") sec = th::build_toeplitz_section(sym, size);
    else if (op == "H") sec = th::build_hankel_section(sym, size);
    else if (op == "M") sec = th::build_m_section(sym, size);
    else if (op == "Phi") sec = th::build_phi_section(sym, size);
    else if (op == "Psi") sec = th::build_psi_section(sym, size);
    else throw th::SpecParseError("--operator must be one of T|H|M|Phi|Psi");
    std::ostringstream ss;
    th::write_matrix_file(ss, sec);
    emit(ss.str(), out_path);
    return 0;
}

int run_mellin_sweep(const std::string& spec_path, const std::string& tau, double z_max,
                     int steps, const std::string& out_path) {
    th::SymbolSpec spec = th::spec_from_file(spec_path);
    th::PCSymbol sym = th::to_symbol(spec);
    th::TauTag tag = th::TauOne{};
    if (tau == "+1" || tau == "1") tag = th::TauOne{};
    else if (tau == "-1") tag = th::TauMinusOne{};
    else if (tau.rfind("pair:", 0) == 0) {
        double theta = 0.0;
        try {
            theta = std::stod(tau.substr(5));
        } catch (const std::exception&) {
            throw th::SpecParseError("--tau pair:<theta> needs a numeric angle in (0, pi)");
        }
        tag = th::TauPair{theta};
    } else {
        throw th::SpecParseError("--tau must be +1, -1, or pair:<theta>");
    }
    th::LocalSymbol ls = th::local_symbol(sym, tag);
    th::SweepReport rep = th::sweep_nonvanishing(ls, z_max, steps);
    std::ostringstream ss;
    th::write_sweep_csv(ss, rep);
    emit(ss.str(), out_path);
    return 0;
}

int run_verify(const std::string& target, int trials, unsigned seed, std::vector<int> sizes,
               const std::string& out_path) {
    json checks = json::array();
    bool all_pass = true;
    auto add_check = [&](const std::string& name, bool pass, json details) {
        details["name"] = name;
        details["pass"] = pass;
        checks.push_back(details);
        all_pass = all_pass && pass;
    };

    if (target == "identities") {
        for (int d = 1; d <= 3; ++d) {
            th::IdentitySuiteReport rep = th::identity_suite(d, trials, seed + d);
            add_check("identities d=" + std::to_string(d), rep.pass,
                      {{"max_defect_tx", rep.max_defect_tx},
                       {"max_defect_hx", rep.max_defect_hx},
                       {"max_defect_mx", rep.max_defect_mx},
                       {"max_defect_even", rep.max_defect_even},
                       {"max_defect_anti", rep.max_defect_anti},
                       {"trials", rep.trials}});
        }
    } else {
        th::SymbolSpec spec = th::spec_from_file(target);
        th::PCSymbol sym = th::to_symbol(spec);
        th::FredholmReport rep = th::analyze(sym);
        add_check("analyze", true,
                  {{"is_fredholm", rep.is_fredholm},
                   {"is_invertible", rep.is_invertible},
                   {"kappa", rep.kappa}});

        if (sym.p == 2.0) {
            if (sizes.empty()) sizes = {64, 128, 256};
            th::ProbeResult probe = th::finite_section_probe(sym, sizes, "spec");
            add_check("finite-section probe", probe.verdict_consistent,
                      {{"sigma_min", probe.sigma_min}, {"near_null", probe.near_null_count}});
            th::EquivalenceReport eq = th::equivalence_probe(sym, 64);
            add_check("equivalence probe", eq.consistent,
                      {{"sigma_m", {eq.sigma_m_n, eq.sigma_m_2n}},
                       {"sigma_phi", {eq.sigma_phi_n, eq.sigma_phi_2n}},
                       {"sigma_psi", {eq.sigma_psi_n, eq.sigma_psi_2n}}});
        } else {
            add_check("finite-section probe", true, {{"skipped", "p != 2; analytic checks only"}});
        }

        if (rep.is_fredholm) {
            th::AsymmetricFactorization fact = th::factor_pc(sym);
            th::ValidationReport val = th::validate_factorization(fact, sym, 1024);
            bool ok = val.max_residual < 1e-8 && val.evenness_defect < 1e-8 &&
                      val.support_defect_minus < 1e-8 && val.support_defect_minus_inv < 1e-8;
            add_check("factorization defects", ok,
                      {{"max_residual", val.max_residual},
                       {"evenness_defect", val.evenness_defect},
                       {"support_defect_minus", val.support_defect_minus},
                       {"support_defect_minus_inv", val.support_defect_minus_inv}});
        }
        if (rep.is_invertible) {
            th::FormalInverseSuiteReport fi = th::formal_inverse_suite(sym, trials, seed);
            add_check("formal inverse", fi.pass,
                      {{"max_identity_defect", fi.max_identity_defect},
                       {"max_jsym_defect", fi.max_jsym_defect},
                       {"ker_probe_sigma", fi.ker_probe_sigma},
                       {"bnorm_by_trunc", fi.bnorm_by_trunc}});
        }
    }

    json j;
    j["schema_version"] = th::kReportSchemaVersion;
    j["command"] = "verify";
    j["target"] = target;
    j["checks"] = checks;
    j["all_pass"] = all_pass;
    emit(j.dump(2) + "\n", out_path);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toeplitz+Hankel operator analysis for piecewise continuous symbols"};
    app.require_subcommand(1);

    std::string spec_path, out_path, op = "M", tau = "+1", verify_target;
    int grid = 1024, size = 8, steps = 2048, trials = 20;
    unsigned seed = 1u;
    double z_max = 12.0;
    std::vector<int> sizes;

    auto* analyze_cmd = app.add_subcommand("analyze", "Fredholm/invertibility report");
    analyze_cmd->add_option("spec", spec_path, "symbol spec file")->required();
    analyze_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* fact_cmd = app.add_subcommand("factorize", "asymmetric factorization + defect table");
    fact_cmd->add_option("spec", spec_path, "symbol spec file")->required();
    fact_cmd->add_option("--grid", grid, "validation grid size (>= 256)");
    fact_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* mat_cmd = app.add_subcommand("matrix", "write a finite section");
    mat_cmd->add_option("spec", spec_path, "symbol spec file")->required();
    mat_cmd->add_option("--operator", op, "T|H|M|Phi|Psi")->required();
    mat_cmd->add_option("--size", size, "section size N")->required();
    mat_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* sweep_cmd = app.add_subcommand("mellin-sweep", "local symbol modulus sweep CSV");
    sweep_cmd->add_option("spec", spec_path, "symbol spec file")->required();
    sweep_cmd->add_option("--tau", tau, "+1, -1, or pair:<theta>")->required();
    sweep_cmd->add_option("--z-max", z_max, "sweep half-width (default 12)");
    sweep_cmd->add_option("--steps", steps, "sample count (>= 64)");
    sweep_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "verification suites");
    verify_cmd->add_option("target", verify_target, "spec file or suite name (identities)")
        ->required();
    verify_cmd->add_option("--trials", trials, "trial count");
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--sizes", sizes, "probe section sizes");
    verify_cmd->add_option("--out", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) return run_analyze(spec_path, out_path);
        if (fact_cmd->parsed()) return run_factorize(spec_path, grid, out_path);
        if (mat_cmd->parsed()) return run_matrix(spec_path, op, size, out_path);
        if (sweep_cmd->parsed()) return run_mellin_sweep(spec_path, tau, z_max, steps, out_path);
        if (verify_cmd->parsed()) return run_verify(verify_target, trials, seed, sizes, out_path);
    } catch (const th::SpecParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const th::NotFredholmError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const th::OnJumpError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const th::TruncationError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 2;
    } catch (const th::NumericFailureError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
