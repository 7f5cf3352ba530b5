// torsionlab command line: validate complexes, evaluate torsion invariants and
// truncated zeta functions, generate fixtures, and run the verification suite.
//
// Exit codes: 0 success, 1 check failure, 2 input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "torsionlab/torsionlab.hpp"

namespace tl = torsionlab;

namespace {

tl::Complex parse_complex_pair(const std::string& text, const std::string& what) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) return tl::Complex(std::stod(text), 0.0);
        return tl::Complex(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
    } catch (const std::exception&) {
        throw tl::SchemaError(what + ": expected RE or RE,IM, got '" + text + "'");
    }
}

tl::Truncation parse_truncation(const std::string& text) {
    tl::Truncation t;
    if (text.empty()) return t;
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    try {
        if (parts.size() > 0 && !parts[0].empty()) t.n_max = std::stoi(parts[0]);
        if (parts.size() > 1 && !parts[1].empty()) t.k_max = std::stoi(parts[1]);
        if (parts.size() > 2 && !parts[2].empty()) t.l_max = std::stod(parts[2]);
        if (parts.size() > 3 && !parts[3].empty()) t.tail_tol = std::stod(parts[3]);
    } catch (const std::exception&) {
        throw tl::SchemaError("--trunc: expected n,k,lmax,tol");
    }
    if (t.n_max <= 0 || t.k_max <= 0 || t.l_max <= 0 || t.tail_tol <= 0)
        throw tl::SchemaError("--trunc: all entries must be positive");
    return t;
}

void print_complex_value(const std::string& label, tl::Complex z) {
    std::cout << label << " = " << tl::fmt17(z.real()) << " " << (z.imag() < 0 ? "-" : "+") << " "
              << tl::fmt17(std::abs(z.imag())) << "i\n";
}

int cmd_complex(const std::string& action, const std::string& file, std::optional<double> theta,
                double eta_tr, int rank, double lambda, double l_integral) {
    tl::GradedComplex c = tl::complex_from_json(tl::load_json(file));
    if (action == "validate") {
        tl::AssumptionReport rep = tl::validate_assumptions(c);
        std::cout << "well_formed = true\n";
        std::cout << "assumption1_acyclic = " << (rep.acyclic ? "true" : "false") << "\n";
        std::cout << "assumption2_b_invertible = " << (rep.b_invertible ? "true" : "false") << "\n";
        std::cout << "smallest_singular_value = " << tl::fmt17(rep.smallest_sv) << "\n";
        std::cout << "betti =";
        for (int b : rep.betti) std::cout << " " << b;
        std::cout << "\n";
        return rep.both() ? 0 : 1;
    }
    tl::OddSignature osig = tl::odd_signature(c);
    const double th = theta ? *theta : tl::default_agmon_for(osig).theta;
    if (action == "torsion") {
        tl::PMSplit split = tl::pm_split(osig);
        tl::Complex dg = tl::graded_det_bev(split, th);
        tl::EtaResult eta = tl::eta_bev(osig, th);
        tl::Complex xi = tl::xi_invariant(osig, th);
        tl::CappellMillerResult cm = tl::cappell_miller(c, lambda);
        std::cout << "theta = " << tl::fmt17(th) << "\n";
        print_complex_value("graded_det_B_ev", dg);
        std::cout << "eta = " << tl::fmt17(eta.eta) << "  (eta0 = " << tl::fmt17(eta.eta0)
                  << ", m_plus = " << eta.m_plus << ", m_minus = " << eta.m_minus << ")\n";
        print_complex_value("xi", xi);
        print_complex_value("refined_torsion_T", tl::refined_analytic_torsion(osig, th, eta_tr, rank));
        print_complex_value("refined_torsion_T_alt", tl::refined_analytic_torsion_alt(osig, th, l_integral, rank));
        print_complex_value("cappell_miller_tau", cm.total());
        return 0;
    }
    if (action == "identities") {
        tl::IdentityReport rep = tl::check_identities(c, theta);
        std::cout << "theta = " << tl::fmt17(rep.theta) << "\n";
        std::cout << "dim_ev_plus = " << rep.dim_ev_plus << ", dim_ev_minus = " << rep.dim_ev_minus << "\n";
        bool ok = true;
        for (const auto& ch : rep.checks) {
            std::cout << ch.name << ": modulus_rel_err = " << tl::fmt17(ch.modulus_rel_err);
            if (ch.has_phase)
                std::cout << ", nu_raw = " << ch.nu_raw << ", nu_predicted = " << ch.nu_predicted
                          << ", phase_residual = " << tl::fmt17(ch.phase_residual);
            std::cout << "\n";
            if (ch.modulus_rel_err > 1e-8 || !ch.phase_ok()) ok = false;
        }
        std::cout << (ok ? "identities OK" : "identities FAILED") << "\n";
        return ok ? 0 : 1;
    }
    throw tl::SchemaError("unknown complex action '" + action + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torsionlab: spectral invariants of finite chirality complexes and truncated twisted zeta functions"};
    app.require_subcommand(1);

    // complex validate|torsion|identities
    auto* cmd_cx = app.add_subcommand("complex", "operations on a graded complex JSON file");
    std::string cx_action, cx_file;
    double cx_eta_tr = 0.0, cx_lambda = 0.0, cx_l_integral = 0.0;
    int cx_rank = 1;
    double cx_theta_value = 0.0;
    bool cx_theta_set = false;
    cmd_cx->add_option("action", cx_action, "validate | torsion | identities")->required();
    cmd_cx->add_option("file", cx_file, "complex JSON file")->required();
    cmd_cx->add_option("--theta", cx_theta_value, "Agmon angle in (-pi, 0); default: widest spectral gap")
        ->each([&](const std::string&) { cx_theta_set = true; });
    cmd_cx->add_option("--eta-tr", cx_eta_tr, "trivial-bundle eta input for the refined torsion phase");
    cmd_cx->add_option("--rank", cx_rank, "rank of the coefficient system");
    cmd_cx->add_option("--lambda", cx_lambda, "spectral cut for the Cappell-Miller torsion");
    cmd_cx->add_option("--l-integral", cx_l_integral, "L-polynomial integral for the alternative torsion");

    // zeta eval / factorize
    auto* cmd_zeta = app.add_subcommand("zeta", "truncated Euler products over a length spectrum");
    std::string z_action, z_file, z_s, z_trunc, z_mode = "sym", z_grid, z_csv;
    bool z_selberg = false;
    int z_wedge = -1;
    cmd_zeta->add_option("action", z_action, "eval | factorize")->required();
    cmd_zeta->add_option("file", z_file, "length spectrum JSON file")->required();
    cmd_zeta->add_option("--s", z_s, "evaluation point RE or RE,IM")->required();
    cmd_zeta->add_option("--trunc", z_trunc, "truncation n,k,lmax,tol (default 60,60,1e6,1e-8)");
    cmd_zeta->add_option("--mode", z_mode, "sym | closed (Selberg only)");
    cmd_zeta->add_flag("--selberg", z_selberg, "evaluate log Z instead of log R");
    cmd_zeta->add_option("--wedge", z_wedge, "tensor with the p-th exterior power weight (Selberg only)");
    cmd_zeta->add_option("--grid", z_grid, "real grid RE0,RE1,COUNT for CSV output");
    cmd_zeta->add_option("--csv", z_csv, "write results as CSV to this file");

    // model ruelle-zero
    auto* cmd_model = app.add_subcommand("model", "determinant-formula model evaluators");
    std::string m_action, m_file;
    cmd_model->add_option("action", m_action, "ruelle-zero")->required();
    cmd_model->add_option("file", m_file, "model spectral data JSON file")->required();

    // fixtures gen
    auto* cmd_fix = app.add_subcommand("fixtures", "deterministic fixture generation");
    std::string f_action, f_kind = "random-acyclic-complex", f_out, f_dims;
    std::uint64_t f_seed = 1;
    int f_d = 3, f_classes = 3, f_chi_dim = 2, f_sigma_dim = 1;
    double f_epsilon = 0.0, f_toy_a = 2.0;
    cmd_fix->add_option("action", f_action, "gen")->required();
    cmd_fix->add_option("--kind", f_kind,
                        "random-acyclic-complex | hermitian-model-complex | toy-d1 | synthetic-spectrum");
    cmd_fix->add_option("--seed", f_seed, "fixture seed");
    cmd_fix->add_option("-o,--out", f_out, "output JSON file")->required();
    cmd_fix->add_option("--d", f_d, "length of the complex / dimension parameter");
    cmd_fix->add_option("--dims", f_dims, "comma-separated palindromic dimensions");
    cmd_fix->add_option("--classes", f_classes, "number of primitive classes");
    cmd_fix->add_option("--chi-dim", f_chi_dim, "dimension of chi");
    cmd_fix->add_option("--sigma-dim", f_sigma_dim, "number of sigma eigenvalues");
    cmd_fix->add_option("--epsilon", f_epsilon, "non-unitary deformation strength");
    cmd_fix->add_option("--toy-a", f_toy_a, "differential entry of the toy complex");

    // suite run
    auto* cmd_suite = app.add_subcommand("suite", "verification harness");
    std::string s_action;
    std::vector<std::string> s_names;
    std::vector<std::uint64_t> s_seeds;
    std::string s_csv;
    cmd_suite->add_option("action", s_action, "run")->required();
    cmd_suite->add_option("--names", s_names, "subset of checks to run");
    cmd_suite->add_option("--seeds", s_seeds, "seeds (default: 1 or TORSIONLAB_SEED)");
    cmd_suite->add_option("--csv", s_csv, "write the report as CSV to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_cx->parsed()) {
            return cmd_complex(cx_action, cx_file,
                               cx_theta_set ? std::optional<double>(cx_theta_value) : std::nullopt, cx_eta_tr,
                               cx_rank, cx_lambda, cx_l_integral);
        }
        if (cmd_zeta->parsed()) {
            tl::LengthSpectrum spec = tl::spectrum_from_json(tl::load_json(z_file));
            tl::Truncation trunc = parse_truncation(z_trunc);
            tl::Complex s = parse_complex_pair(z_s, "--s");
            if (z_action == "factorize") {
                tl::FactorizationResult fr = tl::factorization_residual(s, spec, trunc);
                print_complex_value("log_R", fr.log_ruelle_value);
                print_complex_value("selberg_alternating_sum", fr.selberg_sum);
                std::cout << "residual = " << tl::fmt17(fr.residual) << "\n";
                std::cout << "combined_tail_bound = " << tl::fmt17(fr.combined_tail) << "\n";
                return 0;
            }
            if (z_action != "eval") throw tl::SchemaError("unknown zeta action '" + z_action + "'");
            tl::SelbergMode mode =
                z_mode == "closed" ? tl::SelbergMode::ClosedForm : tl::SelbergMode::SymPower;
            if (z_mode != "sym" && z_mode != "closed") throw tl::SchemaError("--mode: expected sym or closed");
            auto eval_at = [&](tl::Complex at) {
                if (z_selberg) return tl::log_selberg(at, tl::SigmaWeight{z_wedge, true}, spec, trunc, mode);
                return tl::log_ruelle(at, spec, trunc);
            };
            std::vector<tl::ZetaCsvRow> rows;
            if (!z_grid.empty()) {
                auto c1 = z_grid.find(',');
                auto c2 = z_grid.find(',', c1 == std::string::npos ? std::string::npos : c1 + 1);
                if (c1 == std::string::npos || c2 == std::string::npos)
                    throw tl::SchemaError("--grid: expected RE0,RE1,COUNT");
                double re0 = std::stod(z_grid.substr(0, c1));
                double re1 = std::stod(z_grid.substr(c1 + 1, c2 - c1 - 1));
                int count = std::stoi(z_grid.substr(c2 + 1));
                if (count < 2) throw tl::SchemaError("--grid: COUNT must be at least 2");
                for (int i = 0; i < count; ++i) {
                    tl::Complex at(re0 + (re1 - re0) * i / (count - 1), s.imag());
                    tl::ZetaValue v = eval_at(at);
                    rows.push_back({at, v.log_value, v.tail_bound});
                }
            } else {
                tl::ZetaValue v = eval_at(s);
                rows.push_back({s, v.log_value, v.tail_bound});
            }
            for (const auto& r : rows) {
                print_complex_value(z_selberg ? "log_Z" : "log_R", r.log_r);
                std::cout << "tail_bound = " << tl::fmt17(r.tail_bound) << "\n";
            }
            if (!z_csv.empty()) tl::write_text(z_csv, tl::zeta_csv(rows));
            return 0;
        }
        if (cmd_model->parsed()) {
            if (m_action != "ruelle-zero") throw tl::SchemaError("unknown model action '" + m_action + "'");
            tl::ModelSpectralData model = tl::model_from_json(tl::load_json(m_file));
            tl::RuelleZeroResult rz = tl::ruelle_at_zero_model(model);
            print_complex_value("R0_descending_form", rz.descending);
            print_complex_value("R0_ascending_form", rz.ascending);
            std::cout << "forms_rel_err = " << tl::fmt17(tl::relative_diff(rz.descending, rz.ascending)) << "\n";
            return 0;
        }
        if (cmd_fix->parsed()) {
            if (f_action != "gen") throw tl::SchemaError("unknown fixtures action '" + f_action + "'");
            tl::FixtureSpec fs;
            fs.kind = tl::fixture_kind_from_string(f_kind);
            fs.seed = f_seed;
            fs.d = f_d;
            fs.class_count = f_classes;
            fs.chi_dim = f_chi_dim;
            fs.sigma_dim = f_sigma_dim;
            fs.epsilon = f_epsilon;
            fs.toy_a = f_toy_a;
            if (!f_dims.empty()) {
                std::string cur;
                for (char ch : f_dims + ",") {
                    if (ch == ',') {
                        if (!cur.empty()) fs.dims.push_back(std::stoi(cur));
                        cur.clear();
                    } else {
                        cur.push_back(ch);
                    }
                }
            }
            if (fs.kind == tl::FixtureKind::SyntheticSpectrum) {
                tl::save_json(f_out, tl::to_json(tl::gen_spectrum(fs)));
            } else {
                tl::save_json(f_out, tl::to_json(tl::gen_complex(fs)));
            }
            std::cout << "wrote " << f_out << "\n";
            return 0;
        }
        if (cmd_suite->parsed()) {
            if (s_action != "run") throw tl::SchemaError("unknown suite action '" + s_action + "'");
            if (s_seeds.empty()) {
                if (const char* env = std::getenv("TORSIONLAB_SEED"))
                    s_seeds.push_back(static_cast<std::uint64_t>(std::stoull(env)));
            }
            tl::SuiteReport report = tl::run_suite(s_names, s_seeds);
            std::cout << tl::format_suite(report);
            if (!s_csv.empty()) tl::write_text(s_csv, tl::suite_csv(report));
            return report.all_pass() ? 0 : 1;
        }
    } catch (const tl::SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const tl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
