#pragma once
// The verification harness: every acceptance check as a named, seeded,
// self-timed suite entry. The CLI `suite run` and the acceptance test binary
// both drive run_suite(); a check passes only if its worst residual meets the
// pinned tolerance and it finishes inside its runtime budget.

#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "torsionlab/fixtures.hpp"
#include "torsionlab/io.hpp"
#include "torsionlab/torsion.hpp"
#include "torsionlab/zeta.hpp"

namespace torsionlab {

struct CheckResult {
    std::string name;
    std::uint64_t seed = 0;
    bool pass = false;
    double max_residual = 0.0;
    double tolerance = 0.0;
    double runtime_sec = 0.0;
    std::string note;
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace checks {

inline FixtureSpec mixed_fixture(int index, std::uint64_t seed, double epsilon) {
    FixtureSpec fs;
    fs.kind = (index % 2 == 0) ? FixtureKind::HermitianModelComplex : FixtureKind::RandomAcyclicComplex;
    fs.d = (index % 4 < 2) ? 3 : 5;
    fs.seed = seed * 1000 + static_cast<std::uint64_t>(index);
    fs.epsilon = (fs.kind == FixtureKind::HermitianModelComplex) ? epsilon : 0.0;
    return fs;
}

// 1. Regularized determinant equals the plain determinant, any admissible angle.
inline CheckResult det_theta_vs_plain(std::uint64_t seed) {
    CheckResult res{"det-theta-vs-plain", seed, false, 0.0, 1e-9, 0.0, "200 matrices, dims 2-20, 3 angles"};
    Rng rng(seed);
    for (int t = 0; t < 200; ++t) {
        const int dim = 2 + t % 19;
        CMatrix m = rng.gaussian(dim, dim);
        Complex plain = m.determinant();
        if (std::abs(plain) < 1e-8) continue;  // skip the measure-zero near-singular draw
        Spectrum spec = spectral_decompose(m);
        for (const auto& angle : admissible_cut_lines(spec, 3)) {
            double r = std::abs(det_theta(spec, angle.theta) - plain) / std::abs(plain);
            res.max_residual = std::max(res.max_residual, r);
        }
    }
    res.pass = res.max_residual <= res.tolerance;
    return res;
}

// 2. Eta counts on constructed spectra; symmetric spectra give eta = 0 exactly.
inline CheckResult eta_counts(std::uint64_t seed) {
    CheckResult res{"eta-counts", seed, false, 0.0, 0.0, 0.0, "exhaustive sign patterns, exact"};
    Rng rng(seed);
    auto expect = [&res](const Spectrum& spec, double eta0, int mp, int mm, double eta) {
        EtaResult r = eta_invariant(spec, choose_cut_line(spec).theta);
        double err = std::abs(r.eta0 - eta0) + std::abs(r.m_plus - mp) + std::abs(r.m_minus - mm) +
                     std::abs(r.eta - eta);
        res.max_residual = std::max(res.max_residual, err);
    };
    expect(Spectrum{{{Complex(1, 0), 1}, {Complex(-1, 0), 1}}, 2, {}}, 0, 0, 0, 0.0);
    expect(Spectrum{{{Complex(1, 0), 1}, {Complex(2, 0), 1}}, 2, {}}, 2, 0, 0, 1.0);
    expect(Spectrum{{{Complex(0, 2), 1}, {Complex(0, -3), 1}, {Complex(5, 0), 1}}, 3, {}}, 1, 1, 1, 0.5);
    for (int k = 0; k <= 3; ++k)
        for (int m = 0; m <= 3; ++m)
            for (int p = 0; p <= 3; ++p)
                for (int q = 0; q <= 3; ++q) {
                    Spectrum spec;
                    if (k) spec.entries.push_back({Complex(1.3, 0.4), k});
                    if (m) spec.entries.push_back({Complex(-0.7, 0.1), m});
                    if (p) spec.entries.push_back({Complex(0.0, 2.2), p});
                    if (q) spec.entries.push_back({Complex(0.0, -0.9), q});
                    spec.dim = k + m + p + q;
                    if (spec.dim == 0) continue;
                    expect(spec, k - m, p, q, (k - m + p - q) / 2.0);
                }
    for (int t = 0; t < 20; ++t) {
        Spectrum spec;
        int half = 1 + static_cast<int>(rng.raw() % 5);
        for (int i = 0; i < half; ++i) {
            Complex z(rng.uniform(-2, 2), rng.uniform(-2, 2));
            if (std::abs(z) < 0.1 || std::abs(z.real()) < 1e-3) z += Complex(0.5, 0);
            int mult = 1 + static_cast<int>(rng.raw() % 3);
            spec.entries.push_back({z, mult});
            spec.entries.push_back({-z, mult});
            spec.dim += 2 * mult;
        }
        EtaResult r = eta_invariant(spec, choose_cut_line(spec).theta);
        res.max_residual = std::max(res.max_residual, std::abs(r.eta));
    }
    res.pass = res.max_residual == 0.0;
    return res;
}

// 3. Fusion sign law against a transposition-counting oracle, and phi
//    independence of the splitting choice.
inline CheckResult fusion_phi_independence(std::uint64_t seed) {
    CheckResult res{"fusion-phi-independence", seed, false, 0.0, 1e-9, 0.0,
                    "sign law + 100 complexes x 2 splittings"};
    Rng rng(seed);
    for (int dv = 0; dv <= 4; ++dv)
        for (int dw = 0; dw <= 4; ++dw) {
            DetLineElement a{Complex(rng.uniform(0.5, 2), rng.uniform(-1, 1)), {{"V", dv, false}}};
            DetLineElement b{Complex(rng.uniform(0.5, 2), rng.uniform(-1, 1)), {{"W", dw, false}}};
            DetLineElement vw = fuse(a, b);
            DetLineElement wv = reorder(fuse(b, a), {"V", "W"});
            // Transposition oracle: moving dw unit blocks past dv unit blocks.
            long inversions = 0;
            std::vector<int> word;
            for (int i = 0; i < dw; ++i) word.push_back(1);
            for (int i = 0; i < dv; ++i) word.push_back(0);
            for (size_t i = 0; i < word.size(); ++i)
                for (size_t j = i + 1; j < word.size(); ++j)
                    if (word[i] > word[j]) ++inversions;
            double sign = (inversions % 2 == 0) ? 1.0 : -1.0;
            res.max_residual = std::max(res.max_residual, std::abs(wv.coeff - sign * vw.coeff));
            // dual law and associativity
            res.max_residual =
                std::max(res.max_residual, std::abs(fuse(dual(a), dual(b)).coeff - dual(vw).coeff));
            DetLineElement c{Complex(rng.uniform(0.5, 2), rng.uniform(-1, 1)), {{"U", 2, false}}};
            res.max_residual =
                std::max(res.max_residual, std::abs(fuse(fuse(a, b), c).coeff - fuse(a, fuse(b, c)).coeff));
        }
    for (int t = 0; t < 100; ++t) {
        FixtureSpec fs;
        fs.kind = FixtureKind::RandomAcyclicComplex;
        fs.d = (t % 2 == 0) ? 3 : 5;
        fs.seed = seed * 7919 + static_cast<std::uint64_t>(t);
        GradedComplex c = gen_complex(fs);
        Complex r0 = phi_ratio(c, default_split(c));
        Complex r1 = phi_ratio(c, random_split_choice(c, rng));
        Complex r2 = phi_ratio(c, random_split_choice(c, rng));
        res.max_residual = std::max(res.max_residual, relative_diff(r1, r0));
        res.max_residual = std::max(res.max_residual, relative_diff(r2, r0));
    }
    res.pass = res.max_residual <= res.tolerance;
    return res;
}

// 4. rho_Gamma = det_gr(B^ev_{(lambda,inf)}) rho_{Gamma[0,lambda]}.
inline CheckResult lambda_split_law(std::uint64_t seed) {
    CheckResult res{"lambda-split", seed, false, 0.0, 1e-8, 0.0, "50 fixtures x 3 lambda values"};
    for (int t = 0; t < 50; ++t) {
        GradedComplex c = gen_complex(mixed_fixture(t, seed, 0.05));
        OddSignature osig = odd_signature(c);
        Complex rho_full = refined_torsion(c).coeff;
        for (double lambda : candidate_split_lambdas(osig, 3)) {
            SpectralSplit sp = spectral_split(osig, lambda);
            Complex rho_low(1.0, 0.0);
            if (!sp.low_empty()) rho_low = refined_torsion(sp.low).coeff;
            Complex dg(1.0, 0.0);
            if (sp.high.total_dim() > 0) {
                OddSignature oh = odd_signature(sp.high);
                dg = graded_det_bev(oh, default_agmon_for(oh).theta);
            }
            res.max_residual = std::max(res.max_residual, relative_diff(rho_full, dg * rho_low));
        }
    }
    res.pass = res.max_residual <= res.tolerance;
    return res;
}

// 5. Modulus identities |det_gr| = e^{Re xi}, |tau| = |det_gr|^2 = e^{2 Re xi},
//    with the phase defect pinned at i^{dim+ - dim-} (normalized integer 0).
inline CheckResult modulus_identities(std::uint64_t seed) {
    CheckResult res{"modulus-identities", seed, false, 0.0, 1e-8, 0.0,
                    "100 hermitian fixtures d in {3,5}; pinned phase stable"};
    bool phases_ok = true;
    for (int t = 0; t < 100; ++t) {
        FixtureSpec fs;
        fs.kind = FixtureKind::HermitianModelComplex;
        fs.d = (t % 2 == 0) ? 3 : 5;
        fs.seed = seed * 3643 + static_cast<std::uint64_t>(t);
        GradedComplex c = gen_complex(fs);
        IdentityReport rep = check_identities(c);
        res.max_residual = std::max(res.max_residual, rep.max_modulus_err());
        if (!rep.phases_strict_ok()) phases_ok = false;
    }
    res.pass = phases_ok && res.max_residual <= res.tolerance;
    if (!phases_ok) res.note += " [phase convention NOT stable]";
    return res;
}

// 6. Cappell-Miller torsion is independent of the admissible lambda.
inline CheckResult cm_lambda_independence(std::uint64_t seed) {
    CheckResult res{"cappell-miller-lambda-independence", seed, false, 0.0, 1e-8, 0.0,
                    "50 fixtures x 2 admissible lambdas"};
    for (int t = 0; t < 50; ++t) {
        GradedComplex c = gen_complex(mixed_fixture(t, seed * 31 + 7, 0.05));
        OddSignature osig = odd_signature(c);
        auto lambdas = candidate_split_lambdas(osig, 2);
        if (lambdas.size() < 2) continue;
        Complex t0 = cappell_miller(c, lambdas[0]).total();
        Complex t1 = cappell_miller(c, lambdas[1]).total();
        res.max_residual = std::max(res.max_residual, relative_diff(t0, t1));
    }
    res.pass = res.max_residual <= res.tolerance;
    return res;
}

// 7. Agmon-angle independence: det_gr and eta invariant, xi moves by i pi Z.
inline CheckResult agmon_independence(std::uint64_t seed) {
    CheckResult res{"agmon-independence", seed, false, 0.0, 1e-9, 0.0, "50 fixtures, two admissible angles"};
    for (int t = 0; t < 50; ++t) {
        GradedComplex c = gen_complex(mixed_fixture(t, seed * 53 + 11, 0.05));
        OddSignature osig = odd_signature(c);
        Spectrum bev = spectral_decompose(osig.b_even);
        auto angles = admissible_cut_lines(bev, 2);
        if (angles.size() < 2) continue;
        const double th0 = angles[0].theta, th1 = angles[1].theta;
        res.max_residual =
            std::max(res.max_residual, relative_diff(graded_det_bev(osig, th0), graded_det_bev(osig, th1)));
        EtaResult e0 = eta_bev(osig, th0), e1 = eta_bev(osig, th1);
        res.max_residual = std::max(res.max_residual, std::abs(e0.eta - e1.eta));
        Complex dxi = xi_invariant(osig, th0) - xi_invariant(osig, th1);
        double nu = std::round(dxi.imag() / kPi);
        res.max_residual = std::max(res.max_residual, std::abs(dxi - Complex(0.0, kPi * nu)));
    }
    res.pass = res.max_residual <= res.tolerance;
    return res;
}

// 8. Selberg mode equivalence: term-by-term symmetric powers vs closed form.
inline CheckResult zeta_mode_equivalence(std::uint64_t seed) {
    CheckResult res{"zeta-mode-equivalence", seed, false, 0.0, 1e-8, 0.0, "20 spectra, s = abscissa + 3"};
    Truncation trunc;
    for (int t = 0; t < 20; ++t) {
        FixtureSpec fs;
        fs.kind = FixtureKind::SyntheticSpectrum;
        fs.d = (t % 2 == 0) ? 3 : 5;
        fs.class_count = 3 + t % 3;
        fs.epsilon = 0.1;
        fs.seed = seed * 101 + static_cast<std::uint64_t>(t);
        LengthSpectrum spec = gen_spectrum(fs);
        Complex s(spec.growth_abscissa + 3.0, 0.0);
        ZetaValue sym = log_selberg(s, SigmaWeight{}, spec, trunc, SelbergMode::SymPower);
        ZetaValue closed = log_selberg(s, SigmaWeight{}, spec, trunc, SelbergMode::ClosedForm);
        double resid = std::abs(sym.log_value - closed.log_value);
        if (resid > sym.tail_bound + closed.tail_bound) {
            res.note += " [residual above combined tail]";
            res.max_residual = std::max(res.max_residual, 1.0);
        }
        res.max_residual = std::max(res.max_residual, resid);
    }
    res.pass = res.max_residual <= res.tolerance;
    return res;
}

// 9. Ruelle = alternating product of shifted Selberg zetas, per class and power.
inline CheckResult factorization_check(std::uint64_t seed) {
    CheckResult res{"factorization-residual", seed, false, 0.0, 1e-8, 0.0,
                    "20 spectra at s = abscissa + 2|rho| + 1"};
    Truncation trunc;
    for (int t = 0; t < 20; ++t) {
        FixtureSpec fs;
        fs.kind = FixtureKind::SyntheticSpectrum;
        fs.d = (t % 2 == 0) ? 3 : 5;
        fs.class_count = 2 + t % 4;
        fs.epsilon = 0.1;
        fs.seed = seed * 211 + static_cast<std::uint64_t>(t);
        LengthSpectrum spec = gen_spectrum(fs);
        Complex s(spec.growth_abscissa + 2.0 * rho_norm(fs.d) + 1.0, 0.0);
        FactorizationResult fr = factorization_residual(s, spec, trunc);
        res.max_residual = std::max(res.max_residual, fr.residual);
    }
    res.pass = res.max_residual <= res.tolerance;
    return res;
}

// 10. R(0; chi) = Cappell-Miller scalar on extracted B^2 spectra.
inline CheckResult ruelle_zero_vs_cm(std::uint64_t seed) {
    CheckResult res{"ruelle-zero-vs-cappell-miller", seed, false, 0.0, 1e-9, 0.0,
                    "toy + 49 fixtures; exponent forms + bridge"};
    {
        FixtureSpec toy;
        toy.kind = FixtureKind::ToyD1;
        GradedComplex c = gen_complex(toy);
        BridgeReport rep = torsion_bridge(c);
        res.max_residual = std::max(res.max_residual, std::abs(rep.ruelle_zero - Complex(4.0, 0.0)) / 4.0);
        res.max_residual = std::max(res.max_residual, std::abs(rep.cm_scalar - Complex(4.0, 0.0)) / 4.0);
    }
    for (int t = 0; t < 49; ++t) {
        GradedComplex c = gen_complex(mixed_fixture(t, seed * 409 + 3, 0.05));
        BridgeReport rep = torsion_bridge(c);
        res.max_residual = std::max(res.max_residual, rep.bridge_rel_err);
        res.max_residual = std::max(res.max_residual, rep.forms_rel_err);
    }
    res.pass = res.max_residual <= res.tolerance;
    return res;
}

// 11. Exponent identity for the two R(0) product forms, in log space.
inline CheckResult exponent_identity(std::uint64_t seed) {
    CheckResult res{"exponent-identity", seed, false, 0.0, 1e-12, 0.0, "duality-symmetric data, log space"};
    Rng rng(seed);
    for (int d : {3, 5, 7, 9}) {
        for (int t = 0; t < 25; ++t) {
            std::vector<double> logx(static_cast<size_t>(d) + 1);
            for (int k = 0; k <= d / 2; ++k) {
                double v = rng.uniform(-1.0, 2.0);
                logx[static_cast<size_t>(k)] = v;
                logx[static_cast<size_t>(d - k)] = v;
            }
            double lhs = 0.0, rhs = 0.0;
            for (int k = 0; k <= d - 1; ++k) lhs += (d - k) * ((k % 2 == 0) ? 1.0 : -1.0) * logx[static_cast<size_t>(k)];
            for (int k = 1; k <= d; ++k) rhs += k * ((k % 2 == 1) ? 1.0 : -1.0) * logx[static_cast<size_t>(k)];
            res.max_residual = std::max(res.max_residual, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
        }
    }
    res.pass = res.max_residual <= res.tolerance;
    return res;
}

// 12. Singularity order arithmetic against a golden table.
inline CheckResult singularity_order_golden(std::uint64_t seed) {
    CheckResult res{"singularity-order-golden", seed, false, 0.0, 0.0, 0.0, "exact integers"};
    struct Row {
        int d;
        std::vector<int> d_chi;
        long expected;
    };
    const std::vector<Row> table = {
        {3, {0, 0}, 0},      {3, {1, 2}, 0},       {3, {0, 1}, -2},  {3, {2, 1}, 6},
        {5, {1, 1, 1}, 4},   {5, {0, 1, 2}, 0},    {5, {1, 0, 3}, 12},
        {7, {1, 1, 1, 1}, 4}, {7, {2, 0, 1, 0}, 20},
    };
    for (const auto& row : table) {
        long got = singularity_order(row.d, row.d_chi);
        if (got != row.expected) res.max_residual = std::max(res.max_residual, 1.0);
    }
    res.pass = res.max_residual == 0.0;
    return res;
}

// 13. c(sigma_p) from the weight ladders: -(|rho| - p)^2 exactly, and the two
//     half weights at p = (d-1)/2 give zero.
inline CheckResult c_sigma_exterior(std::uint64_t seed) {
    CheckResult res{"c-sigma-exterior-power", seed, false, 0.0, 1e-12, 0.0,
                    "d in {3,5,7}, all p; c(sigma_p) = -(|rho|-p)^2"};
    for (int d : {3, 5, 7}) {
        const double rho = rho_norm(d);
        for (int p = 0; p <= d - 1; ++p) {
            double c = c_sigma(sigma_p_weight(d, p), rho_m_weight(d), rho);
            res.max_residual = std::max(res.max_residual, std::abs(c + (rho - p) * (rho - p)));
        }
        auto [plus, minus] = sigma_half_weights(d);
        res.max_residual = std::max(res.max_residual, std::abs(c_sigma(plus, rho_m_weight(d), rho)));
        res.max_residual = std::max(res.max_residual, std::abs(c_sigma(minus, rho_m_weight(d), rho)));
    }
    res.pass = res.max_residual <= res.tolerance;
    return res;
}

}  // namespace checks

struct SuiteEntry {
    std::string name;
    CheckResult (*fn)(std::uint64_t);
    double budget_sec;  // 0 = no budget
};

inline const std::vector<SuiteEntry>& suite_registry() {
    static const std::vector<SuiteEntry> entries = {
        {"det-theta-vs-plain", checks::det_theta_vs_plain, 10.0},
        {"eta-counts", checks::eta_counts, 1.0},
        {"fusion-phi-independence", checks::fusion_phi_independence, 30.0},
        {"lambda-split", checks::lambda_split_law, 60.0},
        {"modulus-identities", checks::modulus_identities, 60.0},
        {"cappell-miller-lambda-independence", checks::cm_lambda_independence, 0.0},
        {"agmon-independence", checks::agmon_independence, 0.0},
        {"zeta-mode-equivalence", checks::zeta_mode_equivalence, 120.0},
        {"factorization-residual", checks::factorization_check, 0.0},
        {"ruelle-zero-vs-cappell-miller", checks::ruelle_zero_vs_cm, 0.0},
        {"exponent-identity", checks::exponent_identity, 0.0},
        {"singularity-order-golden", checks::singularity_order_golden, 0.0},
        {"c-sigma-exterior-power", checks::c_sigma_exterior, 0.0},
    };
    return entries;
}

inline SuiteReport run_suite(std::vector<std::string> names = {}, std::vector<std::uint64_t> seeds = {}) {
    if (seeds.empty()) seeds.push_back(1);
    SuiteReport report;
    if (names.empty())
        for (const auto& e : suite_registry()) names.push_back(e.name);
    for (const auto& name : names) {
        const SuiteEntry* entry = nullptr;
        for (const auto& e : suite_registry())
            if (e.name == name) entry = &e;
        if (!entry) throw Error("run_suite: unknown suite name '" + name + "'");
        for (std::uint64_t seed : seeds) {
            auto t0 = std::chrono::steady_clock::now();
            CheckResult r = entry->fn(seed);
            r.runtime_sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (entry->budget_sec > 0.0 && r.runtime_sec > entry->budget_sec) {
                r.pass = false;
                r.note += " [over runtime budget]";
            }
            report.checks.push_back(std::move(r));
        }
    }
    return report;
}

// Wall-clock time is deliberately left out of the CSV: identical seeds and
// flags must produce byte-identical files. Runtimes stay in the console
// report and on the in-memory results.
inline std::string suite_csv(const SuiteReport& report) {
    std::ostringstream out;
    out << "name,seed,status,max_residual,tolerance\n";
    for (const auto& c : report.checks)
        out << c.name << "," << c.seed << "," << (c.pass ? "PASS" : "FAIL") << "," << fmt17(c.max_residual)
            << "," << fmt17(c.tolerance) << "\n";
    return out.str();
}

inline std::string format_suite(const SuiteReport& report) {
    std::ostringstream out;
    for (const auto& c : report.checks) {
        std::string note = c.note.empty() ? std::string() : "  " + c.note;
        char line[320];
        std::snprintf(line, sizeof(line), "%-4s %-36s seed=%llu  max_resid=%.3e  tol=%.1e  t=%.2fs%s\n",
                      c.pass ? "PASS" : "FAIL", c.name.c_str(), static_cast<unsigned long long>(c.seed),
                      c.max_residual, c.tolerance, c.runtime_sec, note.c_str());
        out << line;
    }
    out << (report.all_pass() ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << "\n";
    return out.str();
}

}  // namespace torsionlab
