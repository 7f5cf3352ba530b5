#pragma once
// Truncated twisted Selberg and Ruelle Euler products over a finite length
// spectrum, symmetric/exterior power trace machinery, the Selberg-Ruelle
// factorization residual, the weight constant c(sigma), and the model
// evaluators for the determinant formula and its value at s = 0.
//
// Convergence is policed, never extrapolated: the caller declares an
// exponential growth bound for the class data (growth_abscissa) and every
// evaluator refuses arguments outside abscissa + margin, where the margin is
// rho_norm(d) for Selberg weights and 2 rho_norm(d) for Ruelle weights.
// Every value is returned together with a rigorous majorant for the discarded
// n,k terms plus a sequential-summation rounding allowance.

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "torsionlab/linalg.hpp"
#include "torsionlab/spectral.hpp"
#include "torsionlab/torsion.hpp"

namespace torsionlab {

// |rho| = (d-1)/2 for the single positive restricted root of hyperbolic d-space.
inline double rho_norm(int d) {
    if (d < 3 || d % 2 == 0) throw Error("rho_norm: d must be odd and at least 3");
    return (d - 1) / 2.0;
}

struct PrimitiveClass {
    double length = 1.0;                  // l(gamma_0) of the primitive class
    std::vector<double> holonomy_angles;  // rotation angles of Ad(m)|_nbar, (d-1)/2 of them
    CMatrix chi;                          // chi(gamma_0), invertible
    std::vector<Complex> sigma_m_eigs;    // unit-modulus eigenvalues of sigma(m_0)
};

struct LengthSpectrum {
    int d = 3;
    double growth_abscissa = 0.0;
    std::vector<PrimitiveClass> classes;
};

struct Truncation {
    double l_max = 1e6;
    int n_max = 60;
    int k_max = 60;
    double tail_tol = 1e-8;
};

inline void validate(const LengthSpectrum& spec) {
    if (spec.d < 3 || spec.d % 2 == 0)
        throw SchemaError("length spectrum: d must be odd and at least 3");
    const size_t want_angles = static_cast<size_t>((spec.d - 1) / 2);
    double prev = 0.0;
    for (size_t i = 0; i < spec.classes.size(); ++i) {
        const auto& pc = spec.classes[i];
        const std::string where = "classes[" + std::to_string(i) + "]";
        if (!(pc.length > 0.0)) throw SchemaError(where + ": length must be positive");
        if (pc.length + 1e-12 < prev) throw SchemaError(where + ": classes must be sorted by length");
        prev = pc.length;
        if (pc.holonomy_angles.size() != want_angles)
            throw SchemaError(where + ": expected " + std::to_string(want_angles) + " holonomy angles");
        if (pc.chi.rows() != pc.chi.cols() || pc.chi.rows() == 0)
            throw SchemaError(where + ": chi must be square and nonempty");
        if (svd_rank(pc.chi, 1e-12) < pc.chi.rows())
            throw SchemaError(where + ": chi must be invertible");
        if (pc.sigma_m_eigs.empty()) throw SchemaError(where + ": sigma_m_eigs must be nonempty");
        for (const auto& z : pc.sigma_m_eigs)
            if (std::abs(std::abs(z) - 1.0) > 1e-10)
                throw SchemaError(where + ": sigma eigenvalues must be unit modulus");
    }
}

// ---------------------------------------------------------------------------
// Symmetric / exterior power traces of the linearized flow.

namespace detail {

// Power sums of the rotation eigenvalues {e^{+-i n phi_j}}.
inline double rotation_power_sum(const std::vector<double>& angles, long n, long m) {
    double acc = 0.0;
    for (double phi : angles) acc += 2.0 * std::cos(static_cast<double>(n) * static_cast<double>(m) * phi);
    return acc;
}

// h_0..h_K of the eigenvalues {e^{-n l} e^{+-i n phi_j}} via Newton's identities.
inline std::vector<double> homogeneous_traces(const std::vector<double>& angles, double length, long n, int kmax) {
    std::vector<double> h(static_cast<size_t>(kmax) + 1, 0.0);
    std::vector<double> p(static_cast<size_t>(kmax) + 1, 0.0);
    const double decay = std::exp(-static_cast<double>(n) * length);
    double decay_m = 1.0;
    for (int m = 1; m <= kmax; ++m) {
        decay_m *= decay;
        p[static_cast<size_t>(m)] = decay_m * rotation_power_sum(angles, n, m);
    }
    h[0] = 1.0;
    for (int k = 1; k <= kmax; ++k) {
        double acc = 0.0;
        for (int m = 1; m <= k; ++m) acc += p[static_cast<size_t>(m)] * h[static_cast<size_t>(k - m)];
        h[static_cast<size_t>(k)] = acc / k;
    }
    return h;
}

// Elementary symmetric polynomials e_0..e_m of the rotation eigenvalues of R^n.
inline std::vector<double> elementary_rotation(const std::vector<double>& angles, long n) {
    std::vector<Complex> coeff{Complex(1.0, 0.0)};
    auto push_root = [&coeff](Complex x) {
        coeff.push_back(Complex(0.0, 0.0));
        for (size_t i = coeff.size() - 1; i >= 1; --i) coeff[i] += x * coeff[i - 1];
    };
    for (double phi : angles) {
        push_root(std::polar(1.0, n * phi));
        push_root(std::polar(1.0, -n * phi));
    }
    std::vector<double> out(coeff.size());
    for (size_t i = 0; i < coeff.size(); ++i) out[i] = coeff[i].real();
    return out;
}

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double acc = 1.0;
    for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return acc;
}

// Exact tail of sum_{k > K} C(k+m-1, m-1) u^k, plus a rounding allowance.
inline double homogeneous_majorant_tail(double u, int m, int kmax) {
    const double closed = std::pow(1.0 - u, -m);
    double partial = 0.0, c = 1.0;
    for (int k = 0; k <= kmax; ++k) {
        partial += c * std::pow(u, k);
        c = c * (k + m) / (k + 1);  // C(k+m, m-1) from C(k+m-1, m-1)
    }
    double tail = closed - partial;
    const double guard = 64.0 * std::numeric_limits<double>::epsilon() * closed;
    return std::max(tail, 0.0) + guard;
}

// Exact tail of sum_{n > N} q^n / n, plus a rounding allowance.
inline double log_series_tail(double q, int nmax) {
    const double closed = -std::log1p(-q);
    double partial = 0.0, qn = 1.0;
    for (int n = 1; n <= nmax; ++n) {
        qn *= q;
        partial += qn / n;
    }
    double tail = closed - partial;
    const double guard = 64.0 * std::numeric_limits<double>::epsilon() * (std::abs(closed) + 1.0);
    return std::max(tail, 0.0) + guard;
}

}  // namespace detail

// Trace of S^k(e^{-n length} R(angles)^n): the complete homogeneous symmetric
// polynomial of the scaled rotation eigenvalues.
inline Complex sym_power_trace(const std::vector<double>& angles, double length, int n, int k) {
    if (n < 0 || k < 0) throw Error("sym_power_trace: n and k must be nonnegative");
    if (k == 0) return Complex(1.0, 0.0);
    auto h = detail::homogeneous_traces(angles, length, n, k);
    return Complex(h[static_cast<size_t>(k)], 0.0);
}

// Trace of Lambda^p(R(angles)^n): elementary symmetric polynomial e_p of the
// rotation eigenvalues.
inline Complex ext_power_trace(const std::vector<double>& angles, int n, int p) {
    const int m = static_cast<int>(angles.size()) * 2;
    if (p < 0 || p > m) throw Error("ext_power_trace: p out of range");
    auto e = detail::elementary_rotation(angles, n);
    return Complex(e[static_cast<size_t>(p)], 0.0);
}

// ---------------------------------------------------------------------------
// Euler products.

// Which sigma weight multiplies the class terms: an optional exterior power
// sigma_p tensored with the per-class sigma data.
struct SigmaWeight {
    int wedge_power = -1;            // p of sigma_p, or -1 for none
    bool include_class_sigma = true;
};

enum class SelbergMode { SymPower, ClosedForm };

struct ZetaValue {
    Complex log_value{0.0, 0.0};
    double tail_bound = 0.0;
};

namespace detail {

struct ClassData {
    double chi_norm;
    int chi_dim;
    int sigma_dim;
};

inline ClassData class_data(const PrimitiveClass& pc) {
    return {operator_norm(pc.chi), static_cast<int>(pc.chi.rows()), static_cast<int>(pc.sigma_m_eigs.size())};
}

}  // namespace detail

// log Z(s; sigma_p (x) sigma, chi) truncated at trunc.n_max powers and
// trunc.k_max symmetric powers. SymPower sums the k-series term by term;
// ClosedForm replaces it with 1/det(Id - Ad(m^n a^n)|_nbar), which is the full
// k-sum in closed form.
inline ZetaValue log_selberg(Complex s, SigmaWeight weight, const LengthSpectrum& spec, const Truncation& trunc,
                             SelbergMode mode = SelbergMode::SymPower) {
    validate(spec);
    const double rho = rho_norm(spec.d);
    const int m = spec.d - 1;
    if (!(s.real() > spec.growth_abscissa + rho))
        throw Error("log_selberg: Re(s) is outside the declared convergence region");
    if (weight.wedge_power > m) throw Error("log_selberg: wedge power out of range");

    Complex acc(0.0, 0.0);
    double tail = 0.0;
    double abs_sum = 0.0;
    long terms = 0;
    for (const auto& pc : spec.classes) {
        if (pc.length > trunc.l_max) continue;
        const auto cd = detail::class_data(pc);
        const double l = pc.length;
        const double q = cd.chi_norm * std::exp(-(s.real() + rho) * l);
        if (!(q < 1.0))
            throw Error("log_selberg: class term fails the geometric convergence test");
        const double wedge_bound = weight.wedge_power >= 0 ? detail::binomial(m, weight.wedge_power) : 1.0;
        const double sigma_bound = weight.include_class_sigma ? cd.sigma_dim : 1.0;
        const double weight_bound = cd.chi_dim * wedge_bound * sigma_bound;

        CMatrix chi_pow = pc.chi;
        std::vector<Complex> sigma_pow(pc.sigma_m_eigs);
        for (int n = 1; n <= trunc.n_max; ++n) {
            if (n > 1) {
                chi_pow = chi_pow * pc.chi;
                for (size_t j = 0; j < sigma_pow.size(); ++j) sigma_pow[j] *= pc.sigma_m_eigs[j];
            }
            Complex factor = chi_pow.trace();
            if (weight.include_class_sigma) {
                Complex ts(0.0, 0.0);
                for (const auto& z : sigma_pow) ts += z;
                factor *= ts;
            }
            if (weight.wedge_power >= 0)
                factor *= ext_power_trace(pc.holonomy_angles, n, weight.wedge_power);
            const Complex expo = std::exp(-(s + rho) * (static_cast<double>(n) * l));
            const double u = std::exp(-static_cast<double>(n) * l);

            Complex ksum(0.0, 0.0);
            if (mode == SelbergMode::SymPower) {
                auto h = detail::homogeneous_traces(pc.holonomy_angles, l, n, trunc.k_max);
                double hs = 0.0;
                for (int k = 0; k <= trunc.k_max; ++k) hs += h[static_cast<size_t>(k)];
                ksum = Complex(hs, 0.0);
                tail += (weight_bound / n) * std::pow(cd.chi_norm, n) *
                        std::exp(-(s.real() + rho) * n * l) * detail::homogeneous_majorant_tail(u, m, trunc.k_max);
                terms += trunc.k_max + 1;
            } else {
                double det = 1.0;
                for (double phi : pc.holonomy_angles)
                    det *= 1.0 - 2.0 * u * std::cos(n * phi) + u * u;
                ksum = Complex(1.0 / det, 0.0);
                terms += 1;
            }
            const Complex term = -(1.0 / n) * factor * ksum * expo;
            acc += term;
            abs_sum += std::abs(term);
        }
        const double sup_ksum = std::pow(1.0 - std::exp(-(trunc.n_max + 1) * l), -m);
        tail += weight_bound * sup_ksum * detail::log_series_tail(q, trunc.n_max);
    }
    tail += static_cast<double>(terms + 1) * std::numeric_limits<double>::epsilon() * abs_sum;
    if (tail > trunc.tail_tol)
        throw Error("log_selberg: truncation tail bound exceeds tail_tol");
    return {acc, tail};
}

// log R(s; sigma, chi) truncated at trunc.n_max powers; the exponent
// (-1)^{d-1} is +1 since d is odd.
inline ZetaValue log_ruelle(Complex s, const LengthSpectrum& spec, const Truncation& trunc) {
    validate(spec);
    const double rho = rho_norm(spec.d);
    if (!(s.real() > spec.growth_abscissa + 2.0 * rho))
        throw Error("log_ruelle: Re(s) is outside the declared convergence region");

    Complex acc(0.0, 0.0);
    double tail = 0.0, abs_sum = 0.0;
    long terms = 0;
    for (const auto& pc : spec.classes) {
        if (pc.length > trunc.l_max) continue;
        const auto cd = detail::class_data(pc);
        const double l = pc.length;
        const double q = cd.chi_norm * std::exp(-s.real() * l);
        if (!(q < 1.0))
            throw Error("log_ruelle: class term fails the geometric convergence test");
        CMatrix chi_pow = pc.chi;
        std::vector<Complex> sigma_pow(pc.sigma_m_eigs);
        for (int n = 1; n <= trunc.n_max; ++n) {
            if (n > 1) {
                chi_pow = chi_pow * pc.chi;
                for (size_t j = 0; j < sigma_pow.size(); ++j) sigma_pow[j] *= pc.sigma_m_eigs[j];
            }
            Complex ts(0.0, 0.0);
            for (const auto& z : sigma_pow) ts += z;
            const Complex term = -(1.0 / n) * chi_pow.trace() * ts *
                                 std::exp(-s * (static_cast<double>(n) * l));
            acc += term;
            abs_sum += std::abs(term);
            ++terms;
        }
        tail += static_cast<double>(cd.chi_dim * cd.sigma_dim) * detail::log_series_tail(q, trunc.n_max);
    }
    tail += static_cast<double>(terms + 1) * std::numeric_limits<double>::epsilon() * abs_sum;
    if (tail > trunc.tail_tol)
        throw Error("log_ruelle: truncation tail bound exceeds tail_tol");
    return {acc, tail};
}

inline Complex ruelle(Complex s, const LengthSpectrum& spec, const Truncation& trunc) {
    return std::exp(log_ruelle(s, spec, trunc).log_value);
}

struct FactorizationResult {
    Complex log_ruelle_value{0.0, 0.0};
    Complex selberg_sum{0.0, 0.0};
    double residual = 0.0;
    double combined_tail = 0.0;
};

// |log R(s) - sum_p (-1)^p log Z(s + rho - p; sigma_p (x) sigma)|; zero up to
// truncation tails by the per-class wedge/denominator cancellation.
inline FactorizationResult factorization_residual(Complex s, const LengthSpectrum& spec, const Truncation& trunc,
                                                  SelbergMode mode = SelbergMode::ClosedForm) {
    const double rho = rho_norm(spec.d);
    FactorizationResult out;
    ZetaValue r = log_ruelle(s, spec, trunc);
    out.log_ruelle_value = r.log_value;
    out.combined_tail = r.tail_bound;
    for (int p = 0; p <= spec.d - 1; ++p) {
        ZetaValue z = log_selberg(s + rho - static_cast<double>(p), SigmaWeight{p, true}, spec, trunc, mode);
        out.selberg_sum += (p % 2 == 0 ? 1.0 : -1.0) * z.log_value;
        out.combined_tail += z.tail_bound;
    }
    out.residual = std::abs(out.log_ruelle_value - out.selberg_sum);
    return out;
}

// ---------------------------------------------------------------------------
// Weight constant c(sigma) and the Spin(d-1) weight ladders.

inline double c_sigma(const std::vector<double>& nu, const std::vector<double>& rho_m, double rho_norm_value) {
    if (nu.size() != rho_m.size()) throw Error("c_sigma: weight vectors must have equal length");
    double nr = 0.0, rr = 0.0;
    for (size_t i = 0; i < nu.size(); ++i) {
        const double v = nu[i] + rho_m[i];
        nr += v * v;
        rr += rho_m[i] * rho_m[i];
    }
    return -rho_norm_value * rho_norm_value - rr + nr;
}

// Half sum of positive roots of so(d-1) in the standard coordinates.
inline std::vector<double> rho_m_weight(int d) {
    const int rank = (d - 1) / 2;
    std::vector<double> out(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) out[static_cast<size_t>(i)] = rank - 1 - i;
    return out;
}

// Highest weight of Lambda^p of the standard representation of SO(d-1):
// min(p, d-1-p) ones, then zeros.
inline std::vector<double> sigma_p_weight(int d, int p) {
    const int m = d - 1;
    if (p < 0 || p > m) throw Error("sigma_p_weight: p out of range");
    const int rank = m / 2;
    const int ones = std::min(p, m - p);
    std::vector<double> out(static_cast<size_t>(rank), 0.0);
    for (int i = 0; i < ones; ++i) out[static_cast<size_t>(i)] = 1.0;
    return out;
}

// The two half weights (1,..,1,+-1) into which Lambda^{(d-1)/2} splits.
inline std::pair<std::vector<double>, std::vector<double>> sigma_half_weights(int d) {
    const int rank = (d - 1) / 2;
    std::vector<double> plus(static_cast<size_t>(rank), 1.0), minus(static_cast<size_t>(rank), 1.0);
    minus.back() = -1.0;
    return {plus, minus};
}

// ---------------------------------------------------------------------------
// Model evaluators for the determinant formula.

struct ModelSpectralData {
    int d = 3;
    std::vector<std::vector<Complex>> eigenvalues;  // per degree 0..d
    int dim_v_chi = 1;
    double vol_ratio = 1.0;  // Vol(X) / Vol(S^d)
    std::vector<int> d_chi;  // kernel dimensions per degree
};

inline void validate(const ModelSpectralData& model) {
    if (model.d < 1 || model.d % 2 == 0) throw SchemaError("model: d must be odd and positive");
    if (model.eigenvalues.size() != static_cast<size_t>(model.d + 1))
        throw SchemaError("model: expected d+1 eigenvalue lists");
    if (!model.d_chi.empty()) {
        if (model.d_chi.size() < static_cast<size_t>((model.d + 1) / 2))
            throw SchemaError("model: d_chi must have at least (d+1)/2 entries");
        for (size_t k = 0; k < model.d_chi.size() && k < model.eigenvalues.size(); ++k) {
            int zeros = 0;
            for (const auto& mu : model.eigenvalues[k])
                if (std::abs(mu) <= 1e-10) ++zeros;
            if (zeros != model.d_chi[k])
                throw SchemaError("model: d_chi[" + std::to_string(k) + "] disagrees with the zero count");
        }
    }
}

inline double sphere_volume(int d) {
    return 2.0 * std::pow(kPi, (d + 1) / 2.0) / std::tgamma((d + 1) / 2.0);
}

struct DetFormulaResult {
    Complex value{1.0, 0.0};  // product of the nonvanishing factors, with the volume term
    bool singular = false;
    long order = 0;           // net order of the zero (+) / pole (-) at this s
};

// prod_{k=0}^{d-1} prod_{p=k}^{d-1} det(Delta_k + s(s + 2(|rho|-p)))^{(-1)^k}
// times the volume exponential. The degree sign (-1)^k is the one consistent
// with the value at s = 0; see ruelle_at_zero_model.
inline DetFormulaResult det_formula_eval(Complex s, const ModelSpectralData& model) {
    validate(model);
    const double rho = rho_norm(model.d);
    DetFormulaResult out;
    Complex log_acc(0.0, 0.0);
    for (int k = 0; k <= model.d - 1; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        for (int p = k; p <= model.d - 1; ++p) {
            const Complex shift = s * (s + 2.0 * (rho - p));
            for (const auto& mu : model.eigenvalues[static_cast<size_t>(k)]) {
                const Complex f = mu + shift;
                if (std::abs(f) <= 1e-12 * std::max({1.0, std::abs(mu), std::abs(shift)})) {
                    out.singular = true;
                    out.order += (k % 2 == 0) ? 1 : -1;
                } else {
                    log_acc += sign * std::log(f);
                }
            }
        }
    }
    const double vol_sign = (((model.d - 1) / 2 + 1) % 2 == 0) ? 1.0 : -1.0;
    log_acc += vol_sign * kPi * (model.d + 1) * model.dim_v_chi * model.vol_ratio * s;
    out.value = std::exp(log_acc);
    return out;
}

struct RuelleZeroResult {
    Complex descending{1.0, 0.0};  // prod_{k=0}^{d-1} det_k^{(d-k)(-1)^k}
    Complex ascending{1.0, 0.0};   // prod_{k=1}^{d}   det_k^{k(-1)^{k-1}}
};

// R(0; chi) for an injective model; the two exponent forms agree whenever the
// data satisfies the duality det_k = det_{d-k}.
inline RuelleZeroResult ruelle_at_zero_model(const ModelSpectralData& model) {
    validate(model);
    std::vector<Complex> dets(static_cast<size_t>(model.d) + 1, Complex(1.0, 0.0));
    for (int k = 0; k <= model.d; ++k) {
        double scale = 1.0;
        for (const auto& mu : model.eigenvalues[static_cast<size_t>(k)]) scale = std::max(scale, std::abs(mu));
        for (const auto& mu : model.eigenvalues[static_cast<size_t>(k)]) {
            if (std::abs(mu) <= 1e-12 * scale)
                throw Error("ruelle_at_zero_model: zero mode in degree " + std::to_string(k) +
                            "; use singularity_order instead");
            dets[static_cast<size_t>(k)] *= mu;
        }
    }
    RuelleZeroResult out;
    for (int k = 0; k <= model.d - 1; ++k) {
        long e = (model.d - k) * ((k % 2 == 0) ? 1 : -1);
        out.descending *= ipow(dets[static_cast<size_t>(k)], e);
    }
    for (int k = 1; k <= model.d; ++k) {
        long e = k * ((k % 2 == 1) ? 1 : -1);
        out.ascending *= ipow(dets[static_cast<size_t>(k)], e);
    }
    return out;
}

// Order of the singularity at s = 0: sum_{k=0}^{(d-1)/2} (d+1-2k)(-1)^k d_chi[k].
inline long singularity_order(int d, const std::vector<int>& d_chi) {
    if (d < 1 || d % 2 == 0) throw Error("singularity_order: d must be odd");
    if (d_chi.size() < static_cast<size_t>((d + 1) / 2))
        throw Error("singularity_order: need at least (d+1)/2 kernel dimensions");
    long acc = 0;
    for (int k = 0; k <= (d - 1) / 2; ++k) {
        long coeff = (d + 1 - 2 * k) * ((k % 2 == 0) ? 1 : -1);
        acc += coeff * d_chi[static_cast<size_t>(k)];
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Bridge from a graded complex to the model evaluators.

inline ModelSpectralData extract_model(const GradedComplex& c) {
    ModelSpectralData model;
    model.d = c.gd.d;
    model.eigenvalues = b_squared_eigenvalues(c);
    model.dim_v_chi = 1;
    model.vol_ratio = 1.0;
    for (const auto& list : model.eigenvalues) {
        int zeros = 0;
        for (const auto& mu : list)
            if (std::abs(mu) <= 1e-10) ++zeros;
        model.d_chi.push_back(zeros);
    }
    return model;
}

struct BridgeReport {
    Complex ruelle_zero{1.0, 0.0};
    Complex cm_scalar{1.0, 0.0};
    double forms_rel_err = 0.0;    // descending vs ascending exponent form
    double bridge_rel_err = 0.0;   // R(0) vs Cappell-Miller
    double modulus_rel_err = 0.0;  // |R(0)| vs e^{2 Re xi}
    // phase of R(0) / (det_gr(B^ev)^2 e^{2 pi i eta}) as e^{i pi nu / 2},
    // compared against the pinned convention (see check_identities)
    int phase_nu_raw = 0;
    int phase_nu_predicted = 0;
    double phase_residual = 0.0;
    bool phase_pinned() const { return ((phase_nu_raw - phase_nu_predicted) % 4 + 4) % 4 == 0; }
};

inline BridgeReport torsion_bridge(const GradedComplex& c) {
    ModelSpectralData model = extract_model(c);
    RuelleZeroResult rz = ruelle_at_zero_model(model);
    CappellMillerResult cm = cappell_miller(c, 0.0);
    OddSignature osig = odd_signature(c);
    const double theta = default_agmon_for(osig).theta;
    PMSplit split = pm_split(osig);
    Complex xi = xi_invariant(osig, theta);
    BridgeReport rep;
    rep.ruelle_zero = rz.ascending;
    rep.cm_scalar = cm.total();
    rep.forms_rel_err = relative_diff(rz.descending, rz.ascending);
    rep.bridge_rel_err = relative_diff(rz.ascending, rep.cm_scalar);
    rep.modulus_rel_err = relative_diff(std::abs(rz.ascending), std::exp(2.0 * xi.real()));
    Complex dg = graded_det_bev(split, theta);
    EtaResult eta = eta_bev(osig, theta);
    Complex ratio = rz.ascending / (dg * dg * std::exp(Complex(0.0, 2.0 * kPi * eta.eta)));
    rep.phase_nu_raw = detail::nu_mod4(ratio);
    rep.phase_nu_predicted = (((-2 * (split.dim_plus - split.dim_minus)) % 4) + 4) % 4;
    rep.phase_residual = detail::phase_residual(ratio, rep.phase_nu_raw);
    return rep;
}

}  // namespace torsionlab
