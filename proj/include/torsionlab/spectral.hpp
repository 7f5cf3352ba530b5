#pragma once
// Finite-dimensional non-self-adjoint spectral machinery: eigenvalues with
// algebraic multiplicities and root-subspace projectors, Agmon angles, branch
// logarithms, zeta-regularized determinants, eta invariants and graded
// determinants. For a finite spectrum the zeta/eta series are finite sums, so
// everything here is exact modulo the eigensolver.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include <Eigen/Eigenvalues>

#include "torsionlab/linalg.hpp"

namespace torsionlab {

// Angular half-width used when an operation merely needs "theta is an Agmon
// angle" rather than a caller-specified exclusion band.
inline constexpr double kAgmonGuard = 1e-9;

struct SpectrumEntry {
    Complex lambda;
    int mult = 1;
};

struct Spectrum {
    std::vector<SpectrumEntry> entries;
    int dim = 0;
    // Root-subspace projectors aligned with `entries`; empty unless requested.
    std::vector<CMatrix> projectors;

    bool has_projectors() const { return !projectors.empty(); }

    static Spectrum from_eigenvalues(const std::vector<Complex>& lambdas, double cluster_tol);

    std::vector<Complex> expanded() const {
        std::vector<Complex> out;
        out.reserve(static_cast<size_t>(dim));
        for (const auto& e : entries)
            for (int i = 0; i < e.mult; ++i) out.push_back(e.lambda);
        return out;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& e : entries) m = std::max(m, std::abs(e.lambda));
        return m;
    }
};

struct AgmonAngle {
    double theta = -kPi / 2.0;
    double epsilon = kAgmonGuard;
};

struct EtaResult {
    double eta0 = 0.0;  // eta(0, D); an integer for finite spectra
    int m_plus = 0;
    int m_minus = 0;
    double eta = 0.0;  // (eta0 + m_plus - m_minus) / 2
};

enum class GradedConvention { Plain, NegateMinus };

// ---------------------------------------------------------------------------

// Greedy single-linkage clustering of eigenvalues within cluster_tol.
inline Spectrum Spectrum::from_eigenvalues(const std::vector<Complex>& lambdas, double cluster_tol) {
    const int n = static_cast<int>(lambdas.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(lambdas[i] - lambdas[j]) <= cluster_tol) parent[find(i)] = find(j);

    std::vector<int> count(n, 0);
    std::vector<Complex> sum(n, Complex(0, 0));
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        count[r] += 1;
        sum[r] += lambdas[i];
    }
    Spectrum spec;
    spec.dim = n;
    for (int i = 0; i < n; ++i)
        if (count[i] > 0)
            spec.entries.push_back({sum[i] / static_cast<double>(count[i]), count[i]});
    std::sort(spec.entries.begin(), spec.entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
        if (a.lambda.real() != b.lambda.real()) return a.lambda.real() < b.lambda.real();
        return a.lambda.imag() < b.lambda.imag();
    });
    return spec;
}

namespace detail {

inline void attach_projectors(Spectrum& spec, const CMatrix& m) {
    const Eigen::Index n = m.rows();
    if (n == 0) return;
    // Root space of lambda = kernel of (M - lambda I)^mult; algebraic
    // multiplicity bounds the index, so taking the `mult` smallest right
    // singular directions is always a basis.
    CMatrix all(n, n);
    Eigen::Index col = 0;
    std::vector<Eigen::Index> starts;
    for (const auto& e : spec.entries) {
        CMatrix shifted = m - e.lambda * CMatrix::Identity(n, n);
        CMatrix power = CMatrix::Identity(n, n);
        for (int i = 0; i < e.mult; ++i) power = power * shifted;
        Eigen::JacobiSVD<CMatrix> svd(power, Eigen::ComputeFullV);
        starts.push_back(col);
        all.middleCols(col, e.mult) = svd.matrixV().rightCols(e.mult);
        col += e.mult;
    }
    CMatrix inv = all.inverse();
    for (size_t k = 0; k < spec.entries.size(); ++k) {
        const int mult = spec.entries[k].mult;
        spec.projectors.push_back(all.middleCols(starts[k], mult) * inv.middleRows(starts[k], mult));
    }
}

// Wrap an angle into (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

inline void require_invertible(const Spectrum& spec, const char* who) {
    const double scale = std::max(1.0, spec.max_abs());
    for (const auto& e : spec.entries)
        if (std::abs(e.lambda) <= 1e-14 * scale)
            throw Error(std::string(who) + ": spectrum contains a zero eigenvalue");
}

}  // namespace detail

// Eigenvalues of a square complex matrix, grouped within `cluster_tol`
// (default 1e-8 * ||M||) into entries carrying algebraic multiplicities.
inline Spectrum spectral_decompose(const CMatrix& m, double cluster_tol = 0.0, bool want_projectors = false) {
    if (m.rows() != m.cols()) throw Error("spectral_decompose: matrix must be square");
    const Eigen::Index n = m.rows();
    Spectrum spec;
    if (n == 0) return spec;
    Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw Error("spectral_decompose: eigenvalue iteration failed to converge");
    if (cluster_tol <= 0.0) cluster_tol = 1e-8 * std::max(1.0, operator_norm(m));
    std::vector<Complex> lambdas(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    spec = Spectrum::from_eigenvalues(lambdas, cluster_tol);
    if (want_projectors) detail::attach_projectors(spec, m);
    return spec;
}

// log_theta: the branch of log with Im in (theta, theta + 2pi). Rejects points
// within `angle_tol` of the cut ray R_theta.
inline Complex branch_log(Complex z, double theta, double angle_tol = 1e-12) {
    if (z == Complex(0.0, 0.0)) throw Error("branch_log: zero argument");
    const double two_pi = 2.0 * kPi;
    double a = std::arg(z);
    double k = std::ceil((theta - a) / two_pi);
    double arg_t = a + two_pi * k;
    if (arg_t < theta) arg_t += two_pi;  // guards fmod edge cases
    if (arg_t - theta <= angle_tol || (theta + two_pi) - arg_t <= angle_tol)
        throw Error("branch_log: argument lies on the branch cut ray");
    return Complex(std::log(std::abs(z)), arg_t);
}

// Smallest angular distance between the spectrum and the ray at `theta`.
inline double agmon_margin(const Spectrum& spec, double theta) {
    double margin = kPi;
    for (const auto& e : spec.entries) {
        if (std::abs(e.lambda) == 0.0) continue;  // the solid angle excludes 0
        margin = std::min(margin, std::abs(detail::wrap_angle(std::arg(e.lambda) - theta)));
    }
    return margin;
}

// True iff the closed solid angle [theta - eps, theta + eps] is disjoint from
// the spectrum.
inline bool is_agmon(const Spectrum& spec, double theta, double epsilon) {
    if (epsilon <= 0.0) throw Error("is_agmon: epsilon must be positive");
    return agmon_margin(spec, theta) > epsilon;
}

inline void require_agmon(const Spectrum& spec, double theta, const char* who) {
    if (!is_agmon(spec, theta, kAgmonGuard))
        throw Error(std::string(who) + ": theta is not an Agmon angle for the spectrum");
}

// zeta_theta(s) = sum m_k exp(-s log_theta lambda_k); entire in s.
inline Complex zeta_theta(const Spectrum& spec, double theta, Complex s) {
    detail::require_invertible(spec, "zeta_theta");
    require_agmon(spec, theta, "zeta_theta");
    Complex acc(0.0, 0.0);
    for (const auto& e : spec.entries)
        acc += static_cast<double>(e.mult) * std::exp(-s * branch_log(e.lambda, theta));
    return acc;
}

// L det_theta = -zeta_theta'(0) = sum m_k log_theta lambda_k.
inline Complex ldet_theta(const Spectrum& spec, double theta) {
    detail::require_invertible(spec, "ldet_theta");
    require_agmon(spec, theta, "ldet_theta");
    Complex acc(0.0, 0.0);
    for (const auto& e : spec.entries)
        acc += static_cast<double>(e.mult) * branch_log(e.lambda, theta);
    return acc;
}

// exp(ldet_theta); equals the plain eigenvalue product for any admissible theta.
inline Complex det_theta(const Spectrum& spec, double theta) {
    return std::exp(ldet_theta(spec, theta));
}

inline Spectrum negated(const Spectrum& spec) {
    Spectrum out = spec;
    for (auto& e : out.entries) e.lambda = -e.lambda;
    out.projectors.clear();
    return out;
}

// Eta invariant of a finite spectrum: half-plane counts plus the imaginary
// axis bookkeeping of m_plus / m_minus. Exact; no continuation is involved.
inline EtaResult eta_invariant(const Spectrum& spec, double theta, double axis_tol_scale = 1e-10) {
    detail::require_invertible(spec, "eta_invariant");
    require_agmon(spec, theta, "eta_invariant");
    EtaResult r;
    long plus = 0, minus = 0;
    for (const auto& e : spec.entries) {
        const double axis_tol = axis_tol_scale * std::max(1.0, std::abs(e.lambda));
        if (std::abs(e.lambda.real()) <= axis_tol) {
            if (e.lambda.imag() > 0.0)
                r.m_plus += e.mult;
            else
                r.m_minus += e.mult;
        } else if (e.lambda.real() > 0.0) {
            plus += e.mult;
        } else {
            minus += e.mult;
        }
    }
    r.eta0 = static_cast<double>(plus - minus);
    r.eta = (r.eta0 + r.m_plus - r.m_minus) / 2.0;
    return r;
}

// det(D+)/det(D-), or det(D+)/det(-D-) under the negate-minus convention used
// for the even part of the odd signature operator. Empty minus part gives
// denominator 1.
inline Complex graded_det(const Spectrum& spec_plus, const Spectrum& spec_minus, double theta,
                          GradedConvention convention) {
    Complex num(1.0, 0.0), den(1.0, 0.0);
    if (spec_plus.dim > 0) num = det_theta(spec_plus, theta);
    if (spec_minus.dim > 0) {
        den = convention == GradedConvention::Plain ? det_theta(spec_minus, theta)
                                                    : det_theta(negated(spec_minus), theta);
    }
    return num / den;
}

// ---------------------------------------------------------------------------
// Agmon angle selection.
//
// Cut-line search: eigenvalue directions are folded mod pi so that the chosen
// theta keeps both rays theta and theta+pi clear of the spectrum. That makes
// theta Agmon for D, -D and (through doubling) 2*theta Agmon for D^2.

namespace detail {

inline std::vector<double> fold_directions_mod(const std::vector<Complex>& lambdas, double period) {
    std::vector<double> dirs;
    dirs.reserve(lambdas.size());
    for (Complex z : lambdas) {
        if (std::abs(z) == 0.0) continue;
        double a = std::fmod(std::arg(z), period);
        if (a < 0) a += period;
        dirs.push_back(a);
    }
    std::sort(dirs.begin(), dirs.end());
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    return dirs;
}

struct Gap {
    double mid;
    double half_width;
};

inline std::vector<Gap> circular_gaps(const std::vector<double>& dirs, double period) {
    std::vector<Gap> gaps;
    if (dirs.empty()) {
        gaps.push_back({period / 2.0, period / 2.0});
        return gaps;
    }
    for (size_t i = 0; i < dirs.size(); ++i) {
        double lo = dirs[i];
        double hi = (i + 1 < dirs.size()) ? dirs[i + 1] : dirs[0] + period;
        double mid = std::fmod((lo + hi) / 2.0, period);
        gaps.push_back({mid, (hi - lo) / 2.0});
    }
    std::sort(gaps.begin(), gaps.end(), [](const Gap& a, const Gap& b) { return a.half_width > b.half_width; });
    return gaps;
}

}  // namespace detail

// Up to `count` admissible cut lines for `spec`, returned as theta in
// (-pi, 0), best margin first.
inline std::vector<AgmonAngle> admissible_cut_lines(const Spectrum& spec, int count = 1) {
    auto dirs = detail::fold_directions_mod(spec.expanded(), kPi);
    auto gaps = detail::circular_gaps(dirs, kPi);
    std::vector<AgmonAngle> out;
    auto push = [&out](double dir, double margin) {
        if (margin <= kAgmonGuard) return;
        double theta = dir - kPi;  // direction in (0, pi) -> theta in (-pi, 0)
        if (theta <= -kPi + 1e-12 || theta >= -1e-12) return;
        out.push_back({theta, margin});
    };
    for (const auto& g : gaps) {
        if (static_cast<int>(out.size()) >= count) break;
        push(g.mid, g.half_width);
        if (static_cast<int>(out.size()) < count && g.half_width > 4.0 * kAgmonGuard) {
            push(g.mid + g.half_width / 2.0, g.half_width / 2.0);
            push(g.mid - g.half_width / 2.0, g.half_width / 2.0);
        }
    }
    if (out.empty()) throw Error("admissible_cut_lines: no admissible Agmon angle in (-pi, 0)");
    if (static_cast<int>(out.size()) > count) out.resize(static_cast<size_t>(count));
    return out;
}

inline AgmonAngle choose_cut_line(const Spectrum& spec) { return admissible_cut_lines(spec, 1).front(); }

// A single Agmon ray for `spec` with theta in (lo, hi), by the widest gap of
// eigenvalue directions on the full circle. Used for B^2 where the natural
// window is (0, 2pi).
inline AgmonAngle choose_agmon_ray(const Spectrum& spec, double lo = 0.0, double hi = 2.0 * kPi) {
    auto dirs = detail::fold_directions_mod(spec.expanded(), 2.0 * kPi);
    auto gaps = detail::circular_gaps(dirs, 2.0 * kPi);
    for (const auto& g : gaps) {
        double theta = g.mid;
        while (theta <= lo) theta += 2.0 * kPi;
        while (theta >= hi) theta -= 2.0 * kPi;
        if (theta <= lo) continue;
        double margin = agmon_margin(spec, theta);
        if (margin > kAgmonGuard) return {theta, margin};
    }
    throw Error("choose_agmon_ray: no admissible Agmon angle in the requested window");
}

}  // namespace torsionlab
