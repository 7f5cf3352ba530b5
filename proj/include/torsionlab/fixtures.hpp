#pragma once
// Deterministic fixture families: random acyclic complexes with chirality,
// Hermitian-compatible complexes (self-adjoint odd signature operator) with an
// optional non-unitary deformation, the rank-one toy complex, and synthetic
// length spectra. A fixture is a pure function of its FixtureSpec; the RNG
// avoids std distributions so streams are identical across platforms.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/QR>

#include "torsionlab/det_line.hpp"
#include "torsionlab/graded_complex.hpp"
#include "torsionlab/torsion.hpp"
#include "torsionlab/zeta.hpp"

namespace torsionlab {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }  // [0, 1)

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        have_spare_ = true;
        spare_ = r * std::sin(2.0 * kPi * u2);
        return r * std::cos(2.0 * kPi * u2);
    }

    Complex cnormal() { return Complex(normal(), normal()) / std::sqrt(2.0); }

    CMatrix gaussian(int rows, int cols) {
        CMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = cnormal();
        return m;
    }

    // Haar-like unitary: QR of a Gaussian matrix with the R diagonal phases
    // absorbed into Q.
    CMatrix unitary(int n) {
        if (n == 0) return czeros(0, 0);
        CMatrix g = gaussian(n, n);
        Eigen::HouseholderQR<CMatrix> qr(g);
        CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
        CMatrix r = qr.matrixQR().template triangularView<Eigen::Upper>();
        for (int i = 0; i < n; ++i) {
            Complex di = r(i, i);
            double a = std::abs(di);
            q.col(i) *= (a > 0.0) ? di / a : Complex(1.0, 0.0);
        }
        return q;
    }

    // Invertible with singular values in [0.5, 2].
    CMatrix well_conditioned(int n) {
        if (n == 0) return czeros(0, 0);
        CMatrix u = unitary(n), v = unitary(n);
        CVector d(n);
        for (int i = 0; i < n; ++i) d(i) = Complex(uniform(0.5, 2.0), 0.0);
        return u * d.asDiagonal() * v.adjoint();
    }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

enum class FixtureKind { RandomAcyclicComplex, HermitianModelComplex, ToyD1, SyntheticSpectrum };

struct FixtureSpec {
    FixtureKind kind = FixtureKind::RandomAcyclicComplex;
    int d = 3;
    std::vector<int> dims;   // optional; palindromic, zero cohomology
    int class_count = 3;
    int chi_dim = 2;
    int sigma_dim = 1;
    std::uint64_t seed = 1;
    double epsilon = 0.0;    // deformation strength away from the Hermitian point
    double toy_a = 2.0;
};

inline std::string to_string(FixtureKind k) {
    switch (k) {
        case FixtureKind::RandomAcyclicComplex: return "random-acyclic-complex";
        case FixtureKind::HermitianModelComplex: return "hermitian-model-complex";
        case FixtureKind::ToyD1: return "toy-d1";
        case FixtureKind::SyntheticSpectrum: return "synthetic-spectrum";
    }
    return "?";
}

inline FixtureKind fixture_kind_from_string(const std::string& s) {
    if (s == "random-acyclic-complex") return FixtureKind::RandomAcyclicComplex;
    if (s == "hermitian-model-complex") return FixtureKind::HermitianModelComplex;
    if (s == "toy-d1") return FixtureKind::ToyD1;
    if (s == "synthetic-spectrum") return FixtureKind::SyntheticSpectrum;
    throw SchemaError("unknown fixture kind '" + s + "'");
}

// Palindromic dimension vector (1, 2, ..., r, r, ..., 2, 1) admitting an
// acyclic complex with zero cohomology.
inline std::vector<int> default_dims(int d) {
    if (d < 1 || d % 2 == 0) throw Error("default_dims: d must be odd");
    std::vector<int> dims(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) dims[static_cast<size_t>(j)] = std::min(j, d - j) + 1;
    return dims;
}

namespace detail {

// Dimensions of the A-blocks of a zero-cohomology scaffold, a_j = n_j - a_{j-1}.
inline std::vector<int> scaffold_a_dims(const std::vector<int>& dims) {
    std::vector<int> a(dims.size());
    int prev = 0;
    for (size_t j = 0; j < dims.size(); ++j) {
        a[j] = dims[j] - prev;
        if (a[j] < 0) throw Error("fixture dims do not admit an acyclic complex");
        prev = a[j];
    }
    if (a.back() != 0) throw Error("fixture dims do not admit an acyclic complex (a_d != 0)");
    return a;
}

// Block differential in the scaffold ordering [B | A] per degree (H = 0):
// d_j maps the A-block of C^j isomorphically onto the B-block of C^{j+1}.
inline std::vector<CMatrix> scaffold_partials(const std::vector<int>& dims, const std::vector<int>& a_dims, Rng& rng) {
    std::vector<CMatrix> partial;
    const int d = static_cast<int>(dims.size()) - 1;
    for (int j = 0; j < d; ++j) {
        const int n_src = dims[static_cast<size_t>(j)];
        const int n_dst = dims[static_cast<size_t>(j) + 1];
        const int a = a_dims[static_cast<size_t>(j)];
        const int b_src = n_src - a;
        CMatrix p = czeros(n_dst, n_src);
        if (a > 0) p.block(0, b_src, a, a) = rng.well_conditioned(a);
        partial.push_back(p);
    }
    return partial;
}

inline void conjugate_by_unitaries(GradedComplex& c, Rng& rng) {
    const int d = c.gd.d;
    std::vector<CMatrix> u;
    for (int j = 0; j <= d; ++j) u.push_back(rng.unitary(c.dim(j)));
    for (int j = 0; j < d; ++j)
        c.partial[static_cast<size_t>(j)] =
            u[static_cast<size_t>(j) + 1] * c.partial[static_cast<size_t>(j)] * u[static_cast<size_t>(j)].adjoint();
    for (int j = 0; j <= d; ++j)
        c.gamma[static_cast<size_t>(j)] =
            u[static_cast<size_t>(d - j)] * c.gamma[static_cast<size_t>(j)] * u[static_cast<size_t>(j)].adjoint();
}

inline GradedComplex toy_d1(double a) {
    GradedComplex c;
    c.gd.d = 1;
    c.gd.dims = {1, 1};
    c.partial.push_back((CMatrix(1, 1) << Complex(a, 0.0)).finished());
    c.gamma.push_back(CMatrix::Identity(1, 1));
    c.gamma.push_back(CMatrix::Identity(1, 1));
    return c;
}

inline GradedComplex random_acyclic_attempt(const std::vector<int>& dims, Rng& rng) {
    const int d = static_cast<int>(dims.size()) - 1;
    auto a_dims = scaffold_a_dims(dims);
    GradedComplex c;
    c.gd.d = d;
    c.gd.dims = dims;
    c.partial = scaffold_partials(dims, a_dims, rng);
    c.gamma.assign(static_cast<size_t>(d) + 1, CMatrix());
    for (int j = 0; j <= (d - 1) / 2; ++j) {
        CMatrix g = rng.well_conditioned(dims[static_cast<size_t>(j)]);
        c.gamma[static_cast<size_t>(j)] = g;
        c.gamma[static_cast<size_t>(d - j)] = g.inverse();
    }
    conjugate_by_unitaries(c, rng);
    return c;
}

inline GradedComplex hermitian_attempt(const std::vector<int>& dims, double epsilon, Rng& rng) {
    const int d = static_cast<int>(dims.size()) - 1;
    const int mid = (d - 1) / 2;
    auto a_dims = scaffold_a_dims(dims);
    GradedComplex c;
    c.gd.d = d;
    c.gd.dims = dims;
    c.partial.assign(static_cast<size_t>(d), CMatrix());
    c.gamma.assign(static_cast<size_t>(d) + 1, CMatrix());

    // Unitary chirality: Gamma_{d-j} = Gamma_j^*.
    for (int j = 0; j <= mid; ++j) {
        CMatrix g = rng.unitary(dims[static_cast<size_t>(j)]);
        c.gamma[static_cast<size_t>(j)] = g;
        c.gamma[static_cast<size_t>(d - j)] = g.adjoint();
    }

    // Free lower half.
    {
        auto lower = scaffold_partials(dims, a_dims, rng);
        for (int j = 0; j < mid; ++j) c.partial[static_cast<size_t>(j)] = lower[static_cast<size_t>(j)];
    }
    // Middle: d_mid = Gamma_mid S with S Hermitian, ker S = im d_{mid-1}.
    {
        const int n = dims[static_cast<size_t>(mid)];
        const int rank = a_dims[static_cast<size_t>(mid)];
        CMatrix image = column_space(mid > 0 ? c.partial[static_cast<size_t>(mid) - 1] : czeros(n, 0));
        CMatrix q = orthogonal_complement(image);
        CMatrix mix = rng.unitary(rank);
        CVector diag(rank);
        for (int i = 0; i < rank; ++i) {
            double v = rng.uniform(0.5, 2.0);
            diag(i) = Complex(rng.uniform() < 0.5 ? -v : v, 0.0);
        }
        CMatrix s = (q * mix) * diag.asDiagonal() * (q * mix).adjoint();
        c.partial[static_cast<size_t>(mid)] = c.gamma[static_cast<size_t>(mid)] * s;
    }
    // Upper half forced by d* = Gamma d Gamma.
    for (int j = 0; j < mid; ++j) {
        c.partial[static_cast<size_t>(d - j) - 1] = c.gamma[static_cast<size_t>(j)] *
                                                    c.partial[static_cast<size_t>(j)].adjoint() *
                                                    c.gamma[static_cast<size_t>(d - j) - 1];
    }
    conjugate_by_unitaries(c, rng);

    if (epsilon != 0.0) {
        // Deform away from the Hermitian point by a similarity that preserves
        // d^2 = 0 and acyclicity but breaks self-adjointness of B.
        std::vector<CMatrix> p, pinv;
        for (int j = 0; j <= d; ++j) {
            const int n = dims[static_cast<size_t>(j)];
            CMatrix pj = CMatrix::Identity(n, n) + epsilon * rng.gaussian(n, n);
            if (n > 0 && svd_rank(pj, 1e-10) < n)
                throw Error("hermitian fixture: deformation is singular; lower epsilon");
            p.push_back(pj);
            pinv.push_back(n > 0 ? pj.inverse() : czeros(0, 0));
        }
        for (int j = 0; j < d; ++j)
            c.partial[static_cast<size_t>(j)] =
                p[static_cast<size_t>(j) + 1] * c.partial[static_cast<size_t>(j)] * pinv[static_cast<size_t>(j)];
    }
    return c;
}

}  // namespace detail

inline GradedComplex gen_complex(const FixtureSpec& spec) {
    if (spec.kind == FixtureKind::ToyD1) return detail::toy_d1(spec.toy_a);
    if (spec.kind == FixtureKind::SyntheticSpectrum)
        throw Error("gen_complex: synthetic-spectrum is a length-spectrum fixture");
    std::vector<int> dims = spec.dims.empty() ? default_dims(spec.d) : spec.dims;
    if (dims.size() % 2 != 0) throw Error("gen_complex: dims must have an even number of entries (odd d)");
    for (size_t j = 0; j < dims.size(); ++j)
        if (dims[j] != dims[dims.size() - 1 - j])
            throw Error("gen_complex: dims must be palindromic for a chirality operator");

    for (int attempt = 0; attempt < 10; ++attempt) {
        Rng rng(spec.seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(attempt));
        GradedComplex c = spec.kind == FixtureKind::RandomAcyclicComplex
                              ? detail::random_acyclic_attempt(dims, rng)
                              : detail::hermitian_attempt(dims, spec.epsilon, rng);
        check_well_formed(c);
        AssumptionReport rep = validate_assumptions(c);
        if (rep.both()) return c;
    }
    throw Error("gen_complex: Assumption 2 persistently fails for seed " + std::to_string(spec.seed));
}

inline LengthSpectrum gen_spectrum(const FixtureSpec& spec) {
    if (spec.kind != FixtureKind::SyntheticSpectrum)
        throw Error("gen_spectrum: fixture kind must be synthetic-spectrum");
    if (spec.d < 3 || spec.d % 2 == 0) throw Error("gen_spectrum: d must be odd and at least 3");
    Rng rng(spec.seed * 0xd1b54a32d192ed03ull + 17u);
    LengthSpectrum out;
    out.d = spec.d;
    std::vector<double> lengths;
    for (int i = 0; i < spec.class_count; ++i) lengths.push_back(rng.uniform(0.5, 2.5));
    std::sort(lengths.begin(), lengths.end());
    double abscissa = 0.0;
    for (int i = 0; i < spec.class_count; ++i) {
        PrimitiveClass pc;
        pc.length = lengths[static_cast<size_t>(i)];
        for (int a = 0; a < (spec.d - 1) / 2; ++a) pc.holonomy_angles.push_back(rng.uniform(0.0, 2.0 * kPi));
        CMatrix u = rng.unitary(spec.chi_dim);
        CMatrix v = rng.well_conditioned(spec.chi_dim);
        CVector e(spec.chi_dim);
        for (int j = 0; j < spec.chi_dim; ++j)
            e(j) = std::exp(spec.epsilon * rng.cnormal());
        pc.chi = u * v * e.asDiagonal() * v.inverse();
        for (int j = 0; j < spec.sigma_dim; ++j)
            pc.sigma_m_eigs.push_back(std::polar(1.0, rng.uniform(0.0, 2.0 * kPi)));
        abscissa = std::max(abscissa, std::log(std::max(1.0, operator_norm(pc.chi))) / pc.length);
        out.classes.push_back(std::move(pc));
    }
    out.growth_abscissa = abscissa + 0.05;
    return out;
}

// A valid but randomized splitting: A^j is a random complement of ker(d_j),
// H^j a random complement of im(d_{j-1}) inside the kernel, B^j a random
// basis of the image. Used to exercise choice-independence of phi.
inline SplitChoice random_split_choice(const GradedComplex& c, Rng& rng) {
    const int d = c.gd.d;
    for (int attempt = 0; attempt < 10; ++attempt) {
        SplitChoice s;
        s.b.resize(static_cast<size_t>(d) + 1);
        s.h.resize(static_cast<size_t>(d) + 1);
        s.a.resize(static_cast<size_t>(d) + 1);
        for (int j = 0; j <= d; ++j) {
            CMatrix ker = kernel_space(c.partial_at(j));
            CMatrix image = column_space(c.partial_at(j - 1));
            CMatrix proj_out = ker - image * (image.adjoint() * ker);
            CMatrix harm = column_space_k(proj_out, static_cast<int>(ker.cols() - image.cols()));
            CMatrix a_std = orthogonal_complement(ker);
            const int adim = static_cast<int>(a_std.cols());
            const int bdim = static_cast<int>(image.cols());
            const int hdim = static_cast<int>(harm.cols());
            CMatrix a = a_std;
            if (adim > 0)
                a = a_std * rng.well_conditioned(adim) + 0.5 * ker * rng.gaussian(static_cast<int>(ker.cols()), adim);
            CMatrix h = harm;
            if (hdim > 0)
                h = harm * rng.well_conditioned(hdim) + 0.5 * image * rng.gaussian(bdim, hdim);
            CMatrix b = image;
            if (bdim > 0) b = image * rng.well_conditioned(bdim);
            if (j == d) a = czeros(c.dim(d), 0);
            s.a[static_cast<size_t>(j)] = a;
            s.h[static_cast<size_t>(j)] = h;
            s.b[static_cast<size_t>(j)] = b;
        }
        try {
            validate_split(c, s);
            return s;
        } catch (const Error&) {
            continue;  // rank degeneracy; redraw
        }
    }
    throw Error("random_split_choice: failed to draw a valid splitting");
}

}  // namespace torsionlab
