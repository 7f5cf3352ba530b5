#include <catch2/catch.hpp>

#include <Eigen/LU>

#include "oracles.hpp"
#include "torsionlab/fixtures.hpp"
#include "torsionlab/torsion.hpp"

using namespace torsionlab;

namespace {

GradedComplex toy(double a) {
    FixtureSpec fs;
    fs.kind = FixtureKind::ToyD1;
    fs.toy_a = a;
    return gen_complex(fs);
}

GradedComplex fixture(FixtureKind kind, int d, std::uint64_t seed, double eps = 0.0) {
    FixtureSpec fs;
    fs.kind = kind;
    fs.d = d;
    fs.seed = seed;
    fs.epsilon = eps;
    return gen_complex(fs);
}

int lu_rank(const CMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::FullPivLU<CMatrix> lu(m);
    lu.setThreshold(1e-10);
    return static_cast<int>(lu.rank());
}

}  // namespace

TEST_CASE("assumption validation", "[torsion]") {
    SECTION("toy complex satisfies both assumptions") {
        AssumptionReport rep = validate_assumptions(toy(2.0));
        CHECK(rep.acyclic);
        CHECK(rep.b_invertible);
    }
    SECTION("a zero differential on nonzero spaces is not acyclic") {
        GradedComplex c;
        c.gd.d = 1;
        c.gd.dims = {1, 1};
        c.partial.push_back(czeros(1, 1));
        c.gamma.push_back(CMatrix::Identity(1, 1));
        c.gamma.push_back(CMatrix::Identity(1, 1));
        AssumptionReport rep = validate_assumptions(c);
        CHECK_FALSE(rep.acyclic);
    }
    SECTION("random fixtures agree with an LU rank oracle") {
        GradedComplex c = fixture(FixtureKind::RandomAcyclicComplex, 3, 42);
        AssumptionReport rep = validate_assumptions(c);
        CHECK(rep.acyclic);
        CHECK(rep.b_invertible);
        for (int j = 0; j <= 3; ++j) {
            int ker = c.dim(j) - lu_rank(c.partial_at(j));
            int im = lu_rank(c.partial_at(j - 1));
            CHECK(ker == im);
        }
    }
}

TEST_CASE("odd signature operator assembly", "[torsion]") {
    SECTION("zero differential gives B = 0") {
        GradedComplex c;
        c.gd.d = 1;
        c.gd.dims = {1, 1};
        c.partial.push_back(czeros(1, 1));
        c.gamma.push_back(CMatrix::Identity(1, 1));
        c.gamma.push_back(CMatrix::Identity(1, 1));
        OddSignature osig = odd_signature(c);
        CHECK(osig.b_full.norm() == 0.0);
    }
    SECTION("toy blocks are Gamma d and d Gamma") {
        OddSignature osig = odd_signature(toy(2.0));
        CHECK(std::abs(osig.b_full(0, 0) - Complex(2, 0)) < 1e-14);  // Gamma d on C^0
        CHECK(std::abs(osig.b_full(1, 1) - Complex(2, 0)) < 1e-14);  // d Gamma on C^1
        CHECK(std::abs(osig.b_full(0, 1)) < 1e-14);
        CHECK(std::abs(osig.b_full(1, 0)) < 1e-14);
    }
    SECTION("B^2 equals the flat Laplacian assembled from d and Gamma d Gamma") {
        for (std::uint64_t seed : {3u, 4u}) {
            GradedComplex c = fixture(FixtureKind::RandomAcyclicComplex, 5, seed);
            OddSignature osig = odd_signature(c);
            for (int j = 0; j <= 5; ++j) {
                CMatrix delta = flat_laplacian_block(c, j);
                double scale = 1.0 + osig.b_full.norm() * osig.b_full.norm();
                CHECK((delta - osig.b_sq[static_cast<size_t>(j)]).norm() <= 1e-10 * scale);
            }
        }
    }
    SECTION("Gamma and d commute with B^2") {
        GradedComplex c = fixture(FixtureKind::HermitianModelComplex, 3, 6, 0.05);
        OddSignature osig = odd_signature(c);
        CMatrix b2 = osig.b_full * osig.b_full;
        const int d = c.gd.d;
        std::vector<int> off(static_cast<size_t>(d) + 2, 0);
        for (int j = 0; j <= d; ++j) off[static_cast<size_t>(j) + 1] = off[static_cast<size_t>(j)] + c.dim(j);
        double scale = 1.0 + b2.norm();
        for (int j = 0; j < d; ++j) {
            CMatrix lhs = c.partial_at(j) * b2.block(off[static_cast<size_t>(j)], off[static_cast<size_t>(j)], c.dim(j), c.dim(j));
            CMatrix rhs = b2.block(off[static_cast<size_t>(j) + 1], off[static_cast<size_t>(j) + 1], c.dim(j + 1), c.dim(j + 1)) * c.partial_at(j);
            CHECK((lhs - rhs).norm() <= 1e-10 * scale * (1.0 + c.partial_at(j).norm()));
        }
        for (int j = 0; j <= d; ++j) {
            CMatrix lhs = c.gamma_at(j) * b2.block(off[static_cast<size_t>(j)], off[static_cast<size_t>(j)], c.dim(j), c.dim(j));
            CMatrix rhs = b2.block(off[static_cast<size_t>(d - j)], off[static_cast<size_t>(d - j)], c.dim(d - j), c.dim(d - j)) * c.gamma_at(j);
            CHECK((lhs - rhs).norm() <= 1e-10 * scale * (1.0 + c.gamma_at(j).norm()));
        }
    }
}

TEST_CASE("plus/minus splitting of the even part", "[torsion]") {
    SECTION("toy: Lambda^0_+ is everything, Lambda^0_- is zero") {
        OddSignature osig = odd_signature(toy(2.0));
        PMSplit split = pm_split(osig);
        CHECK(split.dim_plus == 1);
        CHECK(split.dim_minus == 0);
        CHECK(split.spec_plus.dim == 1);
        CHECK(std::abs(split.spec_plus.entries[0].lambda - Complex(2, 0)) < 1e-12);
    }
    SECTION("a violated Assumption 2 is an explicit error") {
        GradedComplex c;
        c.gd.d = 1;
        c.gd.dims = {1, 1};
        c.partial.push_back(czeros(1, 1));  // B = 0: kernels overlap
        c.gamma.push_back(CMatrix::Identity(1, 1));
        c.gamma.push_back(CMatrix::Identity(1, 1));
        CHECK_THROWS_AS(pm_split(odd_signature(c)), Error);
    }
    SECTION("dimensions fill the even part exactly") {
        for (std::uint64_t seed : {12u, 13u, 14u}) {
            GradedComplex c = fixture(FixtureKind::RandomAcyclicComplex, 3, seed);
            OddSignature osig = odd_signature(c);
            PMSplit split = pm_split(osig);
            CHECK(split.dim_plus + split.dim_minus == c.even_dim());
        }
    }
    SECTION("hermitian fixtures: eta real and Gamma mirrors minus onto odd plus") {
        GradedComplex c = fixture(FixtureKind::HermitianModelComplex, 3, 21);
        OddSignature osig = odd_signature(c);
        CHECK((osig.b_full - osig.b_full.adjoint()).norm() < 1e-9 * (1.0 + osig.b_full.norm()));
        EtaResult eta = eta_bev(osig, default_agmon_for(osig).theta);
        CHECK(eta.m_plus == 0);
        CHECK(eta.m_minus == 0);
        PMSplit split = pm_split(osig);
        // spec(B|Lambda^ev_-) = spec(B|Lambda^odd_+) via x -> Gamma x
        const int d = c.gd.d;
        std::vector<int> off(static_cast<size_t>(d) + 2, 0);
        for (int j = 0; j <= d; ++j) off[static_cast<size_t>(j) + 1] = off[static_cast<size_t>(j)] + c.dim(j);
        std::vector<Complex> odd_plus;
        for (int k = 1; k <= d; k += 2) {
            CMatrix d_gamma = c.partial_at(d - k) * c.gamma_at(k);
            CMatrix plus = kernel_space(d_gamma);
            if (plus.cols() == 0) continue;
            CMatrix big = czeros(osig.b_full.rows(), plus.cols());
            big.block(off[static_cast<size_t>(k)], 0, c.dim(k), plus.cols()) = plus;
            CMatrix restricted = big.adjoint() * (osig.b_full * big);
            for (Complex z : spectral_decompose(restricted).expanded()) odd_plus.push_back(z);
        }
        auto minus = split.spec_minus.expanded();
        REQUIRE(minus.size() == odd_plus.size());
        std::sort(minus.begin(), minus.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
        std::sort(odd_plus.begin(), odd_plus.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
        for (size_t i = 0; i < minus.size(); ++i) CHECK(std::abs(minus[i] - odd_plus[i]) < 1e-8);
    }
}

TEST_CASE("graded determinant of B^ev and the xi invariant", "[torsion]") {
    SECTION("toy values") {
        OddSignature osig = odd_signature(toy(2.0));
        const double theta = -kPi * 0.55;
        CHECK(std::abs(graded_det_bev(osig, theta) - Complex(2, 0)) < 1e-12);
        CHECK(std::abs(xi_invariant(osig, theta) - Complex(std::log(2.0), 0)) < 1e-12);
        EtaResult eta = eta_bev(osig, theta);
        CHECK(eta.eta == 0.5);
    }
    SECTION("scaling the toy differential shifts xi by log t") {
        OddSignature o1 = odd_signature(toy(2.0));
        OddSignature o2 = odd_signature(toy(2.0 * 1.9));
        const double theta = -kPi * 0.55;
        CHECK(std::abs((xi_invariant(o2, theta) - xi_invariant(o1, theta)) - Complex(std::log(1.9), 0)) < 1e-12);
    }
    SECTION("graded determinant against an LU determinant oracle") {
        GradedComplex c = fixture(FixtureKind::RandomAcyclicComplex, 3, 77);
        OddSignature osig = odd_signature(c);
        PMSplit split = pm_split(osig);
        Complex oracle_dg = split.b_plus.determinant() / (-split.b_minus).determinant();
        CHECK(relative_diff(graded_det_bev(split, default_agmon_for(osig).theta), oracle_dg) < 1e-10);
    }
    SECTION("Re xi against plain determinant moduli") {
        GradedComplex c = fixture(FixtureKind::HermitianModelComplex, 5, 31, 0.05);
        OddSignature osig = odd_signature(c);
        double acc = 0.0;
        for (int k = 1; k <= 5; ++k) {
            double sign = (k % 2 == 0) ? -1.0 : 1.0;
            acc += 0.5 * sign * k * std::log(std::abs(osig.b_sq[static_cast<size_t>(k)].determinant()));
        }
        CHECK(std::abs(xi_invariant(osig, default_agmon_for(osig).theta).real() - acc) < 1e-9);
    }
}

TEST_CASE("refined analytic torsion phases", "[torsion]") {
    OddSignature osig = odd_signature(toy(2.0));
    const double theta = -kPi / 2;
    Complex dg = graded_det_bev(osig, theta);
    CHECK(std::abs(refined_analytic_torsion(osig, theta, 0.0, 3) - dg) < 1e-12);
    CHECK(std::abs(refined_analytic_torsion(osig, theta, 1.0, 2) - dg) < 1e-12);  // e^{2 pi i} = 1
    CHECK(std::abs(refined_analytic_torsion(osig, theta, 0.5, 1) - Complex(0, 1) * dg) < 1e-12);
    CHECK(std::abs(refined_analytic_torsion_alt(osig, theta, 0.0, 5) - dg) < 1e-12);
    CHECK(std::abs(refined_analytic_torsion_alt(osig, theta, 3.0, 4) - dg) < 1e-12);  // e^{6 pi i} = 1

    // alternative form against e^xi e^{-i pi eta} e^{i pi (rank/2) L}: the
    // ratio is the same pinned fourth root as for the graded determinant
    Complex xi = xi_invariant(osig, theta);
    EtaResult eta = eta_bev(osig, theta);
    PMSplit split = pm_split(osig);
    const double l_int = 0.75;
    const int rank = 2;
    Complex alt = refined_analytic_torsion_alt(osig, theta, l_int, rank);
    Complex form = std::exp(xi) * std::exp(Complex(0, -kPi * eta.eta)) *
                   std::exp(Complex(0, kPi * 0.5 * rank * l_int));
    Complex ratio = alt / form;
    int dim_diff = split.dim_plus - split.dim_minus;
    Complex pinned = ipow(Complex(0, 1), dim_diff);
    CHECK(std::abs(ratio - pinned) < 1e-12);
}

TEST_CASE("Cappell-Miller torsion", "[torsion]") {
    SECTION("toy gives a^2") {
        CappellMillerResult cm = cappell_miller(toy(2.0), 0.0);
        CHECK(cm.pure_scalar);
        CHECK(std::abs(cm.total() - Complex(4, 0)) < 1e-12);
    }
    SECTION("zero complex gives 1") {
        GradedComplex z;
        z.gd.d = 1;
        z.gd.dims = {0, 0};
        z.partial.push_back(czeros(0, 0));
        z.gamma.push_back(czeros(0, 0));
        z.gamma.push_back(czeros(0, 0));
        CHECK(std::abs(cappell_miller(z, 0.0).total() - Complex(1, 0)) < 1e-15);
    }
    SECTION("independent of the admissible lambda, including a nonempty finite part") {
        GradedComplex c = fixture(FixtureKind::RandomAcyclicComplex, 5, 88);
        OddSignature osig = odd_signature(c);
        auto lambdas = candidate_split_lambdas(osig, 3);
        REQUIRE(lambdas.size() >= 2);
        Complex t0 = cappell_miller(c, lambdas[0]).total();
        CappellMillerResult later = cappell_miller(c, lambdas.back());
        CHECK_FALSE(later.pure_scalar);
        CHECK(relative_diff(t0, later.total()) < 1e-8);
    }
    SECTION("lambda on the spectrum is rejected") {
        GradedComplex c = toy(2.0);
        CHECK_THROWS_AS(cappell_miller(c, 4.0), Error);  // B^2 = 4
    }
    SECTION("matches the literal product of plain determinants") {
        GradedComplex c = fixture(FixtureKind::HermitianModelComplex, 3, 99, 0.05);
        OddSignature osig = odd_signature(c);
        Complex lit(1, 0);
        for (int k = 1; k <= 3; ++k) {
            long e = k * ((k % 2 == 1) ? 1 : -1);
            lit *= ipow(osig.b_sq[static_cast<size_t>(k)].determinant(), e);
        }
        CHECK(relative_diff(cappell_miller(c, 0.0).total(), lit) < 1e-10);
    }
}

TEST_CASE("identity report: pinned phases and exact moduli", "[torsion]") {
    SECTION("toy: defect i^1 with dim difference 1") {
        IdentityReport rep = check_identities(toy(2.0));
        CHECK(rep.dim_ev_plus - rep.dim_ev_minus == 1);
        for (const auto& ch : rep.checks) {
            CHECK(ch.modulus_rel_err < 1e-12);
            if (ch.has_phase) {
                CHECK(ch.nu_raw == ch.nu_predicted);
                CHECK(ch.phase_residual < 1e-12);
            }
        }
    }
    SECTION("rank-two d=1 complex: defect i^2") {
        GradedComplex c;
        c.gd.d = 1;
        c.gd.dims = {2, 2};
        CMatrix p(2, 2);
        p << Complex(2, 0), Complex(0, 0), Complex(0, 0), Complex(3, 0);
        c.partial.push_back(p);
        c.gamma.push_back(CMatrix::Identity(2, 2));
        c.gamma.push_back(CMatrix::Identity(2, 2));
        IdentityReport rep = check_identities(c);
        REQUIRE(rep.checks[0].name == "det-gr-vs-exp-xi-eta");
        CHECK(rep.checks[0].nu_raw == 2);
        CHECK(rep.checks[0].nu_predicted == 2);
    }
    SECTION("random fixtures: moduli exact, lambda-split exact, phases pinned") {
        for (int t = 0; t < 6; ++t) {
            FixtureKind kind = (t % 2 == 0) ? FixtureKind::HermitianModelComplex : FixtureKind::RandomAcyclicComplex;
            GradedComplex c = fixture(kind, (t % 4 < 2) ? 3 : 5, 600 + static_cast<std::uint64_t>(t),
                                      kind == FixtureKind::HermitianModelComplex ? 0.03 : 0.0);
            IdentityReport rep = check_identities(c);
            CHECK(rep.max_modulus_err() < 1e-9);
            // mod 2 everywhere; strictly i^{dim+ - dim-} on (near-)Hermitian data
            CHECK(rep.phases_ok());
            if (kind == FixtureKind::HermitianModelComplex) CHECK(rep.phases_strict_ok());
        }
    }
}

TEST_CASE("degenerate complexes with empty end degrees", "[torsion]") {
    FixtureSpec fs;
    fs.kind = FixtureKind::RandomAcyclicComplex;
    fs.d = 3;
    fs.dims = {0, 1, 1, 0};
    fs.seed = 3;
    GradedComplex c = gen_complex(fs);
    AssumptionReport rep = validate_assumptions(c);
    CHECK(rep.acyclic);
    CHECK(rep.b_invertible);
    // all products over the empty degrees are 1; the identities still close
    IdentityReport idr = check_identities(c);
    CHECK(idr.max_modulus_err() < 1e-10);
    CHECK(idr.phases_ok());
    CappellMillerResult cm = cappell_miller(c, 0.0);
    CHECK(std::abs(cm.total()) > 0.0);
}

TEST_CASE("spectral subcomplexes above the cut are acyclic", "[torsion]") {
    GradedComplex c = fixture(FixtureKind::HermitianModelComplex, 5, 17);
    OddSignature osig = odd_signature(c);
    auto lambdas = candidate_split_lambdas(osig, 3);
    for (double lambda : lambdas) {
        SpectralSplit sp = spectral_split(osig, lambda);
        if (sp.high.total_dim() == 0) continue;
        for (int b : betti_numbers(sp.high)) CHECK(b == 0);
    }
}
