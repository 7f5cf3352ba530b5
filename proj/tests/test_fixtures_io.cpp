#include <catch2/catch.hpp>

#include <fstream>

#include "torsionlab/fixtures.hpp"
#include "torsionlab/io.hpp"
#include "torsionlab/suite.hpp"

using namespace torsionlab;

TEST_CASE("fixture generation", "[fixtures]") {
    SECTION("toy-d1 is seed independent") {
        FixtureSpec a, b;
        a.kind = b.kind = FixtureKind::ToyD1;
        a.seed = 1;
        b.seed = 999;
        CHECK(to_json(gen_complex(a)) == to_json(gen_complex(b)));
        GradedComplex c = gen_complex(a);
        CHECK(c.gd.d == 1);
        CHECK(std::abs(c.partial[0](0, 0) - Complex(2, 0)) < 1e-15);
    }
    SECTION("random acyclic d=3 seed 42 satisfies both assumptions") {
        FixtureSpec fs;
        fs.kind = FixtureKind::RandomAcyclicComplex;
        fs.d = 3;
        fs.seed = 42;
        AssumptionReport rep = validate_assumptions(gen_complex(fs));
        CHECK(rep.acyclic);
        CHECK(rep.b_invertible);
    }
    SECTION("hermitian fixtures have a real eta invariant") {
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            FixtureSpec fs;
            fs.kind = FixtureKind::HermitianModelComplex;
            fs.d = 5;
            fs.seed = seed;
            GradedComplex c = gen_complex(fs);
            OddSignature osig = odd_signature(c);
            EtaResult eta = eta_bev(osig, default_agmon_for(osig).theta);
            CHECK(eta.m_plus == 0);
            CHECK(eta.m_minus == 0);
            Spectrum bev = spectral_decompose(osig.b_even);
            for (const auto& e : bev.entries) CHECK(std::abs(e.lambda.imag()) < 1e-9 * (1.0 + std::abs(e.lambda)));
        }
    }
    SECTION("same seed, same bytes; different seed, different complex") {
        FixtureSpec fs;
        fs.kind = FixtureKind::RandomAcyclicComplex;
        fs.d = 3;
        fs.seed = 11;
        std::string dump1 = to_json(gen_complex(fs)).dump();
        std::string dump2 = to_json(gen_complex(fs)).dump();
        CHECK(dump1 == dump2);
        fs.seed = 12;
        CHECK(to_json(gen_complex(fs)).dump() != dump1);
    }
    SECTION("the default dimension ladder extends to d = 7") {
        FixtureSpec fs;
        fs.kind = FixtureKind::RandomAcyclicComplex;
        fs.d = 7;
        fs.seed = 2;
        AssumptionReport rep = validate_assumptions(gen_complex(fs));
        CHECK(rep.acyclic);
        CHECK(rep.b_invertible);
    }
    SECTION("non-palindromic dims are rejected") {
        FixtureSpec fs;
        fs.kind = FixtureKind::RandomAcyclicComplex;
        fs.d = 3;
        fs.dims = {1, 2, 3, 1};
        CHECK_THROWS_AS(gen_complex(fs), Error);
    }
    SECTION("spectra: empty, deterministic, sorted") {
        FixtureSpec fs;
        fs.kind = FixtureKind::SyntheticSpectrum;
        fs.d = 3;
        fs.class_count = 0;
        CHECK(gen_spectrum(fs).classes.empty());
        fs.class_count = 5;
        fs.seed = 7;
        fs.epsilon = 0.1;
        LengthSpectrum s = gen_spectrum(fs);
        CHECK(s.classes.size() == 5);
        for (size_t i = 1; i < s.classes.size(); ++i)
            CHECK(s.classes[i - 1].length <= s.classes[i].length);
        CHECK(to_json(s).dump() == to_json(gen_spectrum(fs)).dump());
    }
}

TEST_CASE("JSON round trips are lossless", "[io]") {
    SECTION("graded complex") {
        FixtureSpec fs;
        fs.kind = FixtureKind::HermitianModelComplex;
        fs.d = 3;
        fs.seed = 5;
        fs.epsilon = 0.02;
        GradedComplex c = gen_complex(fs);
        Json j = to_json(c);
        GradedComplex back = complex_from_json(j);
        CHECK(to_json(back) == j);
    }
    SECTION("length spectrum") {
        FixtureSpec fs;
        fs.kind = FixtureKind::SyntheticSpectrum;
        fs.d = 5;
        fs.class_count = 3;
        fs.seed = 9;
        LengthSpectrum s = gen_spectrum(fs);
        Json j = to_json(s);
        CHECK(to_json(spectrum_from_json(j)) == j);
    }
    SECTION("model spectral data") {
        ModelSpectralData m;
        m.d = 3;
        m.eigenvalues = {{Complex(1, 2)}, {Complex(3, -1), Complex(0.5, 0)}, {Complex(3, -1), Complex(0.5, 0)}, {Complex(1, 2)}};
        m.dim_v_chi = 2;
        m.vol_ratio = 0.75;
        m.d_chi = {0, 0};
        Json j = to_json(m);
        CHECK(to_json(model_from_json(j)) == j);
    }
}

TEST_CASE("schema errors name the offending path", "[io]") {
    SECTION("missing field") {
        Json j = Json::object();
        CHECK_THROWS_WITH(complex_from_json(j), Catch::Contains("$.d"));
    }
    SECTION("bad complex pair deep in a matrix") {
        FixtureSpec fs;
        fs.kind = FixtureKind::ToyD1;
        Json j = to_json(gen_complex(fs));
        j["partial"][0][0][0] = "oops";
        CHECK_THROWS_WITH(complex_from_json(j), Catch::Contains("partial[0][0][0]"));
    }
    SECTION("ragged matrix row") {
        Json j = Json::parse(R"({"d":1,"dims":[1,1],"partial":[[[[1,0]],[]]],"gamma":[[[[1,0]]],[[[1,0]]]]})");
        CHECK_THROWS_AS(complex_from_json(j), SchemaError);
    }
    SECTION("unsorted classes are rejected") {
        FixtureSpec fs;
        fs.kind = FixtureKind::SyntheticSpectrum;
        fs.d = 3;
        fs.class_count = 2;
        fs.seed = 4;
        LengthSpectrum s = gen_spectrum(fs);
        std::swap(s.classes[0], s.classes[1]);
        Json j = to_json(s);
        CHECK_THROWS_AS(spectrum_from_json(j), SchemaError);
    }
    SECTION("sigma eigenvalues must be unit modulus") {
        FixtureSpec fs;
        fs.kind = FixtureKind::SyntheticSpectrum;
        fs.d = 3;
        fs.class_count = 1;
        fs.seed = 4;
        LengthSpectrum s = gen_spectrum(fs);
        s.classes[0].sigma_m_eigs[0] = Complex(2, 0);
        CHECK_THROWS_AS(spectrum_from_json(to_json(s)), SchemaError);
    }
    SECTION("vol_x is accepted in place of vol_ratio") {
        ModelSpectralData m;
        m.d = 3;
        m.eigenvalues = {{Complex(1, 0)}, {Complex(1, 0)}, {Complex(1, 0)}, {Complex(1, 0)}};
        Json j = to_json(m);
        j.erase("vol_ratio");
        j["vol_x"] = 3.0 * sphere_volume(3);
        CHECK(std::abs(model_from_json(j).vol_ratio - 3.0) < 1e-12);
        j.erase("vol_x");
        CHECK_THROWS_WITH(model_from_json(j), Catch::Contains("vol_ratio"));
    }
    SECTION("d_chi inconsistent with zero counts") {
        ModelSpectralData m;
        m.d = 3;
        m.eigenvalues = {{Complex(1, 0)}, {Complex(1, 0)}, {Complex(1, 0)}, {Complex(1, 0)}};
        m.d_chi = {1, 0};
        CHECK_THROWS_AS(model_from_json(to_json(m)), SchemaError);
    }
}

TEST_CASE("golden spectrum file is stable", "[io]") {
    FixtureSpec fs;
    fs.kind = FixtureKind::SyntheticSpectrum;
    fs.d = 3;
    fs.class_count = 1;
    fs.seed = 1;
    fs.epsilon = 0.1;
    std::string produced = to_json(gen_spectrum(fs)).dump(2) + "\n";
    std::ifstream in(std::string(TORSIONLAB_TEST_DIR) + "/golden/spectrum_1class_seed1.json");
    REQUIRE(in.good());
    std::string golden((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(produced == golden);
}

TEST_CASE("zeta CSV layout", "[io]") {
    std::vector<ZetaCsvRow> rows{{Complex(1.5, 0), Complex(-0.25, 0.125), 1e-12}};
    std::string csv = zeta_csv(rows);
    CHECK(csv.find("s_re,s_im,log_R_re,log_R_im,tail_bound\n") == 0);
    CHECK(csv.find("1.5,0,-0.25,0.125,") != std::string::npos);
}

TEST_CASE("suite runner", "[suite]") {
    SECTION("a single fast check runs and passes") {
        SuiteReport rep = run_suite({"exponent-identity"}, {1});
        REQUIRE(rep.checks.size() == 1);
        CHECK(rep.checks[0].pass);
        CHECK(rep.all_pass());
        std::string csv = suite_csv(rep);
        CHECK(csv.find("exponent-identity,1,PASS,") != std::string::npos);
    }
    SECTION("an empty name list runs the whole registry in order") {
        // just the name resolution; the full run lives in the acceptance binary
        std::vector<std::string> names;
        for (const auto& e : suite_registry()) names.push_back(e.name);
        CHECK(names.front() == "det-theta-vs-plain");
        CHECK(names.back() == "c-sigma-exterior-power");
    }
    SECTION("unknown names are rejected") {
        CHECK_THROWS_AS(run_suite({"no-such-check"}, {1}), Error);
    }
    SECTION("the registry carries all thirteen criteria") {
        CHECK(suite_registry().size() == 13);
    }
}
