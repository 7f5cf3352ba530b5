#pragma once
// JSON schemas for complexes, length spectra and model spectra, plus CSV
// emission. Complex numbers are always [re, im] pairs and matrices nested
// arrays of such pairs. Schema violations throw SchemaError naming the
// offending path, e.g. "$.classes[3].chi[0][1]: expected [re, im]".

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "torsionlab/fixtures.hpp"
#include "torsionlab/graded_complex.hpp"
#include "torsionlab/zeta.hpp"

namespace torsionlab {

using Json = nlohmann::json;

inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string fmt_complex(Complex z) { return fmt17(z.real()) + " " + (z.imag() < 0 ? "- " : "+ ") + fmt17(std::abs(z.imag())) + "i"; }

namespace jio {

inline const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path + "." + key + ": missing");
    return *it;
}

inline double number(const Json& j, const std::string& path) {
    if (!j.is_number()) throw SchemaError(path + ": expected a number");
    return j.get<double>();
}

inline long long integer(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw SchemaError(path + ": expected an integer");
    return j.get<long long>();
}

inline const Json& array(const Json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path + ": expected an array");
    return j;
}

inline Complex complex_pair(const Json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw SchemaError(path + ": expected [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

inline Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline CMatrix matrix(const Json& j, const std::string& path) {
    array(j, path);
    const size_t rows = j.size();
    size_t cols = 0;
    if (rows > 0) {
        array(j[0], path + "[0]");
        cols = j[0].size();
    }
    CMatrix m = czeros(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (size_t r = 0; r < rows; ++r) {
        const std::string rp = path + "[" + std::to_string(r) + "]";
        array(j[r], rp);
        if (j[r].size() != cols) throw SchemaError(rp + ": ragged matrix row");
        for (size_t c = 0; c < cols; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                complex_pair(j[r][c], rp + "[" + std::to_string(c) + "]");
    }
    return m;
}

inline Json matrix_to_json(const CMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace jio

// ---------------------------------------------------------------------------
// GradedComplex <-> JSON

inline Json to_json(const GradedComplex& c) {
    Json j;
    j["d"] = c.gd.d;
    j["dims"] = c.gd.dims;
    Json partial = Json::array(), gamma = Json::array();
    for (const auto& p : c.partial) partial.push_back(jio::matrix_to_json(p));
    for (const auto& g : c.gamma) gamma.push_back(jio::matrix_to_json(g));
    j["partial"] = std::move(partial);
    j["gamma"] = std::move(gamma);
    return j;
}

inline GradedComplex complex_from_json(const Json& j, const std::string& path = "$") {
    GradedComplex c;
    c.gd.d = static_cast<int>(jio::integer(jio::field(j, "d", path), path + ".d"));
    const Json& dims = jio::array(jio::field(j, "dims", path), path + ".dims");
    for (size_t i = 0; i < dims.size(); ++i)
        c.gd.dims.push_back(static_cast<int>(jio::integer(dims[i], path + ".dims[" + std::to_string(i) + "]")));
    const Json& partial = jio::array(jio::field(j, "partial", path), path + ".partial");
    for (size_t i = 0; i < partial.size(); ++i)
        c.partial.push_back(jio::matrix(partial[i], path + ".partial[" + std::to_string(i) + "]"));
    const Json& gamma = jio::array(jio::field(j, "gamma", path), path + ".gamma");
    for (size_t i = 0; i < gamma.size(); ++i)
        c.gamma.push_back(jio::matrix(gamma[i], path + ".gamma[" + std::to_string(i) + "]"));
    try {
        check_well_formed(c);
    } catch (const Error& e) {
        throw SchemaError(path + ": " + e.what());
    }
    return c;
}

// ---------------------------------------------------------------------------
// LengthSpectrum <-> JSON

inline Json to_json(const LengthSpectrum& s) {
    Json j;
    j["d"] = s.d;
    j["growth_abscissa"] = s.growth_abscissa;
    Json classes = Json::array();
    for (const auto& pc : s.classes) {
        Json cj;
        cj["length"] = pc.length;
        cj["holonomy_angles"] = pc.holonomy_angles;
        cj["chi"] = jio::matrix_to_json(pc.chi);
        Json eigs = Json::array();
        for (const auto& z : pc.sigma_m_eigs) eigs.push_back(jio::complex_to_json(z));
        cj["sigma_m_eigs"] = std::move(eigs);
        classes.push_back(std::move(cj));
    }
    j["classes"] = std::move(classes);
    return j;
}

inline LengthSpectrum spectrum_from_json(const Json& j, const std::string& path = "$") {
    LengthSpectrum s;
    s.d = static_cast<int>(jio::integer(jio::field(j, "d", path), path + ".d"));
    s.growth_abscissa = jio::number(jio::field(j, "growth_abscissa", path), path + ".growth_abscissa");
    const Json& classes = jio::array(jio::field(j, "classes", path), path + ".classes");
    for (size_t i = 0; i < classes.size(); ++i) {
        const std::string cp = path + ".classes[" + std::to_string(i) + "]";
        const Json& cj = classes[i];
        PrimitiveClass pc;
        pc.length = jio::number(jio::field(cj, "length", cp), cp + ".length");
        const Json& angles = jio::array(jio::field(cj, "holonomy_angles", cp), cp + ".holonomy_angles");
        for (size_t a = 0; a < angles.size(); ++a)
            pc.holonomy_angles.push_back(jio::number(angles[a], cp + ".holonomy_angles[" + std::to_string(a) + "]"));
        pc.chi = jio::matrix(jio::field(cj, "chi", cp), cp + ".chi");
        const Json& eigs = jio::array(jio::field(cj, "sigma_m_eigs", cp), cp + ".sigma_m_eigs");
        for (size_t a = 0; a < eigs.size(); ++a)
            pc.sigma_m_eigs.push_back(jio::complex_pair(eigs[a], cp + ".sigma_m_eigs[" + std::to_string(a) + "]"));
        s.classes.push_back(std::move(pc));
    }
    try {
        validate(s);
    } catch (const Error& e) {
        throw SchemaError(std::string(e.what()));
    }
    return s;
}

// ---------------------------------------------------------------------------
// ModelSpectralData <-> JSON

inline Json to_json(const ModelSpectralData& m) {
    Json j;
    j["d"] = m.d;
    Json lists = Json::array();
    for (const auto& degree : m.eigenvalues) {
        Json l = Json::array();
        for (const auto& mu : degree) l.push_back(jio::complex_to_json(mu));
        lists.push_back(std::move(l));
    }
    j["eigenvalues"] = std::move(lists);
    j["dim_V_chi"] = m.dim_v_chi;
    j["vol_ratio"] = m.vol_ratio;
    j["d_chi"] = m.d_chi;
    return j;
}

inline ModelSpectralData model_from_json(const Json& j, const std::string& path = "$") {
    ModelSpectralData m;
    m.d = static_cast<int>(jio::integer(jio::field(j, "d", path), path + ".d"));
    const Json& lists = jio::array(jio::field(j, "eigenvalues", path), path + ".eigenvalues");
    for (size_t k = 0; k < lists.size(); ++k) {
        const std::string lp = path + ".eigenvalues[" + std::to_string(k) + "]";
        jio::array(lists[k], lp);
        std::vector<Complex> degree;
        for (size_t i = 0; i < lists[k].size(); ++i)
            degree.push_back(jio::complex_pair(lists[k][i], lp + "[" + std::to_string(i) + "]"));
        m.eigenvalues.push_back(std::move(degree));
    }
    m.dim_v_chi = static_cast<int>(jio::integer(jio::field(j, "dim_V_chi", path), path + ".dim_V_chi"));
    if (j.contains("vol_ratio")) {
        m.vol_ratio = jio::number(j["vol_ratio"], path + ".vol_ratio");
    } else if (j.contains("vol_x")) {
        // absolute volume supplied instead of the ratio to the unit sphere
        m.vol_ratio = jio::number(j["vol_x"], path + ".vol_x") / sphere_volume(m.d);
    } else {
        throw SchemaError(path + ".vol_ratio: missing (supply vol_ratio or vol_x)");
    }
    if (j.contains("d_chi")) {
        const Json& dchi = jio::array(j["d_chi"], path + ".d_chi");
        for (size_t i = 0; i < dchi.size(); ++i)
            m.d_chi.push_back(static_cast<int>(jio::integer(dchi[i], path + ".d_chi[" + std::to_string(i) + "]")));
    }
    try {
        validate(m);
    } catch (const Error& e) {
        throw SchemaError(std::string(e.what()));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Files and CSV.

inline Json load_json(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw SchemaError(file + ": cannot open");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SchemaError(file + ": " + e.what());
    }
    return j;
}

inline void save_json(const std::string& file, const Json& j) {
    std::ofstream out(file);
    if (!out) throw Error(file + ": cannot write");
    out << j.dump(2) << "\n";
}

struct ZetaCsvRow {
    Complex s;
    Complex log_r;
    double tail_bound;
};

inline std::string zeta_csv(const std::vector<ZetaCsvRow>& rows) {
    std::ostringstream out;
    out << "s_re,s_im,log_R_re,log_R_im,tail_bound\n";
    for (const auto& r : rows)
        out << fmt17(r.s.real()) << "," << fmt17(r.s.imag()) << "," << fmt17(r.log_r.real()) << ","
            << fmt17(r.log_r.imag()) << "," << fmt17(r.tail_bound) << "\n";
    return out.str();
}

inline void write_text(const std::string& file, const std::string& text) {
    std::ofstream out(file);
    if (!out) throw Error(file + ": cannot write");
    out << text;
}

}  // namespace torsionlab
