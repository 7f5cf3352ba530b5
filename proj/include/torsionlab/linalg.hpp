#pragma once
// Dense complex linear algebra helpers shared across the library:
// rank-revealing factorizations, kernels/images, orthonormal complements.
// Everything here is tolerance-driven; the default rank cutoff is
// 1e-10 times the largest singular value.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace torsionlab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kRankRelTol = 1e-10;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent external input (files, CLI arguments).
struct SchemaError : Error {
    using Error::Error;
};

inline const double kPi = 3.14159265358979323846;

inline CMatrix czeros(Eigen::Index rows, Eigen::Index cols) {
    return CMatrix::Zero(rows, cols);
}

// Largest singular value; 0 for empty matrices.
inline double operator_norm(const CMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(a);
    return svd.singularValues()(0);
}

inline double smallest_singular_value(const CMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    if (a.rows() != a.cols()) throw Error("smallest_singular_value: square matrix expected");
    Eigen::JacobiSVD<CMatrix> svd(a);
    return svd.singularValues()(svd.singularValues().size() - 1);
}

inline int svd_rank(const CMatrix& a, double rel_tol = kRankRelTol) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    Eigen::JacobiSVD<CMatrix> svd(a);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    const double cut = rel_tol * sv(0);
    int r = 0;
    while (r < sv.size() && sv(r) > cut) ++r;
    return r;
}

// Orthonormal basis of the column space.
inline CMatrix column_space(const CMatrix& a, double rel_tol = kRankRelTol) {
    if (a.rows() == 0 || a.cols() == 0) return czeros(a.rows(), 0);
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return czeros(a.rows(), 0);
    const double cut = rel_tol * sv(0);
    int r = 0;
    while (r < sv.size() && sv(r) > cut) ++r;
    return svd.matrixU().leftCols(r);
}

// Exactly k leading left singular vectors; the caller supplies the dimension.
inline CMatrix column_space_k(const CMatrix& a, int k) {
    if (k == 0 || a.rows() == 0) return czeros(a.rows(), k == 0 ? 0 : k);
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinU);
    if (svd.matrixU().cols() < k) throw Error("column_space_k: requested dimension exceeds the factor width");
    return svd.matrixU().leftCols(k);
}

// Orthonormal basis of the (right) kernel. A 0-row matrix has full kernel.
inline CMatrix kernel_space(const CMatrix& a, double rel_tol = kRankRelTol) {
    const Eigen::Index n = a.cols();
    if (n == 0) return czeros(0, 0);
    if (a.rows() == 0) return CMatrix::Identity(n, n);
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double top = sv.size() > 0 ? sv(0) : 0.0;
    const double cut = rel_tol * top;
    int r = 0;
    while (r < sv.size() && sv(r) > cut) ++r;
    return svd.matrixV().rightCols(n - r);
}

// Orthonormal basis of the orthogonal complement of span(sub) inside C^n,
// with n = sub.rows().
inline CMatrix orthogonal_complement(const CMatrix& sub) {
    const Eigen::Index n = sub.rows();
    if (sub.cols() == 0) return CMatrix::Identity(n, n);
    return kernel_space(sub.adjoint());
}

// Coordinates of the columns of `vectors` in the orthonormal basis `basis`,
// i.e. the least-squares solution basis * X ~ vectors. The caller checks the
// residual where exact containment matters.
inline CMatrix coords_in_basis(const CMatrix& basis, const CMatrix& vectors) {
    return basis.adjoint() * vectors;
}

inline double containment_residual(const CMatrix& basis, const CMatrix& vectors) {
    if (vectors.cols() == 0) return 0.0;
    CMatrix recon = basis * (basis.adjoint() * vectors);
    return (vectors - recon).norm() / (1.0 + vectors.norm());
}

inline Complex ipow(Complex base, long e) {
    if (e == 0) return Complex(1.0, 0.0);
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Complex acc(1.0, 0.0), b = base;
    while (k) {
        if (k & 1u) acc *= b;
        b *= b;
        k >>= 1u;
    }
    return inv ? Complex(1.0, 0.0) / acc : acc;
}

inline double relative_diff(Complex a, Complex b) {
    return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

inline double relative_diff(double a, double b) {
    return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace torsionlab
