#pragma once
// Determinant lines of graded complexes: fusion isomorphisms, the cohomology
// isomorphism phi with its sign N(C*), the chirality element c_Gamma with sign
// R(C*), and the refined torsion rho_Gamma = phi(c_Gamma).
//
// Elements of a determinant line are stored as one scalar coordinate against a
// declared reference: the wedge of standard unit vectors of each graded piece,
// in degree order, dualized at odd degrees. For cohomology the reference is
// the wedge of a deterministically computed orthonormal "harmonic" basis
// ker(d_j) cap (im d_{j-1})^perp, which depends only on the complex, never on
// a splitting choice.

#include <string>
#include <vector>

#include "torsionlab/graded_complex.hpp"
#include "torsionlab/linalg.hpp"

namespace torsionlab {

struct SpaceTag {
    std::string name;
    int dim = 0;
    bool dual = false;
};

struct DetLineElement {
    Complex coeff{1.0, 0.0};
    std::vector<SpaceTag> factors;

    static DetLineElement scalar(Complex c) { return {c, {}}; }
};

inline DetLineElement dual(const DetLineElement& e) {
    DetLineElement out;
    if (e.coeff == Complex(0.0, 0.0)) throw Error("dual: zero determinant-line element");
    out.coeff = Complex(1.0, 0.0) / e.coeff;
    out.factors = e.factors;
    for (auto& f : out.factors) f.dual = !f.dual;
    return out;
}

// Fusion mu: det(V) x det(W) -> det(V + W); coordinates multiply under
// concatenation of reference bases.
inline DetLineElement fuse(const DetLineElement& a, const DetLineElement& b) {
    for (const auto& fa : a.factors)
        for (const auto& fb : b.factors)
            if (fa.name == fb.name)
                throw Error("fuse: factor '" + fa.name + "' appears on both sides");
    DetLineElement out;
    out.coeff = a.coeff * b.coeff;
    out.factors = a.factors;
    out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
    return out;
}

// Sign picked up when the block order `from` is rearranged into `to`:
// each transposition of adjacent blocks (V, W) contributes (-1)^{dim V dim W}.
inline int block_reorder_sign(std::vector<SpaceTag> from, const std::vector<SpaceTag>& to) {
    if (from.size() != to.size()) throw Error("block_reorder_sign: factor count mismatch");
    int sign = 1;
    for (size_t i = 0; i < to.size(); ++i) {
        size_t j = i;
        while (j < from.size() && from[j].name != to[i].name) ++j;
        if (j == from.size()) throw Error("block_reorder_sign: factor '" + to[i].name + "' missing");
        while (j > i) {
            if ((from[j].dim % 2) && (from[j - 1].dim % 2)) sign = -sign;
            std::swap(from[j], from[j - 1]);
            --j;
        }
    }
    return sign;
}

// The same element expressed against the reference with blocks in `order`.
inline DetLineElement reorder(const DetLineElement& e, const std::vector<std::string>& order) {
    std::vector<SpaceTag> target;
    for (const auto& name : order) {
        bool found = false;
        for (const auto& f : e.factors)
            if (f.name == name) {
                target.push_back(f);
                found = true;
            }
        if (!found) throw Error("reorder: factor '" + name + "' missing");
    }
    DetLineElement out;
    out.coeff = e.coeff * static_cast<double>(block_reorder_sign(e.factors, target));
    out.factors = target;
    return out;
}

// ---------------------------------------------------------------------------
// Splittings C^j = B^j + H^j + A^j with B^j + H^j = ker(d) and B^j = d(A^{j-1}).

struct SplitChoice {
    std::vector<CMatrix> b;  // basis of B^j (columns), j = 0..d
    std::vector<CMatrix> h;  // basis of H^j
    std::vector<CMatrix> a;  // basis of A^j
};

inline double det_scale_tol(const CMatrix& w) { return 1e-10 * std::max(1.0, operator_norm(w)); }

// Deterministic orthonormal splitting: B = im d_{j-1}, H = ker d_j cap B^perp,
// A = (ker d_j)^perp.
inline SplitChoice default_split(const GradedComplex& c, double rel_tol = kRankRelTol) {
    const int d = c.gd.d;
    SplitChoice s;
    s.b.resize(static_cast<size_t>(d) + 1);
    s.h.resize(static_cast<size_t>(d) + 1);
    s.a.resize(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        const CMatrix dj = c.partial_at(j);
        const CMatrix djm1 = c.partial_at(j - 1);
        CMatrix image = column_space(djm1, rel_tol);
        CMatrix ker = kernel_space(dj, rel_tol);
        const int hdim = static_cast<int>(ker.cols() - image.cols());
        if (hdim < 0) throw Error("default_split: rank data is inconsistent (d^2 != 0?)");
        CMatrix proj_out = ker - image * (image.adjoint() * ker);
        s.b[static_cast<size_t>(j)] = image;
        s.h[static_cast<size_t>(j)] = column_space_k(proj_out, hdim);
        s.a[static_cast<size_t>(j)] = orthogonal_complement(ker);
    }
    return s;
}

inline void validate_split(const GradedComplex& c, const SplitChoice& s, double tol = 1e-8) {
    const int d = c.gd.d;
    if (s.b.size() != static_cast<size_t>(d + 1) || s.h.size() != s.b.size() || s.a.size() != s.b.size())
        throw Error("split: expected d+1 blocks per part");
    if (s.a[static_cast<size_t>(d)].cols() != 0) throw Error("split: A^d must be zero");
    for (int j = 0; j <= d; ++j) {
        const CMatrix& bj = s.b[static_cast<size_t>(j)];
        const CMatrix& hj = s.h[static_cast<size_t>(j)];
        const CMatrix& aj = s.a[static_cast<size_t>(j)];
        const int n = c.dim(j);
        if (bj.rows() != n || hj.rows() != n || aj.rows() != n)
            throw Error("split: block height mismatch at degree " + std::to_string(j));
        if (bj.cols() + hj.cols() + aj.cols() != n)
            throw Error("split: block widths do not sum to dim C^" + std::to_string(j));
        const CMatrix dj = c.partial_at(j);
        double dn = 1.0 + dj.norm();
        if (bj.cols() > 0 && (dj * bj).norm() > tol * dn * (1.0 + bj.norm()))
            throw Error("split: B^" + std::to_string(j) + " is not contained in ker(d)");
        if (hj.cols() > 0 && (dj * hj).norm() > tol * dn * (1.0 + hj.norm()))
            throw Error("split: H^" + std::to_string(j) + " is not contained in ker(d)");
        // B^j must equal d(A^{j-1})
        const CMatrix im = c.partial_at(j - 1) * (j > 0 ? s.a[static_cast<size_t>(j - 1)] : czeros(c.dim(j - 1), 0));
        if (im.cols() != bj.cols()) throw Error("split: dim B^" + std::to_string(j) + " != dim A^" + std::to_string(j - 1));
        if (bj.cols() > 0) {
            CMatrix q = column_space(bj);
            if (containment_residual(q, im) > tol)
                throw Error("split: B^" + std::to_string(j) + " does not match d(A^" + std::to_string(j - 1) + ")");
        }
        CMatrix w(n, n);
        if (n > 0) {
            w << im, hj, aj;
            if (svd_rank(w, 1e-8) < n)
                throw Error("split: blocks do not span C^" + std::to_string(j));
        }
    }
}

// Exact integer sign exponents; only parity matters.
inline long phi_sign_exponent(const std::vector<int>& a_dims) {
    long n = 0;
    for (size_t j = 0; j < a_dims.size(); ++j) {
        long aj = a_dims[j];
        n += (j % 2 == 0) ? aj * (aj - 1) / 2 : aj * (aj + 1) / 2;
    }
    return n;
}

inline long c_gamma_sign_exponent(const GradedComplex& c) {
    const int r = c.half();
    long acc = 0;
    for (int j = 0; j < r; ++j) {
        long nj = c.dim(j);
        int eps = ((r + j) % 2 == 0) ? 1 : -1;
        acc += nj * (nj + eps) / 2;
    }
    return acc;
}

namespace detail {

inline Complex safe_det(const CMatrix& m) {
    if (m.rows() != m.cols()) throw Error("safe_det: square matrix expected");
    if (m.rows() == 0) return Complex(1.0, 0.0);
    return m.determinant();
}

// Orthonormal reference basis of the cohomology at degree j (harmonic model).
inline CMatrix harmonic_basis(const GradedComplex& c, int j, double rel_tol = kRankRelTol) {
    CMatrix image = column_space(c.partial_at(j - 1), rel_tol);
    CMatrix ker = kernel_space(c.partial_at(j), rel_tol);
    const int hdim = static_cast<int>(ker.cols() - image.cols());
    if (hdim <= 0) return czeros(c.dim(j), 0);
    CMatrix proj_out = ker - image * (image.adjoint() * ker);
    return column_space_k(proj_out, hdim);
}

}  // namespace detail

inline std::vector<SpaceTag> det_c_tags(const GradedComplex& c) {
    std::vector<SpaceTag> tags;
    for (int j = 0; j <= c.gd.d; ++j)
        tags.push_back({"C" + std::to_string(j), c.dim(j), j % 2 == 1});
    return tags;
}

inline std::vector<SpaceTag> det_h_tags(const GradedComplex& c) {
    auto betti = betti_numbers(c);
    std::vector<SpaceTag> tags;
    for (int j = 0; j <= c.gd.d; ++j)
        tags.push_back({"H" + std::to_string(j), betti[static_cast<size_t>(j)], j % 2 == 1});
    return tags;
}

// The scalar by which phi multiplies coordinates: the image of the canonical
// generator of det(C*) has coordinate phi_ratio against the det(H*) reference.
inline Complex phi_ratio(const GradedComplex& c, const SplitChoice& s) {
    validate_split(c, s);
    const int d = c.gd.d;
    std::vector<int> a_dims;
    Complex acc(1.0, 0.0);
    for (int j = 0; j <= d; ++j) {
        const int n = c.dim(j);
        const CMatrix& hj = s.h[static_cast<size_t>(j)];
        const CMatrix& aj = s.a[static_cast<size_t>(j)];
        a_dims.push_back(static_cast<int>(aj.cols()));
        const CMatrix im = c.partial_at(j - 1) * (j > 0 ? s.a[static_cast<size_t>(j - 1)] : czeros(c.dim(j - 1), 0));
        CMatrix w(n, n);
        Complex det_w(1.0, 0.0);
        if (n > 0) {
            w << im, hj, aj;
            det_w = detail::safe_det(w);
            if (std::abs(det_w) <= det_scale_tol(w)) throw Error("phi: splitting matrix is singular");
        }
        Complex det_m(1.0, 0.0);
        if (hj.cols() > 0) {
            CMatrix image = column_space(c.partial_at(j - 1));
            CMatrix q = detail::harmonic_basis(c, j);
            CMatrix rep = hj - image * (image.adjoint() * hj);
            det_m = detail::safe_det(q.adjoint() * rep);
        }
        const Complex factor = det_m / det_w;
        acc *= (j % 2 == 0) ? factor : Complex(1.0, 0.0) / factor;
    }
    const double sign = (phi_sign_exponent(a_dims) % 2 == 0) ? 1.0 : -1.0;
    return sign * acc;
}

inline DetLineElement phi_apply(const GradedComplex& c, const SplitChoice& s, const DetLineElement& on_det_c) {
    DetLineElement out;
    out.coeff = on_det_c.coeff * phi_ratio(c, s);
    out.factors = det_h_tags(c);
    return out;
}

// Image of the canonical generator of det(C*).
inline DetLineElement phi_image(const GradedComplex& c, const SplitChoice& s) {
    DetLineElement gen;
    gen.coeff = Complex(1.0, 0.0);
    gen.factors = det_c_tags(c);
    return phi_apply(c, s, gen);
}

// c_Gamma as an element of det(C*); independent of the choice of the c_j.
inline DetLineElement c_gamma(const GradedComplex& c) {
    const int d = c.gd.d;
    const int r = c.half();
    for (int j = 0; j <= d; ++j)
        if (c.dim(j) != c.dim(d - j))
            throw Error("c_gamma: chirality requires palindromic dimensions");
    Complex acc(1.0, 0.0);
    for (int j = 0; j < r; ++j) {
        const CMatrix& g = c.gamma_at(j);
        Complex det_g = detail::safe_det(g);
        if (std::abs(det_g) <= det_scale_tol(g)) throw Error("c_gamma: singular chirality block");
        acc *= (j % 2 == 0) ? Complex(1.0, 0.0) / det_g : det_g;  // exponent (-1)^{j+1}
    }
    const double sign = (c_gamma_sign_exponent(c) % 2 == 0) ? 1.0 : -1.0;
    DetLineElement out;
    out.coeff = sign * acc;
    out.factors = det_c_tags(c);
    return out;
}

// rho_Gamma = phi(c_Gamma). For acyclic complexes this is a nonzero scalar.
inline DetLineElement refined_torsion(const GradedComplex& c, const SplitChoice& s) {
    return phi_apply(c, s, c_gamma(c));
}

inline DetLineElement refined_torsion(const GradedComplex& c) {
    return refined_torsion(c, default_split(c));
}

}  // namespace torsionlab
