#pragma once

#include "cosserat/acoustic.hpp"

namespace cosserat {

namespace detail {

inline void require_tangential(const Vec3& n, const Vec3& kappa_t) {
    double err = std::abs(n.dot(kappa_t));
    if (err > 1e-12 * std::max(1.0, kappa_t.norm()))
        throw precondition_error("surface wavevector must be tangential", err);
}

}  // namespace detail

/// Surface gradient operators of the traction-continuity system for a planar
/// surface with normal n, under a single tangential Fourier mode: surface
/// derivatives act as multiplication by i kappa_t. All three have their rows
/// along n annihilated, and h1/h2 are homogeneous of degree 1/2 in kappa_t.
struct SurfaceOperators {
    CMat3 h1 = CMat3::Zero();
    CMat3 h1_tilde = CMat3::Zero();
    CMat3 h2 = CMat3::Zero();
};

inline SurfaceOperators surface_operators(const CosseratTensor& b, const Vec3& n,
                                          const Vec3& kappa_t) {
    detail::require_unit(n);
    detail::require_tangential(n, kappa_t);
    const Tensor4& t = b.components();
    CVec3 d;
    for (int a = 0; a < 3; ++a) d[a] = Complex(0.0, kappa_t[a]);

    SurfaceOperators ops;
    for (int q = 0; q < 3; ++q)
        for (int j = 0; j < 3; ++j) {
            Complex h1(0), h1t_extra(0), h2(0);
            for (int p = 0; p < 3; ++p)
                for (int k = 0; k < 3; ++k) {
                    int e1 = levi_civita(p, q, k);
                    if (e1 == 0) continue;
                    for (int s = 0; s < 3; ++s)
                        for (int m = 0; m < 3; ++m) {
                            int e2 = levi_civita(s, m, j);
                            if (e2 == 0) continue;
                            double ee = static_cast<double>(e1 * e2) * n[p];
                            for (int tt = 0; tt < 3; ++tt) {
                                // first-slot contractions for fixed (k, t, s)
                                double bn = 0.0;     // n_r B_rkts
                                double bnn = 0.0;    // n_r n_l B_rlts
                                Complex bd(0);       // B_rkts d_r
                                Complex quad2(0);    // B_rkts (n_t d_r d_m + n_r d_m d_t + n_m d_t d_r)
                                for (int r = 0; r < 3; ++r) {
                                    double brkts = t(r, k, tt, s);
                                    bn += n[r] * brkts;
                                    bd += brkts * d[r];
                                    quad2 += brkts * (n[tt] * d[r] * d[m] + n[r] * d[m] * d[tt] +
                                                      n[m] * d[tt] * d[r]);
                                    for (int l = 0; l < 3; ++l) bnn += n[r] * n[l] * t(r, l, tt, s);
                                }
                                h1 += ee * bn * (n[tt] * d[m] + n[m] * d[tt]);
                                h1t_extra += ee * n[tt] * n[m] * (bd - bnn * d[k]);
                                h2 += ee * (bnn * (n[tt] * d[k] * d[m] + n[m] * d[tt] * d[k]) - quad2);
                            }
                        }
                }
            ops.h1(q, j) = 0.25 * h1;
            ops.h1_tilde(q, j) = 0.25 * h1t_extra;
            ops.h2(q, j) = 0.25 * h2;
        }
    ops.h1_tilde += ops.h1;
    return ops;
}

/// Normal/tangential split of a discontinuity vector relative to n.
struct JumpDecomposition {
    Vec3 normal = Vec3::Zero();
    Vec3 tangential = Vec3::Zero();
};

inline JumpDecomposition decompose_jump(const Vec3& g, const Vec3& n) {
    detail::require_unit(n);
    JumpDecomposition d;
    d.normal = g.dot(n) * n;
    d.tangential = g - d.normal;
    return d;
}

/// Residuals of the two identities obeyed by the normal part of any jump
/// vector: the couple-stress acoustic tensor annihilates it, and the mixed
/// surface operator reproduces minus the acoustic tensor acting on the
/// surface gradient of its normal amplitude.
struct JumpIdentityResiduals {
    double annihilation = 0.0;
    double mixed_operator = 0.0;
};

inline JumpIdentityResiduals normal_jump_identities(const CosseratTensor& b, const Vec3& n,
                                                    const Vec3& kappa_t, const Vec3& g) {
    SurfaceOperators ops = surface_operators(b, n, kappa_t);
    Mat3 a_b = acoustic_cosserat(b, n);
    Vec3 g_perp = decompose_jump(g, n).normal;
    CVec3 d;
    for (int a = 0; a < 3; ++a) d[a] = Complex(0.0, kappa_t[a]);

    JumpIdentityResiduals r;
    r.annihilation = (a_b * g_perp).norm();
    CVec3 lhs = ops.h1_tilde * g_perp.cast<Complex>();
    CVec3 rhs = -(a_b.cast<Complex>() * d) * g.dot(n);
    r.mixed_operator = (lhs - rhs).norm();
    return r;
}

/// The coupled traction-continuity system across a planar surface, over the
/// three discontinuity vectors of increasing normal-derivative order. Always
/// underdetermined: at most five effective equations for nine unknowns.
struct DiscontinuitySystem {
    Vec3 n = Vec3::UnitZ();
    Vec3 kappa_t = Vec3::Zero();
    Mat3 a_c = Mat3::Zero();
    Mat3 a_b = Mat3::Zero();
    SurfaceOperators ops;
    Eigen::Matrix<Complex, 6, 9> matrix = Eigen::Matrix<Complex, 6, 9>::Zero();
    Eigen::Matrix<double, 6, 1> singular_values = Eigen::Matrix<double, 6, 1>::Zero();
    int effective_rank = 0;
    bool underdetermined = true;
};

inline DiscontinuitySystem assemble_full_system(const CauchyTensor& c, const CosseratTensor& b,
                                                const Vec3& n, const Vec3& kappa_t) {
    DiscontinuitySystem sys;
    sys.n = n;
    sys.kappa_t = kappa_t;
    sys.a_c = acoustic_cauchy(c, n);
    sys.a_b = acoustic_cosserat(b, n);
    sys.ops = surface_operators(b, n, kappa_t);

    sys.matrix.block<3, 3>(0, 0) = (sys.a_c.cast<Complex>() + sys.ops.h2);
    sys.matrix.block<3, 3>(0, 3) = -sys.ops.h1_tilde;
    sys.matrix.block<3, 3>(0, 6) = -sys.a_b.cast<Complex>();
    sys.matrix.block<3, 3>(3, 0) = sys.ops.h1;
    sys.matrix.block<3, 3>(3, 3) = sys.a_b.cast<Complex>();

    Eigen::JacobiSVD<Eigen::Matrix<Complex, 6, 9>> svd(sys.matrix);
    sys.singular_values = svd.singularValues();
    double thresh = 1e-10 * std::max(sys.singular_values(0), 1e-300);
    sys.effective_rank = 0;
    for (int i = 0; i < sys.singular_values.size(); ++i)
        if (sys.singular_values(i) > thresh) ++sys.effective_rank;
    sys.underdetermined = sys.effective_rank < 9;
    return sys;
}

/// The square system that appears when ellipticity fails at n: five
/// equations for (g1_1, g1_2, g1_3, g2_along_null, t3) in the intrinsic
/// frame (x1 = n, x2 = null transverse eigenvector, x3 = the remaining one).
struct ReducedSystem {
    Eigen::Matrix<Complex, 5, 5> matrix = Eigen::Matrix<Complex, 5, 5>::Zero();
    Complex determinant = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    Vec3 frame_x2 = Vec3::Zero();
    Vec3 frame_x3 = Vec3::Zero();
    std::vector<Eigen::Matrix<Complex, 5, 1>> null_space;
};

inline ReducedSystem reduced_system_at_loss(const CauchyTensor& c, const CosseratTensor& b,
                                            const Vec3& n, const Vec3& kappa_t,
                                            double tol_rel = 1e-10) {
    Mat3 a_b = acoustic_cosserat(b, n);
    TangentSpectrum sp = tangent_spectrum(a_b, n);
    double s_b = std::max(b.scale(), 1e-300);
    if (sp.lambda2 / s_b > tol_rel)
        throw precondition_error(
            "material is elliptic at this direction (transverse eigenvalue margin " +
                std::to_string(sp.lambda2 / s_b) + ")",
            sp.lambda2 / s_b);

    Mat3 a_c = acoustic_cauchy(c, n);
    SurfaceOperators ops = surface_operators(b, n, kappa_t);
    std::array<Vec3, 3> e = {n, sp.v2, sp.v3};

    auto framed = [&](const CMat3& mat, int i, int j) {
        return e[static_cast<std::size_t>(i)].cast<Complex>().dot(mat * e[static_cast<std::size_t>(j)].cast<Complex>());
    };
    auto framed_r = [&](const Mat3& mat, int i, int j) {
        return Complex(e[static_cast<std::size_t>(i)].dot(mat * e[static_cast<std::size_t>(j)]));
    };

    ReducedSystem red;
    red.lambda2 = sp.lambda2;
    red.lambda3 = sp.lambda3;
    red.frame_x2 = sp.v2;
    red.frame_x3 = sp.v3;

    CMat3 full = a_c.cast<Complex>() + ops.h2;
    for (int j = 0; j < 3; ++j) {
        red.matrix(0, j) = framed_r(a_c, 0, j);  // surface-normal row: pure classical
        red.matrix(1, j) = framed(full, 1, j);
        red.matrix(2, j) = framed(full, 2, j);
        red.matrix(3, j) = framed(ops.h1, 1, j);
        red.matrix(4, j) = framed(ops.h1, 2, j);
    }
    red.matrix(1, 3) = -framed(ops.h1_tilde, 1, 1);
    red.matrix(2, 3) = -framed(ops.h1_tilde, 2, 1);
    red.matrix(2, 4) = Complex(-sp.lambda3);
    red.determinant = red.matrix.determinant();

    Eigen::JacobiSVD<Eigen::Matrix<Complex, 5, 5>> svd(red.matrix, Eigen::ComputeFullV);
    double thresh = 1e-10 * std::max(svd.singularValues()(0), 1e-300);
    for (int i = 0; i < 5; ++i)
        if (svd.singularValues()(i) <= thresh)
            red.null_space.push_back(svd.matrixV().col(i));
    return red;
}

}  // namespace cosserat
