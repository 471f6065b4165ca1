#pragma once

#include "cosserat/tensor.hpp"

namespace cosserat {

/// Strain, continuum rotation, and curvature derived from displacement
/// gradients. Curvature is the transpose of the rotation gradient and is
/// trace-free by construction.
struct KinematicState {
    Mat3 strain = Mat3::Zero();     // symmetric
    Vec3 rotation = Vec3::Zero();
    Mat3 curvature = Mat3::Zero();  // trace-free
};

/// Stress decomposition: total = symmetric + antisymmetric part, with the
/// couple-stress deviator alongside.
struct StressState {
    Mat3 symmetric_stress = Mat3::Zero();
    Mat3 couple_stress = Mat3::Zero();       // deviatoric
    Mat3 antisymmetric_stress = Mat3::Zero();
    Mat3 total_stress = Mat3::Zero();
};

/// Builds the kinematic fields from the displacement gradient G(p,q) = u_q,p
/// and the per-component Hessians H[k](p,m) = u_k,pm.
inline KinematicState kinematics(const Mat3& grad_u, const std::array<Mat3, 3>& hess_u) {
    double scale = std::max(1.0, grad_u.cwiseAbs().maxCoeff());
    for (const Mat3& h : hess_u) {
        scale = std::max(scale, h.cwiseAbs().maxCoeff());
        if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
            throw std::invalid_argument("second gradient must be symmetric in its derivative indices");
    }

    KinematicState st;
    st.strain = 0.5 * (grad_u + grad_u.transpose());
    for (int q = 0; q < 3; ++q) {
        double w = 0.0;
        for (int p = 0; p < 3; ++p)
            for (int k = 0; k < 3; ++k) w += levi_civita(q, p, k) * grad_u(p, k);
        st.rotation[q] = 0.5 * w;
    }
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) {
            double kq = 0.0;
            for (int m = 0; m < 3; ++m)
                for (int k = 0; k < 3; ++k) kq += levi_civita(q, m, k) * hess_u[static_cast<std::size_t>(k)](m, p);
            st.curvature(p, q) = 0.5 * kq;
        }
    return st;
}

/// Evaluates the constitutive maps plus the moment-balance closure for the
/// antisymmetric stress: alpha_pq = -1/2 e_pqk (div_m_k + Y_k), where div_m
/// is the couple-stress divergence vector m_rk,r.
inline StressState constitutive(const CauchyTensor& c, const CosseratTensor& b,
                                const KinematicState& state, const Vec3& div_m,
                                const Vec3& body_moment) {
    StressState out;
    out.symmetric_stress = c.stress(state.strain);
    out.couple_stress = b.couple_stress(state.curvature);
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) {
            double a = 0.0;
            for (int k = 0; k < 3; ++k)
                a += levi_civita(p, q, k) * (div_m[k] + body_moment[k]);
            out.antisymmetric_stress(p, q) = -0.5 * a;
        }
    out.total_stress = out.symmetric_stress + out.antisymmetric_stress;
    return out;
}

}  // namespace cosserat
