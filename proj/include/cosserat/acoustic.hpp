#pragma once

#include <optional>

#include "cosserat/tensor.hpp"

namespace cosserat {

namespace detail {

inline void require_unit(const Vec3& n) {
    double err = std::abs(n.norm() - 1.0);
    if (err > 1e-12) throw precondition_error("propagation direction must be a unit vector", err);
}

/// Classical acoustic contraction A_qn = C_pqmn n_p n_m, in scalar type S so
/// high-wavenumber determinant studies can run in extended precision.
template <class S>
void classical_acoustic(const Tensor4& c, const Vec3& n, S a[3][3]) {
    S nv[3] = {S(n[0]), S(n[1]), S(n[2])};
    for (int q = 0; q < 3; ++q)
        for (int j = 0; j < 3; ++j) {
            S acc = S(0);
            for (int p = 0; p < 3; ++p)
                for (int m = 0; m < 3; ++m) acc += S(c(p, q, m, j)) * nv[p] * nv[m];
            a[q][j] = acc;
        }
    // enforce exact symmetry of the assembled matrix
    for (int q = 0; q < 3; ++q)
        for (int j = q + 1; j < 3; ++j) {
            S avg = (a[q][j] + a[j][q]) / S(2);
            a[q][j] = avg;
            a[j][q] = avg;
        }
}

/// Couple-stress acoustic contraction
///   A_qn = 1/4 e_pqk e_smn n_m n_p n_t n_r B_rkts.
template <class S>
void cosserat_acoustic(const Tensor4& b, const Vec3& n, S a[3][3]) {
    S nv[3] = {S(n[0]), S(n[1]), S(n[2])};
    // w_ks = n_r n_t B_rkts; u_qk = e_pqk n_p; a = 1/4 u w u^T-like product.
    S w[3][3];
    for (int k = 0; k < 3; ++k)
        for (int s = 0; s < 3; ++s) {
            S acc = S(0);
            for (int r = 0; r < 3; ++r)
                for (int t = 0; t < 3; ++t) acc += nv[r] * nv[t] * S(b(r, k, t, s));
            w[k][s] = acc;
        }
    S u[3][3];
    for (int q = 0; q < 3; ++q)
        for (int k = 0; k < 3; ++k) {
            S acc = S(0);
            for (int p = 0; p < 3; ++p) acc += S(levi_civita(p, q, k)) * nv[p];
            u[q][k] = acc;
        }
    for (int q = 0; q < 3; ++q)
        for (int j = 0; j < 3; ++j) {
            S acc = S(0);
            for (int k = 0; k < 3; ++k)
                for (int s = 0; s < 3; ++s) acc += u[q][k] * w[k][s] * u[j][s];
            a[q][j] = acc / S(4);
        }
    for (int q = 0; q < 3; ++q)
        for (int j = q + 1; j < 3; ++j) {
            S avg = (a[q][j] + a[j][q]) / S(2);
            a[q][j] = avg;
            a[j][q] = avg;
        }
}

inline Mat3 to_mat3(const double a[3][3]) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = a[i][j];
    return m;
}

}  // namespace detail

/// Classical part of the acoustic tensor at direction n.
inline Mat3 acoustic_cauchy(const CauchyTensor& c, const Vec3& n) {
    detail::require_unit(n);
    double a[3][3];
    detail::classical_acoustic<double>(c.components(), n, a);
    return detail::to_mat3(a);
}

/// Couple-stress part of the acoustic tensor at direction n; annihilates n.
inline Mat3 acoustic_cosserat(const CosseratTensor& b, const Vec3& n) {
    detail::require_unit(n);
    double a[3][3];
    detail::cosserat_acoustic<double>(b.components(), n, a);
    return detail::to_mat3(a);
}

/// Direction-dependent pair composing the acoustic tensor
/// A(k, n) = k^2 A_C(n) + k^4 A_B(n).
struct AcousticPair {
    Vec3 n = Vec3::UnitZ();
    Mat3 a_c = Mat3::Zero();
    Mat3 a_b = Mat3::Zero();
};

inline AcousticPair make_acoustic_pair(const CauchyTensor& c, const CosseratTensor& b,
                                       const Vec3& n) {
    detail::require_unit(n);
    return {n, acoustic_cauchy(c, n), acoustic_cosserat(b, n)};
}

inline Mat3 total_acoustic(const AcousticPair& pair, double k) {
    double k2 = k * k;
    return k2 * pair.a_c + k2 * k2 * pair.a_b;
}

/// One plane-wave branch: squared frequency, unit amplitude, phase velocity.
struct WaveBranch {
    double omega_squared = 0.0;
    Vec3 amplitude = Vec3::UnitZ();
    double phase_velocity = 0.0;  // sqrt(omega^2)/|k| when propagating
    bool propagating = false;     // false when omega^2 <= 0
};

struct WaveSolution {
    Vec3 n = Vec3::UnitZ();
    double wavenumber = 0.0;
    double density = 0.0;
    std::array<WaveBranch, 3> branches;  // descending omega^2
};

namespace detail {

/// Symmetric 3x3 eigensolve: closed-form path with a residual gate, falling
/// back to the iterative solver when the direct result is not accurate.
inline void eigen_sym3(const Mat3& a, Vec3& values, Mat3& vectors) {
    Eigen::SelfAdjointEigenSolver<Mat3> es;
    es.computeDirect(a);
    values = es.eigenvalues();
    vectors = es.eigenvectors();
    double scale = a.cwiseAbs().maxCoeff();
    double res = (a * vectors - vectors * values.asDiagonal()).cwiseAbs().maxCoeff();
    if (res > 1e-11 * std::max(1.0, scale)) {
        es.compute(a);
        values = es.eigenvalues();
        vectors = es.eigenvectors();
    }
}

inline Vec3 canonical_sign(Vec3 v) {
    for (int i = 0; i < 3; ++i) {
        if (std::abs(v[i]) > 1e-14) {
            if (v[i] < 0) v = -v;
            break;
        }
    }
    return v;
}

}  // namespace detail

/// Plane-wave eigenproblem A(k,n) d = rho omega^2 d. Branches are sorted by
/// descending omega^2 with ties broken by lexicographic amplitude order.
inline WaveSolution wave_solve(const CauchyTensor& c, const CosseratTensor& b,
                               double rho, const Vec3& n, double k) {
    if (!(rho > 0.0)) throw precondition_error("density must be positive", rho);
    if (k == 0.0) throw precondition_error("wavenumber must be non-zero", k);
    AcousticPair pair = make_acoustic_pair(c, b, n);
    Mat3 a = total_acoustic(pair, k);

    Vec3 values;
    Mat3 vectors;
    detail::eigen_sym3(a, values, vectors);

    WaveSolution sol;
    sol.n = n;
    sol.wavenumber = k;
    sol.density = rho;
    std::array<int, 3> order = {2, 1, 0};  // eigenvalues come ascending
    std::array<WaveBranch, 3> branches;
    for (int i = 0; i < 3; ++i) {
        WaveBranch br;
        br.omega_squared = values[order[static_cast<std::size_t>(i)]] / rho;
        br.amplitude = detail::canonical_sign(vectors.col(order[static_cast<std::size_t>(i)]));
        br.propagating = br.omega_squared > 0.0;
        br.phase_velocity = br.propagating ? std::sqrt(br.omega_squared) / std::abs(k) : 0.0;
        branches[static_cast<std::size_t>(i)] = br;
    }
    std::stable_sort(branches.begin(), branches.end(), [](const WaveBranch& x, const WaveBranch& y) {
        if (x.omega_squared != y.omega_squared) return x.omega_squared > y.omega_squared;
        return std::lexicographical_compare(y.amplitude.data(), y.amplitude.data() + 3,
                                            x.amplitude.data(), x.amplitude.data() + 3);
    });
    sol.branches = branches;
    return sol;
}

/// Directions along which the classical acoustic tensor maps n to a multiple
/// of itself, so the longitudinal branch decouples from couple-stress effects.
struct LongitudinalResult {
    std::vector<Vec3> directions;       // sign-canonical representatives
    std::vector<double> residuals;      // alignment residual per direction
    bool all_directions_longitudinal = false;
    bool fewer_than_three = false;      // flagged, never aborts
};

namespace detail {

inline Vec3 alignment_defect(const CauchyTensor& c, const Vec3& n) {
    Mat3 a = acoustic_cauchy(c, n);
    Vec3 an = a * n;
    return an - n.dot(an) * n;
}

/// Damped Gauss-Newton on the tangent-plane coordinates of the alignment
/// defect; returns the refined direction and its relative residual.
inline std::pair<Vec3, double> polish_longitudinal(const CauchyTensor& c, Vec3 n,
                                                   double scale) {
    for (int it = 0; it < 60; ++it) {
        Vec3 f = alignment_defect(c, n);
        double fn = f.norm();
        if (fn < 1e-14 * scale) break;
        auto [t, s] = tangent_frame(n);
        const double h = 1e-7;
        Vec3 fu = alignment_defect(c, (n + h * t).normalized());
        Vec3 fv = alignment_defect(c, (n + h * s).normalized());
        Eigen::Matrix<double, 3, 2> j;
        j.col(0) = (fu - f) / h;
        j.col(1) = (fv - f) / h;
        Eigen::Vector2d step = j.colPivHouseholderQr().solve(-f);
        double limit = 0.2;
        if (step.norm() > limit) step *= limit / step.norm();
        Vec3 next = (n + step[0] * t + step[1] * s).normalized();
        if (alignment_defect(c, next).norm() >= fn) {
            next = (n + 0.25 * (step[0] * t + step[1] * s)).normalized();
            if (alignment_defect(c, next).norm() >= fn) break;
        }
        n = next;
    }
    Mat3 a = acoustic_cauchy(c, n);
    double rel = alignment_defect(c, n).norm() / std::max(1e-300, a.norm());
    return {n, rel};
}

}  // namespace detail

inline LongitudinalResult longitudinal_directions(const CauchyTensor& c,
                                                  int seeds = 256,
                                                  double accept_rel = 1e-8) {
    LongitudinalResult out;
    double scale = std::max(c.scale(), 1e-300);

    auto dirs = fibonacci_directions(seeds);
    std::vector<std::pair<Vec3, double>> found(dirs.size());
    parallel_for(0, static_cast<int>(dirs.size()), 0, [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i)
            found[static_cast<std::size_t>(i)] =
                detail::polish_longitudinal(c, dirs[static_cast<std::size_t>(i)], scale);
    });

    int converged = 0;
    for (auto& [n, rel] : found) {
        if (rel >= accept_rel) continue;
        ++converged;
        Vec3 canon = detail::canonical_sign(n);
        bool dup = false;
        for (const Vec3& d : out.directions)
            if (std::acos(std::min(1.0, std::abs(d.dot(canon)))) < 1e-3) {
                dup = true;
                break;
            }
        if (!dup) {
            out.directions.push_back(canon);
            out.residuals.push_back(rel);
        }
    }
    // Isotropy test: every seed converged essentially in place.
    if (converged == static_cast<int>(found.size())) {
        bool everywhere = true;
        for (const Vec3& d : fibonacci_directions(64))
            if (detail::alignment_defect(c, d).norm() > accept_rel * scale) {
                everywhere = false;
                break;
            }
        out.all_directions_longitudinal = everywhere;
    }
    out.fewer_than_three = !out.all_directions_longitudinal && out.directions.size() < 3;
    return out;
}

/// The two eigenvalues of the couple-stress acoustic tensor on the plane
/// orthogonal to n (the full non-trivial spectrum, since A_B n = 0), with
/// eigenvectors lifted back to 3-space. lambda2 <= lambda3.
struct TangentSpectrum {
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    Vec3 v2 = Vec3::Zero();
    Vec3 v3 = Vec3::Zero();
};

inline TangentSpectrum tangent_spectrum(const Mat3& a_b, const Vec3& n) {
    auto [t, s] = tangent_frame(n);
    Eigen::Matrix2d r;
    r(0, 0) = t.dot(a_b * t);
    r(0, 1) = 0.5 * (t.dot(a_b * s) + s.dot(a_b * t));
    r(1, 0) = r(0, 1);
    r(1, 1) = s.dot(a_b * s);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(r);
    TangentSpectrum out;
    out.lambda2 = es.eigenvalues()(0);
    out.lambda3 = es.eigenvalues()(1);
    out.v2 = es.eigenvectors()(0, 0) * t + es.eigenvectors()(1, 0) * s;
    out.v3 = es.eigenvectors()(0, 1) * t + es.eigenvectors()(1, 1) * s;
    return out;
}

/// Shear-branch dispersion data of an isotropic material, including the
/// evanescent-mode cut-off magnitude when it exists.
struct IsotropicDispersion {
    double phase_velocity = 0.0;
    double omega_squared = 0.0;
    bool propagating = false;
    std::optional<double> cutoff_wavenumber;  // magnitude of the imaginary cut-off
};

inline IsotropicDispersion isotropic_dispersion(double mu, double eta, double rho,
                                                double k) {
    if (!(rho > 0.0)) throw precondition_error("density must be positive", rho);
    IsotropicDispersion d;
    double vs2 = (mu + eta * k * k) / rho;
    d.omega_squared = k * k * vs2;
    d.propagating = vs2 > 0.0;
    d.phase_velocity = d.propagating ? std::sqrt(vs2) : 0.0;
    if (eta > 0.0 && mu >= 0.0) d.cutoff_wavenumber = std::sqrt(mu / eta);
    return d;
}

}  // namespace cosserat
