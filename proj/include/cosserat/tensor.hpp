#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "cosserat/core.hpp"

namespace cosserat {

/// Dense fourth-order tensor on 3-space, row-major over (p, q, m, n).
class Tensor4 {
public:
    Tensor4() { v_.fill(0.0); }

    double& operator()(int p, int q, int m, int n) {
        return v_[static_cast<std::size_t>(((p * 3 + q) * 3 + m) * 3 + n)];
    }
    double operator()(int p, int q, int m, int n) const {
        return v_[static_cast<std::size_t>(((p * 3 + q) * 3 + m) * 3 + n)];
    }

    /// Largest absolute component; the scale used to normalize margins.
    double scale() const {
        double s = 0.0;
        for (double x : v_) s = std::max(s, std::abs(x));
        return s;
    }

    /// Second-order contraction on the trailing index pair: out_pq = T_pqmn in_mn.
    Mat3 apply(const Mat3& in) const {
        Mat3 out = Mat3::Zero();
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q) {
                double acc = 0.0;
                for (int m = 0; m < 3; ++m)
                    for (int n = 0; n < 3; ++n) acc += (*this)(p, q, m, n) * in(m, n);
                out(p, q) = acc;
            }
        return out;
    }

    double quadratic_form(const Mat3& a) const {
        double acc = 0.0;
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q)
                for (int m = 0; m < 3; ++m)
                    for (int n = 0; n < 3; ++n) acc += a(p, q) * (*this)(p, q, m, n) * a(m, n);
        return acc;
    }

    Tensor4& operator+=(const Tensor4& o) {
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }
    Tensor4& operator*=(double c) {
        for (double& x : v_) x *= c;
        return *this;
    }
    friend Tensor4 operator*(double c, Tensor4 t) {
        t *= c;
        return t;
    }

private:
    std::array<double, 81> v_;
};

// Index order of second-order components in the 6-vector reduction:
// (11, 22, 33, 23, 13, 12).
inline constexpr int kVoigtPairs[6][2] = {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}};

// Index order of second-order components in the 9-vector reduction:
// (11, 12, 13, 21, 22, 23, 31, 32, 33), i.e. row-major.
inline int nine_index(int p, int q) { return p * 3 + q; }

namespace detail {

inline Tensor4 symmetrize_major(const Tensor4& t) {
    Tensor4 out;
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            for (int m = 0; m < 3; ++m)
                for (int n = 0; n < 3; ++n)
                    out(p, q, m, n) = 0.5 * (t(p, q, m, n) + t(m, n, p, q));
    return out;
}

inline Tensor4 symmetrize_minor(const Tensor4& t) {
    Tensor4 out;
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            for (int m = 0; m < 3; ++m)
                for (int n = 0; n < 3; ++n)
                    out(p, q, m, n) = 0.25 * (t(p, q, m, n) + t(q, p, m, n) +
                                              t(p, q, n, m) + t(q, p, n, m));
    return out;
}

/// Projection onto tensors whose contraction vanishes on either index pair.
/// Acting on a quadratic form, this is the restriction to deviatoric arguments.
inline Tensor4 project_deviatoric(const Tensor4& t) {
    Mat3 row = Mat3::Zero();  // row(m, n) = sum_p t(p, p, m, n)
    Mat3 col = Mat3::Zero();  // col(p, q) = sum_m t(p, q, m, m)
    double full = 0.0;
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n)
            for (int p = 0; p < 3; ++p) {
                row(m, n) += t(p, p, m, n);
                col(m, n) += t(m, n, p, p);
            }
    for (int p = 0; p < 3; ++p) full += row(p, p);

    Tensor4 out;
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            for (int m = 0; m < 3; ++m)
                for (int n = 0; n < 3; ++n) {
                    double x = t(p, q, m, n);
                    if (p == q) x -= row(m, n) / 3.0;
                    if (m == n) x -= col(p, q) / 3.0;
                    if (p == q && m == n) x += full / 9.0;
                    out(p, q, m, n) = x;
                }
    return out;
}

inline double max_abs_diff(const Tensor4& a, const Tensor4& b) {
    double r = 0.0;
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            for (int m = 0; m < 3; ++m)
                for (int n = 0; n < 3; ++n)
                    r = std::max(r, std::abs(a(p, q, m, n) - b(p, q, m, n)));
    return r;
}

}  // namespace detail

/// Classical elasticity tensor: major and minor symmetries enforced at
/// construction; maps symmetric strain to symmetric stress.
class CauchyTensor {
public:
    CauchyTensor() = default;

    explicit CauchyTensor(const Tensor4& raw)
        : c_(detail::symmetrize_major(detail::symmetrize_minor(raw))) {}

    const Tensor4& components() const { return c_; }
    double scale() const { return c_.scale(); }

    Mat3 stress(const Mat3& strain) const { return c_.apply(strain); }
    double quadratic_form(const Mat3& strain) const { return c_.quadratic_form(strain); }

    /// 6x6 reduction M such that e . M e equals the tensorial quadratic form
    /// for the component 6-vector e = (e11, e22, e33, e23, e13, e12). The
    /// shear blocks absorb the off-diagonal multiplicities (factors 2 and 4).
    Mat6 reduced_matrix() const {
        Mat6 m;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                double f = (i >= 3 ? 2.0 : 1.0) * (j >= 3 ? 2.0 : 1.0);
                m(i, j) = f * c_(kVoigtPairs[i][0], kVoigtPairs[i][1],
                                 kVoigtPairs[j][0], kVoigtPairs[j][1]);
            }
        return m;
    }

    static CauchyTensor from_reduced_matrix(const Mat6& m) {
        if ((m - m.transpose()).cwiseAbs().maxCoeff() >
            1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff()))
            throw std::invalid_argument("reduced matrix must be symmetric");
        Tensor4 t;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                double f = (i >= 3 ? 2.0 : 1.0) * (j >= 3 ? 2.0 : 1.0);
                int p = kVoigtPairs[i][0], q = kVoigtPairs[i][1];
                int a = kVoigtPairs[j][0], b = kVoigtPairs[j][1];
                double val = m(i, j) / f;
                t(p, q, a, b) = val;
                t(q, p, a, b) = val;
                t(p, q, b, a) = val;
                t(q, p, b, a) = val;
            }
        return CauchyTensor(t);
    }

private:
    Tensor4 c_;
};

/// Couple-stress elasticity tensor: major symmetry plus vanishing contraction
/// on both index pairs. Inputs are projected onto that subspace; the
/// projection residual is retained for diagnostics.
class CosseratTensor {
public:
    CosseratTensor() = default;

    explicit CosseratTensor(const Tensor4& raw) {
        Tensor4 sym = detail::symmetrize_major(raw);
        b_ = detail::project_deviatoric(sym);
        projection_residual_ = detail::max_abs_diff(sym, b_);
    }

    const Tensor4& components() const { return b_; }
    double scale() const { return b_.scale(); }
    double projection_residual() const { return projection_residual_; }

    Mat3 couple_stress(const Mat3& curvature) const { return b_.apply(curvature); }
    double quadratic_form(const Mat3& curvature) const { return b_.quadratic_form(curvature); }

    /// 9x9 reduction over the component 9-vector (k11, k12, ..., k33);
    /// k . M k equals the tensorial quadratic form with no extra factors.
    Mat9 reduced_matrix() const {
        Mat9 m;
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q)
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b)
                        m(nine_index(p, q), nine_index(a, b)) = b_(p, q, a, b);
        return m;
    }

    static CosseratTensor from_reduced_matrix(const Mat9& m) {
        if ((m - m.transpose()).cwiseAbs().maxCoeff() >
            1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff()))
            throw std::invalid_argument("reduced matrix must be symmetric");
        Tensor4 t;
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q)
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b)
                        t(p, q, a, b) = m(nine_index(p, q), nine_index(a, b));
        return CosseratTensor(t);
    }

private:
    Tensor4 b_;
    double projection_residual_ = 0.0;
};

/// lambda tr(e) I + 2 mu e response.
inline CauchyTensor isotropic_cauchy(double lambda, double mu) {
    Tensor4 t;
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            for (int m = 0; m < 3; ++m)
                for (int n = 0; n < 3; ++n)
                    t(p, q, m, n) = lambda * (p == q) * (m == n) +
                                    mu * ((p == m) * (q == n) + (p == n) * (q == m));
    return CauchyTensor(t);
}

/// 4 eta k + 4 eta' k^T response on trace-free curvatures.
inline CosseratTensor isotropic_cosserat(double eta, double eta_prime) {
    Tensor4 t;
    double dev = 4.0 * (eta + eta_prime) / 3.0;
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            for (int m = 0; m < 3; ++m)
                for (int n = 0; n < 3; ++n)
                    t(p, q, m, n) = 4.0 * eta * (p == m) * (q == n) +
                                    4.0 * eta_prime * (p == n) * (q == m) -
                                    dev * (p == q) * (m == n);
    return CosseratTensor(t);
}

/// The 12 independent couple-stress components of a material with three
/// orthogonal planes of reflective symmetry, in tensor-component units.
struct OrthotropicComponents {
    double b1111 = 0, b1122 = 0, b1212 = 0, b1221 = 0;
    double b1313 = 0, b1331 = 0, b2121 = 0, b2222 = 0;
    double b2323 = 0, b2332 = 0, b3131 = 0, b3232 = 0;
};

/// Assembles the orthotropic couple-stress tensor. The three dependent
/// entries coupling the normal curvature components are fixed by the
/// vanishing-contraction constraint:
///   B1133 = -(B1111 + B1122), B2233 = -(B1122 + B2222),
///   B3333 = -(B1133 + B2233).
inline CosseratTensor orthotropic_cosserat(const OrthotropicComponents& c) {
    for (double x : {c.b1111, c.b1122, c.b1212, c.b1221, c.b1313, c.b1331,
                     c.b2121, c.b2222, c.b2323, c.b2332, c.b3131, c.b3232})
        if (!std::isfinite(x)) throw std::invalid_argument("non-finite orthotropic component");

    double b1133 = -(c.b1111 + c.b1122);
    double b2233 = -(c.b1122 + c.b2222);
    double b3333 = -(b1133 + b2233);

    Tensor4 t;
    auto put = [&](int p, int q, int m, int n, double x) {
        t(p, q, m, n) = x;
        t(m, n, p, q) = x;
    };
    put(0, 0, 0, 0, c.b1111);
    put(0, 0, 1, 1, c.b1122);
    put(0, 0, 2, 2, b1133);
    put(1, 1, 1, 1, c.b2222);
    put(1, 1, 2, 2, b2233);
    put(2, 2, 2, 2, b3333);
    put(0, 1, 0, 1, c.b1212);
    put(0, 1, 1, 0, c.b1221);
    put(1, 0, 1, 0, c.b2121);
    put(0, 2, 0, 2, c.b1313);
    put(0, 2, 2, 0, c.b1331);
    put(2, 0, 2, 0, c.b3131);
    put(1, 2, 1, 2, c.b2323);
    put(1, 2, 2, 1, c.b2332);
    put(2, 1, 2, 1, c.b3232);

    CosseratTensor out(t);
    // Dependent entries already satisfy the contraction constraint; any
    // residual here indicates a bug, not input rounding.
    if (out.projection_residual() > 1e-12 * std::max(1.0, t.scale()))
        throw std::logic_error("orthotropic assembly violated the trace constraint");
    return out;
}

/// Positive-definiteness verdict for a quadratic form, with the minimum
/// eigenvalue measured against the tensor-magnitude norm of the argument.
struct PdResult {
    bool positive_definite = false;
    double min_eigenvalue = 0.0;
    double scale = 0.0;
    double tolerance = 0.0;
    Vec3 witness_row = Vec3::Zero();   // first row of the minimizing argument
    Mat3 witness = Mat3::Zero();       // minimizing strain or curvature
};

/// Strict positivity over symmetric second-order arguments.
inline PdResult check_pd_cauchy(const CauchyTensor& c, double tol_rel = 1e-10) {
    Mat6 m = c.reduced_matrix();
    // The 6-vector norm weight: |e|^2 = e . diag(1,1,1,2,2,2) e.
    Vec6 w;
    w << 1, 1, 1, 2, 2, 2;
    Mat6 scaled;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) scaled(i, j) = m(i, j) / std::sqrt(w[i] * w[j]);
    Eigen::SelfAdjointEigenSolver<Mat6> es(scaled);
    PdResult r;
    r.min_eigenvalue = es.eigenvalues()(0);
    r.scale = es.eigenvalues().cwiseAbs().maxCoeff();
    r.tolerance = tol_rel * std::max(1.0, r.scale);
    r.positive_definite = r.min_eigenvalue > r.tolerance;
    Vec6 v = es.eigenvectors().col(0);
    Mat3 strain = Mat3::Zero();
    for (int i = 0; i < 6; ++i) {
        double x = v[i] / std::sqrt(w[i]);
        strain(kVoigtPairs[i][0], kVoigtPairs[i][1]) = x;
        strain(kVoigtPairs[i][1], kVoigtPairs[i][0]) = x;
    }
    strain /= strain.norm();
    r.witness = strain;
    r.witness_row = strain.row(0);
    return r;
}

/// Strict positivity over trace-free second-order arguments.
inline PdResult check_pd_cosserat(const CosseratTensor& b, double tol_rel = 1e-10) {
    Mat9 m = b.reduced_matrix();
    // Orthonormal basis of the 8-dimensional trace-free subspace.
    Eigen::Matrix<double, 9, 8> q = Eigen::Matrix<double, 9, 8>::Zero();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const double inv_sqrt6 = 1.0 / std::sqrt(6.0);
    q(nine_index(0, 0), 0) = inv_sqrt2;
    q(nine_index(1, 1), 0) = -inv_sqrt2;
    q(nine_index(0, 0), 1) = inv_sqrt6;
    q(nine_index(1, 1), 1) = inv_sqrt6;
    q(nine_index(2, 2), 1) = -2.0 * inv_sqrt6;
    int col = 2;
    for (int p = 0; p < 3; ++p)
        for (int n = 0; n < 3; ++n)
            if (p != n) q(nine_index(p, n), col++) = 1.0;
    Eigen::Matrix<double, 8, 8> restricted = q.transpose() * m * q;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 8, 8>> es(restricted);
    PdResult r;
    r.min_eigenvalue = es.eigenvalues()(0);
    r.scale = es.eigenvalues().cwiseAbs().maxCoeff();
    r.tolerance = tol_rel * std::max(1.0, r.scale);
    r.positive_definite = r.min_eigenvalue > r.tolerance;
    Vec9 v = q * es.eigenvectors().col(0);
    Mat3 curv;
    for (int p = 0; p < 3; ++p)
        for (int n = 0; n < 3; ++n) curv(p, n) = v[nine_index(p, n)];
    curv /= curv.norm();
    r.witness = curv;
    r.witness_row = curv.row(0);
    return r;
}

}  // namespace cosserat
