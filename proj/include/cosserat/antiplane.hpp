#pragma once

#include <string>
#include <vector>

#include "cosserat/acoustic.hpp"
#include "cosserat/tensor.hpp"

namespace cosserat {

/// Out-of-plane shear problem of an orthotropic couple-stress material:
/// two classical shear moduli and four couple-stress moduli. The derived
/// quantities b0 = b1 - b3, beta = b2/b4, gamma = b0/b4 are always
/// recomputed from the stored moduli.
struct AntiplaneMaterial {
    double c44 = 0.0;
    double c55 = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
    double b3 = 0.0;
    double b4 = 0.0;

    double b0() const { return b1 - b3; }
    double beta() const {
        require_b4();
        return b2 / b4;
    }
    double gamma() const {
        require_b4();
        return b0() / b4;
    }
    /// The angular profile of the transverse couple-stress eigenvalue, up to
    /// a fixed material-independent factor: b2 nx^4 + 2 b0 nx^2 ny^2 + b4 ny^4.
    double quartic_form(double nx, double ny) const {
        double x2 = nx * nx, y2 = ny * ny;
        return b2 * x2 * x2 + 2.0 * b0() * x2 * y2 + b4 * y2 * y2;
    }
    double classical_form(double nx, double ny) const {
        return c55 * nx * nx + c44 * ny * ny;
    }

private:
    void require_b4() const {
        if (b4 == 0.0)
            throw precondition_error("b4 must be non-zero for the (beta, gamma) parameterization", b4);
    }
};

enum class Regime { EI, EC, H, P };
enum class RegimeBoundary { None, EI_P, EC_H, EI_EC };

inline std::string to_string(Regime r) {
    switch (r) {
        case Regime::EI: return "EI";
        case Regime::EC: return "EC";
        case Regime::H: return "H";
        default: return "P";
    }
}

inline std::string to_string(RegimeBoundary b) {
    switch (b) {
        case RegimeBoundary::EI_P: return "EI/P-boundary";
        case RegimeBoundary::EC_H: return "EC/H-boundary";
        case RegimeBoundary::EI_EC: return "EI/EC-boundary";
        default: return "";
    }
}

/// Character of the principal antiplane operator at one (beta, gamma) point:
/// regime label, the four characteristic roots, distances to the regime
/// boundaries, and the discontinuity-surface normals when they exist.
struct RegimeResult {
    Regime regime = Regime::EI;
    RegimeBoundary boundary = RegimeBoundary::None;
    std::array<Complex, 4> roots{};
    double beta = 0.0;
    double gamma = 0.0;
    double distance_parabolic = 0.0;   // signed: beta
    double distance_ec_h = 0.0;        // gamma + sqrt(beta), NaN when beta < 0
    double distance_ei_ec = 0.0;       // gamma - sqrt(beta), NaN when beta < 0
    std::vector<Vec2> discontinuity_normals;

    std::string label() const {
        return boundary == RegimeBoundary::None ? to_string(regime) : to_string(boundary);
    }
};

namespace detail {

/// Roots of psi^4 + 2 gamma psi^2 + beta via the companion-matrix
/// eigenproblem; uniform accuracy including near-repeated roots.
inline std::array<Complex, 4> quartic_roots(double beta, double gamma) {
    Eigen::Matrix4d companion = Eigen::Matrix4d::Zero();
    companion(0, 3) = -beta;
    companion(2, 3) = -2.0 * gamma;
    companion(1, 0) = 1.0;
    companion(2, 1) = 1.0;
    companion(3, 2) = 1.0;
    Eigen::EigenSolver<Eigen::Matrix4d> es(companion);
    std::array<Complex, 4> roots;
    for (int i = 0; i < 4; ++i) roots[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

inline double clamped_sqrt(double x) { return std::sqrt(std::max(0.0, x)); }

}  // namespace detail

/// Closed-form roots per regime, used to cross-check the companion solver.
inline std::array<Complex, 4> closed_form_roots(Regime regime, double beta, double gamma) {
    using detail::clamped_sqrt;
    double disc = clamped_sqrt(gamma * gamma - beta);
    std::array<Complex, 4> r;
    switch (regime) {
        case Regime::EI: {
            double c1 = clamped_sqrt(gamma + disc);
            double c2 = clamped_sqrt(gamma - disc);
            r = {Complex(0, c1), Complex(0, -c1), Complex(0, c2), Complex(0, -c2)};
            break;
        }
        case Regime::EC: {
            double f = clamped_sqrt(0.5 * (clamped_sqrt(beta) - gamma));
            double c = clamped_sqrt(0.5 * (clamped_sqrt(beta) + gamma));
            r = {Complex(-f, c), Complex(-f, -c), Complex(f, c), Complex(f, -c)};
            break;
        }
        case Regime::H: {
            double e1 = clamped_sqrt(-gamma + disc);
            double e2 = clamped_sqrt(-gamma - disc);
            r = {Complex(e1, 0), Complex(-e1, 0), Complex(e2, 0), Complex(-e2, 0)};
            break;
        }
        default: {
            double f = clamped_sqrt(-gamma + disc);
            double c = clamped_sqrt(gamma + disc);
            r = {Complex(f, 0), Complex(-f, 0), Complex(0, c), Complex(0, -c)};
            break;
        }
    }
    std::sort(r.begin(), r.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return r;
}

namespace detail {

/// Real zero angles of the quartic angular form, as tan^2(theta) roots of
/// the quadratic x^2 + 2 gamma x + beta (normalized by b4 > 0).
inline std::vector<double> quartic_zero_tan2(double beta, double gamma, double tol) {
    std::vector<double> xs;
    double disc = gamma * gamma - beta;
    if (disc < -tol) return xs;
    double root = std::sqrt(std::max(0.0, disc));
    for (double x : {-gamma + root, -gamma - root}) {
        if (x < -tol) continue;
        x = std::max(0.0, x);
        bool dup = false;
        for (double y : xs)
            if (std::abs(x - y) <= tol * (1.0 + std::abs(x))) dup = true;
        if (!dup) xs.push_back(x);
    }
    return xs;
}

inline std::vector<Vec2> normals_from_tan2(const std::vector<double>& tan2) {
    std::vector<Vec2> out;
    for (double x : tan2) {
        double c = 1.0 / std::sqrt(1.0 + x);
        double s = std::sqrt(x) / std::sqrt(1.0 + x);
        if (s == 0.0) {
            out.emplace_back(1.0, 0.0);
            out.emplace_back(-1.0, 0.0);
        } else {
            out.emplace_back(c, s);
            out.emplace_back(c, -s);
            out.emplace_back(-c, s);
            out.emplace_back(-c, -s);
        }
    }
    return out;
}

}  // namespace detail

/// Regime classification in the (beta, gamma) plane. Weak inequalities keep
/// the EI label on gamma = sqrt(beta) and the H label on gamma = -sqrt(beta);
/// points within tolerance of a boundary additionally carry the boundary tag.
inline RegimeResult classify(double beta, double gamma) {
    if (!std::isfinite(beta) || !std::isfinite(gamma))
        throw std::invalid_argument("regime parameters must be finite");
    RegimeResult r;
    r.beta = beta;
    r.gamma = gamma;
    double tol_b = 1e-8 * (1.0 + std::abs(beta) + std::abs(gamma));
    double sqrt_beta = beta > 0.0 ? std::sqrt(beta) : 0.0;

    if (beta > 0.0) {
        if (gamma >= sqrt_beta)
            r.regime = Regime::EI;
        else if (gamma <= -sqrt_beta)
            r.regime = Regime::H;
        else
            r.regime = Regime::EC;
    } else {
        r.regime = Regime::P;
    }

    if (std::abs(beta) < tol_b && gamma > 0.0)
        r.boundary = RegimeBoundary::EI_P;
    else if (beta > 0.0 && std::abs(gamma + sqrt_beta) < tol_b)
        r.boundary = RegimeBoundary::EC_H;
    else if (beta > 0.0 && std::abs(gamma - sqrt_beta) < tol_b)
        r.boundary = RegimeBoundary::EI_EC;

    r.roots = detail::quartic_roots(beta, gamma);
    r.distance_parabolic = beta;
    double nan = std::numeric_limits<double>::quiet_NaN();
    r.distance_ec_h = beta >= 0.0 ? gamma + sqrt_beta : nan;
    r.distance_ei_ec = beta >= 0.0 ? gamma - sqrt_beta : nan;

    bool elliptic = beta > tol_b && gamma + sqrt_beta > tol_b;
    if (!elliptic)
        r.discontinuity_normals =
            detail::normals_from_tan2(detail::quartic_zero_tan2(beta, gamma, tol_b));
    return r;
}

/// Unit normals of admissible discontinuity surfaces: the real zero
/// directions of the quartic angular form. Empty inside the elliptic region.
inline std::vector<Vec2> discontinuity_normals(const AntiplaneMaterial& m) {
    if (m.b4 <= 0.0)
        throw precondition_error(
            "antiplane analysis assumes b4 > 0; relabel the in-plane axes", m.b4);
    return classify(m.beta(), m.gamma()).discontinuity_normals;
}

/// Closed-form stability verdicts of the antiplane problem.
struct AntiplaneConditions {
    bool pd_cauchy = false;
    bool pd_cosserat = false;
    bool se_cauchy = false;
    bool se_cosserat = false;
    bool ellipticity = false;
    bool wave_propagation = false;

    bool pd() const { return pd_cauchy && pd_cosserat; }
    bool se() const { return se_cauchy && se_cosserat; }
};

inline AntiplaneConditions antiplane_conditions(const AntiplaneMaterial& m) {
    if (m.b4 <= 0.0)
        throw precondition_error(
            "antiplane analysis assumes b4 > 0; relabel the in-plane axes", m.b4);
    double sc = std::max({1.0, std::abs(m.c44), std::abs(m.c55)});
    double sb = std::max({1.0, std::abs(m.b1), std::abs(m.b2), std::abs(m.b3), m.b4});
    double tc = 1e-12 * sc, tb = 1e-12 * sb;
    double root_pd = m.b2 > 0.0 ? std::sqrt(m.b2 * m.b4) : 0.0;

    AntiplaneConditions r;
    r.pd_cauchy = m.c55 > tc && m.c44 > tc;
    r.pd_cosserat = m.b1 > tb && m.b2 > tb && m.b2 * m.b4 - m.b3 * m.b3 > tb * sb;
    r.se_cauchy = r.pd_cauchy;
    r.se_cosserat = m.b1 > tb && m.b2 > tb && std::abs(m.b3) < m.b1 + root_pd - tb;
    r.ellipticity = m.b2 > tb && m.b0() > -root_pd + tb;

    bool forms_nonneg = m.c55 >= -tc && m.c44 >= -tc && m.b2 >= -tb &&
                        m.b0() >= -(m.b2 > 0 ? std::sqrt(m.b2 * m.b4) : 0.0) - tb;
    bool no_common_zero = true;
    if (forms_nonneg) {
        bool c44_zero = std::abs(m.c44) <= tc;
        bool c55_zero = std::abs(m.c55) <= tc;
        if (c44_zero && c55_zero) {
            // classical form vanishes everywhere: the quartic must be
            // strictly positive on the whole circle
            no_common_zero = m.b2 > tb && m.b0() > -root_pd + tb;
        } else if (c44_zero) {
            no_common_zero = m.b4 > tb;  // classical form vanishes along y only
        } else if (c55_zero) {
            no_common_zero = m.b2 > tb;  // classical form vanishes along x only
        }
    }
    r.wave_propagation = forms_nonneg && no_common_zero;
    return r;
}

/// Phase velocity and out-of-plane acoustic component of an SH wave.
struct ShDispersion {
    double vs_squared = 0.0;
    double phase_velocity = 0.0;
    bool propagating = false;
    double a33 = 0.0;
};

inline ShDispersion sh_dispersion(const AntiplaneMaterial& m, double rho,
                                  const Vec2& n, double k) {
    if (!(rho > 0.0)) throw precondition_error("density must be positive", rho);
    double err = std::abs(n.norm() - 1.0);
    if (err > 1e-12) throw precondition_error("direction must be a unit vector", err);
    ShDispersion d;
    d.vs_squared = (m.classical_form(n.x(), n.y()) +
                    0.25 * k * k * m.quartic_form(n.x(), n.y())) /
                   rho;
    d.propagating = d.vs_squared > 0.0;
    d.phase_velocity = d.propagating ? std::sqrt(d.vs_squared) : 0.0;
    d.a33 = rho * k * k * d.vs_squared;
    return d;
}

/// Uniform-grid scalar samples with spacing h; row-major over (ix, iy).
struct ScalarField2D {
    int nx = 0;
    int ny = 0;
    double h = 0.0;
    std::vector<double> values;

    ScalarField2D() = default;
    ScalarField2D(int nx_, int ny_, double h_)
        : nx(nx_), ny(ny_), h(h_), values(static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_), 0.0) {}

    double& at(int ix, int iy) { return values[static_cast<std::size_t>(ix) * static_cast<std::size_t>(ny) + static_cast<std::size_t>(iy)]; }
    double at(int ix, int iy) const { return values[static_cast<std::size_t>(ix) * static_cast<std::size_t>(ny) + static_cast<std::size_t>(iy)]; }
    bool same_grid(const ScalarField2D& o) const {
        return nx == o.nx && ny == o.ny && h == o.h;
    }
    double max_abs() const {
        double r = 0.0;
        for (double v : values) r = std::max(r, std::abs(v));
        return r;
    }
};

/// Second-order central-difference application of the antiplane equilibrium
/// operator plus body terms:
///   L w + X_z + (dY_y/dx - dY_x/dy)/2,
///   L = c55 dxx + c44 dyy - (b2 dxxxx + 2 b0 dxxyy + b4 dyyyy)/4.
/// Output covers interior nodes only (two-node margin, where every stencil
/// fits inside the grid); output node (i, j) maps to input node (i+2, j+2).
inline ScalarField2D apply_operator(const AntiplaneMaterial& m, const ScalarField2D& w,
                                    const ScalarField2D& x_z, const ScalarField2D& y_x,
                                    const ScalarField2D& y_y) {
    if (!(w.h > 0.0)) throw std::invalid_argument("grid spacing must be positive");
    if (!w.same_grid(x_z) || !w.same_grid(y_x) || !w.same_grid(y_y))
        throw std::invalid_argument("fields must share one grid");
    if (w.nx < 5 || w.ny < 5)
        throw std::invalid_argument("grid too small for the interior stencils");

    ScalarField2D out(w.nx - 4, w.ny - 4, w.h);
    double h2 = w.h * w.h, h4 = h2 * h2, two_h = 2.0 * w.h;
    double b0 = m.b0();
    for (int i = 2; i < w.nx - 2; ++i)
        for (int j = 2; j < w.ny - 2; ++j) {
            double dxx = (w.at(i + 1, j) - 2.0 * w.at(i, j) + w.at(i - 1, j)) / h2;
            double dyy = (w.at(i, j + 1) - 2.0 * w.at(i, j) + w.at(i, j - 1)) / h2;
            double dxxxx = (w.at(i + 2, j) - 4.0 * w.at(i + 1, j) + 6.0 * w.at(i, j) -
                            4.0 * w.at(i - 1, j) + w.at(i - 2, j)) /
                           h4;
            double dyyyy = (w.at(i, j + 2) - 4.0 * w.at(i, j + 1) + 6.0 * w.at(i, j) -
                            4.0 * w.at(i, j - 1) + w.at(i, j - 2)) /
                           h4;
            double dxxyy = (w.at(i + 1, j + 1) - 2.0 * w.at(i, j + 1) + w.at(i - 1, j + 1) -
                            2.0 * (w.at(i + 1, j) - 2.0 * w.at(i, j) + w.at(i - 1, j)) +
                            w.at(i + 1, j - 1) - 2.0 * w.at(i, j - 1) + w.at(i - 1, j - 1)) /
                           h4;
            double lw = m.c55 * dxx + m.c44 * dyy -
                        0.25 * (m.b2 * dxxxx + 2.0 * b0 * dxxyy + m.b4 * dyyyy);
            double body = x_z.at(i, j) +
                          0.5 * ((y_y.at(i + 1, j) - y_y.at(i - 1, j)) / two_h -
                                 (y_x.at(i, j + 1) - y_x.at(i, j - 1)) / two_h);
            out.at(i - 2, j - 2) = lw + body;
        }
    return out;
}

/// Effective antiplane couple-stress moduli recovered from an orthotropic
/// tensor. On the antiplane curvature subspace the two normal components act
/// only through their difference, so the torsional modulus is the
/// gauge-invariant combination (B1111 + B2222)/2 - B1122.
struct AntiplaneExtraction {
    double b1 = 0.0;
    double b2 = 0.0;
    double b3 = 0.0;
    double b4 = 0.0;
    double residual = 0.0;  // worst violation of the reduction assumptions
};

inline AntiplaneExtraction from_orthotropic(const CosseratTensor& b, double tol_rel = 1e-8) {
    const Tensor4& t = b.components();
    double scale = std::max(1.0, b.scale());

    // Entries outside the orthotropic sparsity pattern must vanish: a
    // component survives reflections only if each index value appears an
    // even number of times.
    double off_pattern = 0.0;
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            for (int m = 0; m < 3; ++m)
                for (int n = 0; n < 3; ++n) {
                    int count[3] = {0, 0, 0};
                    ++count[p], ++count[q], ++count[m], ++count[n];
                    bool allowed = count[0] % 2 == 0 && count[1] % 2 == 0 && count[2] % 2 == 0;
                    if (!allowed) off_pattern = std::max(off_pattern, std::abs(t(p, q, m, n)));
                }
    double asym = std::abs(t(0, 0, 0, 0) - t(1, 1, 1, 1));
    double residual = std::max(off_pattern, asym);
    if (residual > tol_rel * scale)
        throw precondition_error(
            "tensor is not reducible to the four-modulus antiplane form "
            "(general orthotropic antiplane response is unsupported); residual " +
                std::to_string(residual),
            residual);

    AntiplaneExtraction out;
    out.residual = residual;
    out.b1 = 0.5 * (t(0, 0, 0, 0) + t(1, 1, 1, 1)) - t(0, 0, 1, 1);
    out.b2 = t(0, 1, 0, 1);
    out.b3 = t(0, 1, 1, 0);
    out.b4 = t(1, 0, 1, 0);
    return out;
}

/// Full antiplane reduction of a 3D material pair: classical shear moduli
/// from the out-of-plane shear components, couple moduli as above. Requires
/// the in-plane/out-of-plane shear decoupling of an orthotropic material.
inline AntiplaneMaterial extract_antiplane(const CauchyTensor& c, const CosseratTensor& b,
                                           double tol_rel = 1e-8) {
    AntiplaneExtraction cs = from_orthotropic(b, tol_rel);
    const Tensor4& t = c.components();
    double scale = std::max(1.0, c.scale());
    double coupling = std::max({std::abs(t(0, 2, 1, 2)), std::abs(t(0, 2, 0, 0)),
                                std::abs(t(1, 2, 0, 0)), std::abs(t(0, 2, 1, 1)),
                                std::abs(t(1, 2, 1, 1))});
    if (coupling > tol_rel * scale)
        throw precondition_error("classical tensor couples antiplane and in-plane response",
                                 coupling);
    AntiplaneMaterial m;
    m.c55 = t(0, 2, 0, 2);
    m.c44 = t(1, 2, 1, 2);
    m.b1 = cs.b1;
    m.b2 = cs.b2;
    m.b3 = cs.b3;
    m.b4 = cs.b4;
    return m;
}

/// Choice of the 3D moduli that the antiplane problem does not constrain.
struct EmbedOptions {
    double normal_stiffness = 0.0;   // 0 = automatic
    double inplane_shear = -1.0;     // < 0 = automatic
    double out_of_plane_torsion = 0.0;  // 0 = automatic
};

/// Embeds an antiplane material into full 3D tensors. The in-plane couple
/// moduli land in the canonical gauge (zero secondary coupling); unused 3D
/// moduli take benign positive defaults so in-plane direction sweeps probe
/// exactly the antiplane quantities.
inline std::pair<CauchyTensor, CosseratTensor> embed_3d(const AntiplaneMaterial& m,
                                                        const EmbedOptions& opts = {}) {
    double c_ref = opts.normal_stiffness != 0.0
                       ? opts.normal_stiffness
                       : std::max({1.0, std::abs(m.c44), std::abs(m.c55)});
    double c_shear = opts.inplane_shear >= 0.0 ? opts.inplane_shear
                                               : 0.5 * (std::abs(m.c44) + std::abs(m.c55));
    double q_op = opts.out_of_plane_torsion != 0.0
                      ? opts.out_of_plane_torsion
                      : std::max({1.0, std::abs(m.b2), std::abs(m.b4)});

    Tensor4 c;
    auto put_shear = [&](int a, int b, double x) {
        c(a, b, a, b) = x;
        c(b, a, a, b) = x;
        c(a, b, b, a) = x;
        c(b, a, b, a) = x;
    };
    c(0, 0, 0, 0) = c(1, 1, 1, 1) = c(2, 2, 2, 2) = c_ref;
    put_shear(0, 2, m.c55);
    put_shear(1, 2, m.c44);
    put_shear(0, 1, c_shear);

    OrthotropicComponents oc;
    oc.b1111 = oc.b2222 = m.b1;
    oc.b1122 = 0.0;
    oc.b1212 = m.b2;
    oc.b1221 = m.b3;
    oc.b2121 = m.b4;
    oc.b1313 = oc.b3131 = oc.b2323 = oc.b3232 = q_op;
    oc.b1331 = oc.b2332 = 0.0;
    return {CauchyTensor(c), orthotropic_cosserat(oc)};
}

/// Grid of regime labels over a (beta, gamma) box, with the two analytic
/// ellipticity-loss boundary curves clipped to the box.
struct RegimeMap {
    double beta_min = 0, beta_max = 0, gamma_min = 0, gamma_max = 0;
    int res_beta = 0, res_gamma = 0;
    std::vector<Regime> labels;  // row-major: [ib * res_gamma + ig]
    std::vector<std::vector<Vec2>> boundaries;  // (beta, gamma) polylines

    Regime at(int ib, int ig) const { return labels[static_cast<std::size_t>(ib) * static_cast<std::size_t>(res_gamma) + static_cast<std::size_t>(ig)]; }
    double beta_of(int ib) const {
        return beta_min + (ib + 0.5) * (beta_max - beta_min) / res_beta;
    }
    double gamma_of(int ig) const {
        return gamma_min + (ig + 0.5) * (gamma_max - gamma_min) / res_gamma;
    }
};

inline RegimeMap regime_map(double beta_min, double beta_max, double gamma_min,
                            double gamma_max, int res_beta, int res_gamma) {
    if (!(beta_max > beta_min) || !(gamma_max > gamma_min))
        throw std::invalid_argument("regime map ranges must have positive area");
    if (res_beta < 2 || res_gamma < 2)
        throw std::invalid_argument("regime map needs at least 2 cells per axis");

    RegimeMap map;
    map.beta_min = beta_min;
    map.beta_max = beta_max;
    map.gamma_min = gamma_min;
    map.gamma_max = gamma_max;
    map.res_beta = res_beta;
    map.res_gamma = res_gamma;
    map.labels.resize(static_cast<std::size_t>(res_beta) * static_cast<std::size_t>(res_gamma));
    for (int ib = 0; ib < res_beta; ++ib)
        for (int ig = 0; ig < res_gamma; ++ig)
            map.labels[static_cast<std::size_t>(ib) * static_cast<std::size_t>(res_gamma) + static_cast<std::size_t>(ig)] =
                classify(map.beta_of(ib), map.gamma_of(ig)).regime;

    // vertical ray beta = 0, gamma > 0
    if (beta_min <= 0.0 && beta_max >= 0.0 && gamma_max > 0.0) {
        std::vector<Vec2> line;
        line.emplace_back(0.0, std::max(0.0, gamma_min));
        line.emplace_back(0.0, gamma_max);
        map.boundaries.push_back(line);
    }
    // curve gamma = -sqrt(beta), beta >= 0
    if (beta_max > 0.0 && gamma_min < 0.0) {
        std::vector<Vec2> curve;
        int samples = std::max(16, res_beta);
        double lo = std::max(0.0, beta_min);
        for (int i = 0; i <= samples; ++i) {
            double beta = lo + (beta_max - lo) * i / samples;
            double gamma = -std::sqrt(beta);
            if (gamma >= gamma_min && gamma <= gamma_max) curve.emplace_back(beta, gamma);
        }
        if (curve.size() >= 2) map.boundaries.push_back(curve);
    }
    return map;
}

}  // namespace cosserat
