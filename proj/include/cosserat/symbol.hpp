#pragma once

#include "cosserat/stability.hpp"

namespace cosserat {

namespace detail {

template <class S>
S det3(const S a[3][3]) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

/// Both acoustic parts in extended precision. The determinant of the total
/// symbol loses about k^2 relative digits to cancellation at large k, so the
/// asymptotic studies at k ~ 1e4 need the wider mantissa end to end.
inline void acoustic_parts_ext(const CauchyTensor& c, const CosseratTensor& b,
                               const Vec3& n, long double a_c[3][3],
                               long double a_b[3][3]) {
    classical_acoustic<long double>(c.components(), n, a_c);
    cosserat_acoustic<long double>(b.components(), n, a_b);
}

}  // namespace detail

/// The symbol of the equilibrium operator at wavevector k n, which coincides
/// with the acoustic tensor, together with its determinant.
struct TotalSymbol {
    Mat3 matrix = Mat3::Zero();
    double determinant = 0.0;
};

inline TotalSymbol total_symbol(const CauchyTensor& c, const CosseratTensor& b,
                                const Vec3& n, double k) {
    detail::require_unit(n);
    long double a_c[3][3], a_b[3][3];
    detail::acoustic_parts_ext(c, b, n, a_c, a_b);
    long double k2 = static_cast<long double>(k) * k;
    long double k4 = k2 * k2;
    long double total[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) total[i][j] = k2 * a_c[i][j] + k4 * a_b[i][j];
    TotalSymbol out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.matrix(i, j) = static_cast<double>(total[i][j]);
    out.determinant = static_cast<double>(detail::det3(total));
    return out;
}

/// Determinant of the modified principal symbol
///   k^4 (A_B - a n x (A_C n)),
/// which factorizes as -a k^12 tau_nu lambda2 lambda3 in this assembly.
inline double modified_symbol_det(const CauchyTensor& c, const CosseratTensor& b,
                                  const Vec3& n, double k, double a) {
    detail::require_unit(n);
    if (a == 0.0) throw precondition_error("modifier constant must be non-zero", a);
    long double a_c[3][3], a_b[3][3];
    detail::acoustic_parts_ext(c, b, n, a_c, a_b);
    long double acn[3];
    for (int i = 0; i < 3; ++i)
        acn[i] = a_c[i][0] * n[0] + a_c[i][1] * n[1] + a_c[i][2] * n[2];
    long double m[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = a_b[i][j] - static_cast<long double>(a) * n[i] * acn[j];
    long double k2 = static_cast<long double>(k) * k;
    long double k12 = k2 * k2 * k2;
    k12 = k12 * k12;
    return static_cast<double>(k12 * detail::det3(m));
}

/// Mixed-order principal symbol of the reduced (divergence + transverse curl)
/// system in the deterministic (n, t, s) frame, with its determinant of
/// magnitude k^13 |tau_nu lambda2 lambda3|.
struct DnSymbol {
    CMat3 matrix = CMat3::Zero();
    Complex determinant = 0.0;
};

inline DnSymbol dn_symbol(const CauchyTensor& c, const CosseratTensor& b,
                          const Vec3& n, double k) {
    detail::require_unit(n);
    if (!(k > 0.0)) throw precondition_error("wavenumber must be positive", k);
    Mat3 a_c = acoustic_cauchy(c, n);
    Mat3 a_b = acoustic_cosserat(b, n);
    auto [t, s] = tangent_frame(n);
    double k2 = k * k;
    Complex ik3(0.0, k * k * k);
    DnSymbol out;
    out.matrix(0, 0) = ik3 * n.dot(a_c * n);
    out.matrix(0, 1) = ik3 * n.dot(a_c * t);
    out.matrix(0, 2) = ik3 * n.dot(a_c * s);
    out.matrix(1, 1) = ik3 * (-k2 * t.dot(a_b * t));
    out.matrix(1, 2) = ik3 * (-k2 * t.dot(a_b * s));
    out.matrix(2, 1) = ik3 * (-k2 * s.dot(a_b * t));
    out.matrix(2, 2) = ik3 * (-k2 * s.dot(a_b * s));
    out.determinant = out.matrix.determinant();
    return out;
}

/// One-stop evaluation of all symbol diagnostics at (n, k).
struct SymbolEvaluation {
    Vec3 n = Vec3::UnitZ();
    double k = 1.0;
    Mat3 total = Mat3::Zero();
    double det_total = 0.0;
    double tau_nu = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    double modifier = 1.0;
    double det_modified = 0.0;
    Complex det_dn = 0.0;
};

inline SymbolEvaluation evaluate_symbols(const CauchyTensor& c, const CosseratTensor& b,
                                         const Vec3& n, double k, double a = 1.0) {
    SymbolEvaluation ev;
    ev.n = n;
    ev.k = k;
    TotalSymbol ts = total_symbol(c, b, n, k);
    ev.total = ts.matrix;
    ev.det_total = ts.determinant;
    Mat3 a_c = acoustic_cauchy(c, n);
    ev.tau_nu = n.dot(a_c * n);
    TangentSpectrum sp = tangent_spectrum(acoustic_cosserat(b, n), n);
    ev.lambda2 = sp.lambda2;
    ev.lambda3 = sp.lambda3;
    ev.modifier = a;
    ev.det_modified = modified_symbol_det(c, b, n, k, a);
    ev.det_dn = dn_symbol(c, b, n, std::abs(k) > 0 ? std::abs(k) : 1.0).determinant;
    return ev;
}

/// Ellipticity decided through the three symbol routes (large-k asymptotics
/// of the total determinant, modified principal symbol, mixed-order symbol).
/// Checked for agreement with the spectral route outside the boundary band.
struct SymbolEllipticity {
    bool verdict = false;
    double margin = 0.0;  // worst normalized route product over directions
    Vec3 witness_n = Vec3::UnitZ();
};

inline SymbolEllipticity ellipticity_via_symbols(const CauchyTensor& c,
                                                 const CosseratTensor& b,
                                                 const AnalysisOptions& opts = {}) {
    double s_c = c.scale(), s_b = b.scale();
    double norm = s_c * s_b * s_b;
    const double k_probe = 1e3;
    double k10 = std::pow(k_probe, 10);
    auto f = [&](const Vec3& n) {
        double asym = std::abs(total_symbol(c, b, n, k_probe).determinant) / k10;
        double mod = std::abs(modified_symbol_det(c, b, n, 1.0, 1.0));
        double dn = std::abs(dn_symbol(c, b, n, 1.0).determinant);
        return std::min({safe_ratio(asym, norm), safe_ratio(mod, norm), safe_ratio(dn, norm)});
    };
    SweepMinimum m = sweep_minimize(f, opts);
    SymbolEllipticity out;
    out.margin = m.value;
    out.witness_n = m.direction;
    out.verdict = m.value > opts.tol_rel;

    ConditionResult spectral = check_ellipticity(c, b, opts);
    if (spectral.verdict != out.verdict && std::abs(spectral.margin) > opts.boundary_band &&
        std::abs(out.margin) > opts.boundary_band)
        throw std::logic_error("symbol-route ellipticity disagrees with the spectral route");
    return out;
}

}  // namespace cosserat
