#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cosserat/acoustic.hpp"

namespace cosserat {

/// Verdict of one material-stability condition. The margin is the critical
/// quantity at the witness, normalized by tensor scale; its sign tracks the
/// verdict away from boundaries.
struct ConditionResult {
    bool verdict = false;
    double margin = 0.0;
    Vec3 witness_n = Vec3::UnitZ();
    std::optional<Vec3> witness_q;
    std::optional<Mat3> witness_tensor;
    bool boundary = false;
};

namespace detail {

/// Rank-one quadratic form of the couple-stress tensor at fixed n, as a
/// matrix over the free vector: G_pm = B_pqmn n_q n_n. Its minimum
/// eigenvalue is the exact minimum of the dyad form over unit q.
inline Mat3 dyad_form_matrix(const Tensor4& b, const Vec3& n) {
    Mat3 g = Mat3::Zero();
    for (int p = 0; p < 3; ++p)
        for (int m = 0; m < 3; ++m) {
            double acc = 0.0;
            for (int q = 0; q < 3; ++q)
                for (int j = 0; j < 3; ++j) acc += b(p, q, m, j) * n[q] * n[j];
            g(p, m) = acc;
        }
    return 0.5 * (g + g.transpose());
}

inline double min_eig_sym3(const Mat3& a, Vec3* vec = nullptr) {
    Vec3 values;
    Mat3 vectors;
    eigen_sym3(a, values, vectors);
    if (vec) *vec = vectors.col(0);
    return values(0);
}

inline void finish(ConditionResult& r, double tol, double band) {
    r.verdict = r.margin > tol;
    r.boundary = std::abs(r.margin) <= band;
}

}  // namespace detail

/// Positivity of the classical tensor on symmetric dyads: equivalent to the
/// classical acoustic tensor being positive definite at every direction.
inline ConditionResult check_se_cauchy(const CauchyTensor& c,
                                       const AnalysisOptions& opts = {}) {
    double s = c.scale();
    auto f = [&](const Vec3& n) {
        return safe_ratio(detail::min_eig_sym3(acoustic_cauchy(c, n)), s);
    };
    SweepMinimum m = sweep_minimize(f, opts);
    ConditionResult r;
    r.margin = m.value;
    r.witness_n = m.direction;
    Vec3 q;
    detail::min_eig_sym3(acoustic_cauchy(c, m.direction), &q);
    r.witness_q = q;
    detail::finish(r, opts.tol_rel, opts.boundary_band);
    return r;
}

/// Positivity of the couple-stress tensor on dyads q x n over both unit
/// spheres. Strictly stronger than positivity of the couple-stress acoustic
/// tensor; the q-minimum at fixed n is solved exactly as an eigenproblem.
inline ConditionResult check_se_cosserat(const CosseratTensor& b,
                                         const AnalysisOptions& opts = {}) {
    double s = b.scale();
    auto f = [&](const Vec3& n) {
        return safe_ratio(detail::min_eig_sym3(detail::dyad_form_matrix(b.components(), n)), s);
    };
    SweepMinimum m = sweep_minimize(f, opts);
    ConditionResult r;
    r.margin = m.value;
    r.witness_n = m.direction;
    Vec3 q;
    detail::min_eig_sym3(detail::dyad_form_matrix(b.components(), m.direction), &q);
    r.witness_q = q;
    detail::finish(r, opts.tol_rel, opts.boundary_band);
    return r;
}

/// Weak (boundary-inclusive) variants of the dyad positivity conditions.
struct SseResult {
    ConditionResult cauchy;
    ConditionResult cosserat;
};

inline SseResult check_sse(const CauchyTensor& c, const CosseratTensor& b,
                           const AnalysisOptions& opts = {}) {
    SseResult out;
    out.cauchy = check_se_cauchy(c, opts);
    out.cosserat = check_se_cosserat(b, opts);
    out.cauchy.verdict = out.cauchy.margin >= -opts.tol_rel;
    out.cosserat.verdict = out.cosserat.margin >= -opts.tol_rel;
    return out;
}

namespace detail {

/// Per-direction wave-propagation margin. Requires both acoustic parts to be
/// positive semidefinite with no shared null direction; the shared-null test
/// uses the minimum eigenvalue of the scale-normalized sum, whose n-diagonal
/// entry also enforces positivity of the longitudinal classical form.
inline double wp_margin_at(const CauchyTensor& c, const CosseratTensor& b,
                           const Vec3& n, double s_c, double s_b, double tol,
                           Vec3* witness_p = nullptr) {
    Mat3 a_c = acoustic_cauchy(c, n);
    Mat3 a_b = acoustic_cosserat(b, n);
    Vec3 pc, pb;
    double min_c = safe_ratio(min_eig_sym3(a_c, &pc), s_c);
    double min_b = safe_ratio(min_eig_sym3(a_b, &pb), s_b);
    if (min_c < -tol || min_b < -tol) {
        if (witness_p) *witness_p = min_c <= min_b ? pc : pb;
        return std::min(min_c, min_b);
    }
    Mat3 sum = Mat3::Zero();
    if (s_c > 0) sum += a_c / s_c;
    if (s_b > 0) sum += a_b / s_b;
    Vec3 ps;
    double joint = min_eig_sym3(sum, &ps);
    if (witness_p) *witness_p = ps;
    return joint;
}

}  // namespace detail

/// Existence of three real plane-wave branches with positive squared speed
/// for every direction and every real non-zero wavenumber.
inline ConditionResult check_wp(const CauchyTensor& c, const CosseratTensor& b,
                                const AnalysisOptions& opts = {}) {
    double s_c = c.scale(), s_b = b.scale();
    auto f = [&](const Vec3& n) {
        return detail::wp_margin_at(c, b, n, s_c, s_b, opts.tol_rel);
    };
    SweepMinimum m = sweep_minimize(f, opts);
    ConditionResult r;
    r.margin = m.value;
    r.witness_n = m.direction;
    Vec3 p;
    detail::wp_margin_at(c, b, m.direction, s_c, s_b, opts.tol_rel, &p);
    r.witness_q = p;
    detail::finish(r, opts.tol_rel, opts.boundary_band);
    return r;
}

namespace detail {

inline double ellipticity_margin_at(const CauchyTensor& c, const CosseratTensor& b,
                                    const Vec3& n, double s_c, double s_b) {
    Mat3 a_c = acoustic_cauchy(c, n);
    double tau = n.dot(a_c * n);
    TangentSpectrum sp = tangent_spectrum(acoustic_cosserat(b, n), n);
    return std::min({safe_ratio(std::abs(tau), s_c),
                     safe_ratio(std::abs(sp.lambda2), s_b),
                     safe_ratio(std::abs(sp.lambda3), s_b)});
}

}  // namespace detail

/// Non-degeneracy of the equilibrium operator: the longitudinal classical
/// form and both transverse couple-stress eigenvalues stay away from zero at
/// every direction.
inline ConditionResult check_ellipticity(const CauchyTensor& c, const CosseratTensor& b,
                                         const AnalysisOptions& opts = {}) {
    double s_c = c.scale(), s_b = b.scale();
    auto f = [&](const Vec3& n) {
        return detail::ellipticity_margin_at(c, b, n, s_c, s_b);
    };
    SweepMinimum m = sweep_minimize(f, opts);
    ConditionResult r;
    r.margin = m.value;
    r.witness_n = m.direction;
    detail::finish(r, opts.tol_rel, opts.boundary_band);
    return r;
}

/// All stability conditions of one material, evaluated with a shared sweep
/// configuration and tolerance, plus an internal consistency audit of the
/// implication hierarchy.
struct StabilityReport {
    ConditionResult pd_cauchy;
    ConditionResult pd_cosserat;
    ConditionResult se_cauchy;
    ConditionResult se_cosserat;
    ConditionResult sse_cauchy;
    ConditionResult sse_cosserat;
    ConditionResult ellipticity;
    ConditionResult wave_propagation;
    bool hierarchy_consistent = true;
    std::vector<std::string> notes;
    AnalysisOptions options;
};

namespace detail {

inline ConditionResult from_pd(const PdResult& pd, const AnalysisOptions& opts) {
    ConditionResult r;
    r.margin = safe_ratio(pd.min_eigenvalue, std::max(pd.scale, 0.0));
    if (pd.scale == 0.0) r.margin = 0.0;
    r.verdict = pd.positive_definite;
    r.boundary = std::abs(r.margin) <= opts.boundary_band;
    r.witness_tensor = pd.witness;
    return r;
}

/// An implication counts as violated only when the premise holds clearly and
/// the conclusion fails clearly; inside the boundary band the differing
/// margin normalizations of the two sides make strict comparisons meaningless.
inline void audit(StabilityReport& r, const std::string& name, const ConditionResult& from,
                  const ConditionResult& to, double band) {
    if (from.verdict && from.margin > band && !to.verdict && to.margin < -band) {
        r.hierarchy_consistent = false;
        r.notes.push_back("hierarchy violation: " + name);
    }
}

}  // namespace detail

inline StabilityReport full_report(const CauchyTensor& c, const CosseratTensor& b,
                                   const AnalysisOptions& opts = {}) {
    StabilityReport r;
    r.options = opts;
    r.pd_cauchy = detail::from_pd(check_pd_cauchy(c, opts.tol_rel), opts);
    r.pd_cosserat = detail::from_pd(check_pd_cosserat(b, opts.tol_rel), opts);
    r.se_cauchy = check_se_cauchy(c, opts);
    r.se_cosserat = check_se_cosserat(b, opts);
    SseResult sse = check_sse(c, b, opts);
    r.sse_cauchy = sse.cauchy;
    r.sse_cosserat = sse.cosserat;
    r.ellipticity = check_ellipticity(c, b, opts);
    r.wave_propagation = check_wp(c, b, opts);

    double band = opts.boundary_band;
    detail::audit(r, "PD_C => SE_C", r.pd_cauchy, r.se_cauchy, band);
    detail::audit(r, "PD_B => SE_B", r.pd_cosserat, r.se_cosserat, band);
    detail::audit(r, "SE_C => SSE_C", r.se_cauchy, r.sse_cauchy, band);
    detail::audit(r, "SE_B => SSE_B", r.se_cosserat, r.sse_cosserat, band);
    ConditionResult se_both;
    se_both.verdict = r.se_cauchy.verdict && r.se_cosserat.verdict;
    se_both.margin = std::min(r.se_cauchy.margin, r.se_cosserat.margin);
    detail::audit(r, "SE => E", se_both, r.ellipticity, band);
    detail::audit(r, "SE => WP", se_both, r.wave_propagation, band);
    if (!r.hierarchy_consistent)
        throw std::logic_error("stability report failed its hierarchy audit: " + r.notes.front() +
                               " (sweep resolution too coarse for this material)");
    return r;
}

}  // namespace cosserat
