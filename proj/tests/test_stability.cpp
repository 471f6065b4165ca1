#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace cosserat;
using Catch::Approx;

namespace {

AnalysisOptions fast_opts(int density = 512) {
    AnalysisOptions o;
    o.sweep_density = density;
    return o;
}

bool se_closed(double l, double m, double e, double ep) {
    return l + 2 * m > 0 && m > 0 && e > 0 && e + ep > 0;
}
bool wp_closed(double l, double m, double e) {
    return l + 2 * m > 0 && ((m > 0 && e >= 0) || (m >= 0 && e > 0));
}
bool e_closed(double l, double m, double e) { return l + 2 * m != 0 && e != 0; }

}  // namespace

TEST_CASE("dyad positivity of the classical tensor (isotropic closed forms)") {
    CHECK(check_se_cauchy(isotropic_cauchy(1, 1), fast_opts()).verdict);
    CHECK_FALSE(check_se_cauchy(isotropic_cauchy(-3, 1), fast_opts()).verdict);
    ConditionResult boundary = check_se_cauchy(isotropic_cauchy(2, 0), fast_opts());
    CHECK_FALSE(boundary.verdict);
    CHECK(boundary.boundary);

    ConditionResult r = check_se_cauchy(isotropic_cauchy(1, 1), fast_opts());
    CHECK(r.margin == Approx(1.0 / 3.0).epsilon(1e-9));  // min(l+2m, m) / max component
}

TEST_CASE("dyad positivity of the couple tensor is weaker than definiteness") {
    CHECK(check_se_cosserat(isotropic_cosserat(1, 0), fast_opts()).verdict);
    CHECK_FALSE(check_se_cosserat(isotropic_cosserat(1, -1.5), fast_opts()).verdict);

    // moduli with b2 b4 - b3^2 < 0 but |b3| < b1 + sqrt(b2 b4)
    AntiplaneMaterial m{1.0, 1.0, 1.0, 1.0, 1.5, 1.0};
    auto [c3, b3] = embed_3d(m);
    CHECK(check_se_cosserat(b3, fast_opts()).verdict);
    CHECK_FALSE(check_pd_cosserat(b3).positive_definite);
    CHECK(antiplane_conditions(m).se_cosserat);
    CHECK_FALSE(antiplane_conditions(m).pd_cosserat);
}

TEST_CASE("dyad form sweep agrees with a direct two-sphere scan") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 5; ++rep) {
        CosseratTensor b = testsup::random_indefinite_cosserat(rng);
        ConditionResult r = check_se_cosserat(b, fast_opts(1024));
        double brute = std::numeric_limits<double>::infinity();
        for (const Vec3& n : fibonacci_directions(96))
            for (const Vec3& q : fibonacci_directions(96))
                brute = std::min(brute, testsup::oracle_dyad_form(b, q, n));
        // the sweep solves q exactly per direction, so it must be at least as low
        CHECK(r.margin * b.scale() <= brute + 1e-9 * std::max(1.0, std::abs(brute)));
    }
}

TEST_CASE("wave-propagation condition splits from ellipticity") {
    CHECK(check_wp(isotropic_cauchy(1, 0), isotropic_cosserat(1, 0), fast_opts()).verdict);
    CHECK_FALSE(check_wp(isotropic_cauchy(2, -0.1), isotropic_cosserat(1, 0), fast_opts()).verdict);
    CHECK(check_wp(isotropic_cauchy(1, 1), isotropic_cosserat(0, 0), fast_opts()).verdict);

    CHECK_FALSE(check_ellipticity(isotropic_cauchy(1, 1), isotropic_cosserat(0, 0), fast_opts()).verdict);
    CHECK(check_ellipticity(isotropic_cauchy(1, -0.5), isotropic_cosserat(1, 0), fast_opts()).verdict);
    CHECK(check_ellipticity(isotropic_cauchy(1, 1), isotropic_cosserat(1, 0), fast_opts()).verdict);
}

TEST_CASE("weak variants accept the boundary") {
    SseResult r = check_sse(isotropic_cauchy(1, 0), isotropic_cosserat(1, 0), fast_opts());
    CHECK(r.cauchy.verdict);
    CHECK_FALSE(check_se_cauchy(isotropic_cauchy(1, 0), fast_opts()).verdict);

    SseResult neg = check_sse(isotropic_cauchy(1, -0.1), isotropic_cosserat(1, 0), fast_opts());
    CHECK_FALSE(neg.cauchy.verdict);
}

TEST_CASE("full report on the reference and extreme materials") {
    AnalysisOptions opts = fast_opts(1024);
    SECTION("well-behaved isotropic material") {
        StabilityReport r = full_report(isotropic_cauchy(1, 1), isotropic_cosserat(1, 0), opts);
        CHECK(r.pd_cauchy.verdict);
        CHECK(r.pd_cosserat.verdict);
        CHECK(r.se_cauchy.verdict);
        CHECK(r.se_cosserat.verdict);
        CHECK(r.ellipticity.verdict);
        CHECK(r.wave_propagation.verdict);
        CHECK(r.hierarchy_consistent);
    }
    SECTION("null classical stiffness") {
        StabilityReport r = full_report(isotropic_cauchy(0, 0), isotropic_cosserat(1, 0), opts);
        CHECK_FALSE(r.pd_cauchy.verdict);
        CHECK_FALSE(r.se_cauchy.verdict);
        CHECK_FALSE(r.ellipticity.verdict);
        CHECK_FALSE(r.wave_propagation.verdict);
        CHECK(r.pd_cosserat.verdict);
        // the longitudinal classical form vanishes identically
        for (const Vec3& n : fibonacci_directions(16))
            CHECK(n.dot(acoustic_cauchy(isotropic_cauchy(0, 0), n) * n) == 0.0);
    }
    SECTION("null shear stiffness cured by couple-stress action") {
        StabilityReport r = full_report(isotropic_cauchy(1, 0), isotropic_cosserat(1, 0), opts);
        CHECK_FALSE(r.pd_cauchy.verdict);
        CHECK(r.ellipticity.verdict);
        CHECK(r.wave_propagation.verdict);
    }
}

TEST_CASE("isotropic sweep verdicts match the closed forms on a coarse grid") {
    AnalysisOptions opts = fast_opts(128);
    for (double l : {-3.0, -1.0, 0.5, 2.0})
        for (double m : {-0.5, 0.25, 1.0})
            for (double e : {-0.5, 0.25, 1.0})
                for (double ep : {-0.5, 0.0, 0.5}) {
                    double boundary_gap = std::min({std::abs(l + 2 * m), std::abs(m),
                                                    std::abs(e), std::abs(e + ep)});
                    if (boundary_gap < 1e-6) continue;
                    CauchyTensor c = isotropic_cauchy(l, m);
                    CosseratTensor b = isotropic_cosserat(e, ep);
                    CHECK(check_se_cauchy(c, opts).verdict == (l + 2 * m > 0 && m > 0));
                    CHECK(check_se_cosserat(b, opts).verdict == (e > 0 && e + ep > 0));
                    CHECK(check_wp(c, b, opts).verdict == wp_closed(l, m, e));
                    CHECK(check_ellipticity(c, b, opts).verdict == e_closed(l, m, e));
                    bool se = se_closed(l, m, e, ep);
                    CHECK((check_se_cauchy(c, opts).verdict && check_se_cosserat(b, opts).verdict) ==
                          se);
                }
}

TEST_CASE("hierarchy holds over a random ensemble") {
    std::mt19937_64 rng(32);
    AnalysisOptions opts = fast_opts(256);
    for (int rep = 0; rep < 60; ++rep) {
        CauchyTensor c = rep % 3 == 0 ? testsup::random_indefinite_cauchy(rng)
                                      : testsup::random_pd_cauchy(rng);
        CosseratTensor b = rep % 4 == 0 ? testsup::random_indefinite_cosserat(rng)
                                        : testsup::random_pd_cosserat(rng);
        StabilityReport r = full_report(c, b, opts);  // throws on audit failure
        CHECK(r.hierarchy_consistent);
        if (r.pd_cauchy.verdict) CHECK(r.se_cauchy.verdict);
        if (r.pd_cosserat.verdict) CHECK(r.se_cosserat.verdict);
        if (r.se_cauchy.verdict) CHECK(r.sse_cauchy.verdict);
        if (r.se_cosserat.verdict) CHECK(r.sse_cosserat.verdict);
        if (r.se_cauchy.verdict && r.se_cosserat.verdict) {
            CHECK(r.ellipticity.verdict);
            CHECK(r.wave_propagation.verdict);
        }
    }
}

TEST_CASE("verdicts, witnesses, and normalized margins are scale invariant") {
    std::mt19937_64 rng(33);
    CauchyTensor c = testsup::random_indefinite_cauchy(rng);
    CosseratTensor b = testsup::random_pd_cosserat(rng);
    // a power-of-two factor scales components exactly
    CauchyTensor c4(4.0 * c.components());
    CosseratTensor b4(4.0 * b.components());

    AnalysisOptions opts = fast_opts(512);
    StabilityReport r1 = full_report(c, b, opts);
    StabilityReport r2 = full_report(c4, b4, opts);

    auto same = [](const ConditionResult& a, const ConditionResult& bb) {
        CHECK(a.verdict == bb.verdict);
        CHECK(a.margin == Approx(bb.margin).margin(1e-12));
        CHECK((a.witness_n - bb.witness_n).norm() < 1e-9);
    };
    same(r1.se_cauchy, r2.se_cauchy);
    same(r1.se_cosserat, r2.se_cosserat);
    same(r1.ellipticity, r2.ellipticity);
    same(r1.wave_propagation, r2.wave_propagation);
    same(r1.pd_cauchy, r2.pd_cauchy);
}

TEST_CASE("witnesses reproduce the reported margins") {
    std::mt19937_64 rng(34);
    CauchyTensor c = testsup::random_pd_cauchy(rng);
    CosseratTensor b = testsup::random_pd_cosserat(rng);
    AnalysisOptions opts = fast_opts(512);

    ConditionResult se_c = check_se_cauchy(c, opts);
    Eigen::SelfAdjointEigenSolver<Mat3> es(acoustic_cauchy(c, se_c.witness_n));
    CHECK(es.eigenvalues()(0) / c.scale() == Approx(se_c.margin).margin(1e-8));

    ConditionResult e = check_ellipticity(c, b, opts);
    Mat3 a_c = acoustic_cauchy(c, e.witness_n);
    TangentSpectrum sp = tangent_spectrum(acoustic_cosserat(b, e.witness_n), e.witness_n);
    double recomputed = std::min({std::abs(e.witness_n.dot(a_c * e.witness_n)) / c.scale(),
                                  std::abs(sp.lambda2) / b.scale(),
                                  std::abs(sp.lambda3) / b.scale()});
    CHECK(recomputed == Approx(e.margin).margin(1e-8));
}
