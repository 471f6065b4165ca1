#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace cosserat;
using Catch::Approx;

namespace {

double tau_lambda_product(const CauchyTensor& c, const CosseratTensor& b, const Vec3& n) {
    Mat3 a_c = acoustic_cauchy(c, n);
    TangentSpectrum sp = tangent_spectrum(acoustic_cosserat(b, n), n);
    return n.dot(a_c * n) * sp.lambda2 * sp.lambda3;
}

}  // namespace

TEST_CASE("total symbol determinant: degenerate limits and large-k behavior") {
    std::mt19937_64 rng(41);
    Vec3 n = testsup::random_unit(rng);

    SECTION("zero wavenumber") {
        CHECK(total_symbol(isotropic_cauchy(1, 1), isotropic_cosserat(1, 0), n, 0.0).determinant ==
              0.0);
    }
    SECTION("classical reduction when the couple part vanishes") {
        CauchyTensor c = isotropic_cauchy(1.3, 0.7);
        CosseratTensor b = isotropic_cosserat(0, 0);
        double k = 1.7;
        TotalSymbol ts = total_symbol(c, b, n, k);
        double expected = std::pow(k, 6) * acoustic_cauchy(c, n).determinant();
        CHECK(ts.determinant == Approx(expected).epsilon(1e-12));
    }
    SECTION("asymptotic factorization at large k") {
        for (int rep = 0; rep < 10; ++rep) {
            CauchyTensor c = testsup::random_pd_cauchy(rng);
            CosseratTensor b = testsup::random_pd_cosserat(rng);
            Vec3 dir = testsup::random_unit(rng);
            double product = tau_lambda_product(c, b, dir);
            double e3 = std::abs(total_symbol(c, b, dir, 1e3).determinant / 1e30 - product) /
                        std::abs(product);
            double e4 = std::abs(total_symbol(c, b, dir, 1e4).determinant / 1e40 - product) /
                        std::abs(product);
            CHECK(e3 < 1e-2);
            CHECK(e4 < 1e-4);
            // convergence rate in 1/k is quadratic
            if (e4 > 1e-10) CHECK(std::log10(e3 / e4) >= 1.99);
        }
    }
}

TEST_CASE("modified principal symbol factorizes through the spectral product") {
    SECTION("isotropic reference value") {
        Vec3 n = Vec3(0.2, 0.3, 0.5).normalized();
        double det = modified_symbol_det(isotropic_cauchy(1, 1), isotropic_cosserat(1, 0), n, 1.0,
                                         1.0);
        CHECK(std::abs(det) == Approx(3.0).epsilon(1e-12));
    }
    SECTION("linearity in the modifier constant") {
        std::mt19937_64 rng(42);
        CauchyTensor c = testsup::random_pd_cauchy(rng);
        CosseratTensor b = testsup::random_pd_cosserat(rng);
        Vec3 n = testsup::random_unit(rng);
        double d1 = modified_symbol_det(c, b, n, 1.3, 1.0);
        double d2 = modified_symbol_det(c, b, n, 1.3, 2.0);
        CHECK(d2 == Approx(2.0 * d1).epsilon(1e-12));
        CHECK_THROWS_AS(modified_symbol_det(c, b, n, 1.0, 0.0), precondition_error);
    }
    SECTION("vanishes where a transverse eigenvalue vanishes") {
        AntiplaneMaterial m{0.0, 1.0, 1.0, 0.0, 0.0, 1.0};  // quartic form zero along x
        auto [c, b] = embed_3d(m);
        CHECK(std::abs(modified_symbol_det(c, b, Vec3::UnitX(), 1.0, 1.0)) < 1e-12);
    }
    SECTION("magnitude identity over random materials") {
        std::mt19937_64 rng(43);
        for (int rep = 0; rep < 20; ++rep) {
            CauchyTensor c = testsup::random_pd_cauchy(rng);
            CosseratTensor b = testsup::random_pd_cosserat(rng);
            Vec3 n = testsup::random_unit(rng);
            double k = 0.7 + rep * 0.2, a = 0.3 + rep * 0.1;
            double det = modified_symbol_det(c, b, n, k, a);
            double expected = std::abs(a) * std::pow(k, 12) *
                              std::abs(tau_lambda_product(c, b, n));
            CHECK(std::abs(det) == Approx(expected).epsilon(1e-8));
        }
    }
}

TEST_CASE("mixed-order symbol determinant magnitude") {
    SECTION("isotropic reference value") {
        Vec3 n = Vec3(1, -2, 2).normalized();
        DnSymbol dn = dn_symbol(isotropic_cauchy(1, 1), isotropic_cosserat(1, 0), n, 1.0);
        CHECK(std::abs(dn.determinant) == Approx(3.0).epsilon(1e-12));
    }
    SECTION("vanishes exactly where ellipticity fails") {
        AntiplaneMaterial m{0.0, 1.0, 1.0, 0.0, 0.0, 1.0};
        auto [c, b] = embed_3d(m);
        CHECK(std::abs(dn_symbol(c, b, Vec3::UnitX(), 1.0).determinant) < 1e-12);
    }
    SECTION("magnitude identity over random materials") {
        std::mt19937_64 rng(44);
        for (int rep = 0; rep < 20; ++rep) {
            CauchyTensor c = testsup::random_pd_cauchy(rng);
            CosseratTensor b = testsup::random_pd_cosserat(rng);
            Vec3 n = testsup::random_unit(rng);
            double k = 0.5 + rep * 0.25;
            DnSymbol dn = dn_symbol(c, b, n, k);
            double expected = std::pow(k, 13) * std::abs(tau_lambda_product(c, b, n));
            CHECK(std::abs(dn.determinant) == Approx(expected).epsilon(1e-8));
        }
    }
}

TEST_CASE("bundled symbol evaluation carries consistent diagnostics") {
    std::mt19937_64 rng(45);
    CauchyTensor c = testsup::random_pd_cauchy(rng);
    CosseratTensor b = testsup::random_pd_cosserat(rng);
    Vec3 n = testsup::random_unit(rng);
    SymbolEvaluation ev = evaluate_symbols(c, b, n, 2.0, 1.5);
    CHECK(ev.tau_nu == Approx(n.dot(acoustic_cauchy(c, n) * n)).epsilon(1e-13));
    CHECK(std::abs(ev.det_modified) ==
          Approx(1.5 * std::pow(2.0, 12) * std::abs(ev.tau_nu * ev.lambda2 * ev.lambda3))
              .epsilon(1e-8));
    CHECK(ev.det_total == Approx(total_symbol(c, b, n, 2.0).determinant).epsilon(1e-13));
}

TEST_CASE("modified-symbol verdict does not depend on the modifier") {
    std::mt19937_64 rng(46);
    for (int rep = 0; rep < 10; ++rep) {
        CauchyTensor c = rep % 2 ? testsup::random_pd_cauchy(rng)
                                 : testsup::random_indefinite_cauchy(rng);
        CosseratTensor b = testsup::random_pd_cosserat(rng);
        Vec3 n = testsup::random_unit(rng);
        double base = std::abs(modified_symbol_det(c, b, n, 1.0, 1.0));
        for (double a : {0.1, 10.0}) {
            double scaled = std::abs(modified_symbol_det(c, b, n, 1.0, a)) / a;
            CHECK(scaled == Approx(base).epsilon(1e-8));
        }
    }
}

TEST_CASE("ellipticity through symbols agrees with the spectral route") {
    AnalysisOptions opts;
    opts.sweep_density = 256;

    CHECK_FALSE(ellipticity_via_symbols(isotropic_cauchy(1, 1), isotropic_cosserat(0, 0), opts)
                    .verdict);
    CHECK(ellipticity_via_symbols(isotropic_cauchy(1, 1), isotropic_cosserat(1, 0), opts).verdict);

    AntiplaneMaterial m{0.0, 1.0, 1.0, 0.0, 0.0, 1.0};
    auto [c, b] = embed_3d(m);
    SymbolEllipticity se = ellipticity_via_symbols(c, b, opts);
    CHECK_FALSE(se.verdict);
    CHECK(std::abs(se.witness_n.x()) > 0.999);  // degeneracy sits on the x axis
}
