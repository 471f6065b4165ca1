#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace cosserat;
using Catch::Approx;

namespace {

Vec3 sorted_eigs(const Mat3& a) {
    Eigen::SelfAdjointEigenSolver<Mat3> es(a);
    return es.eigenvalues();
}

}  // namespace

TEST_CASE("classical acoustic tensor: isotropic closed form and oracle agreement") {
    CauchyTensor c = isotropic_cauchy(1.0, 1.0);
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 5; ++rep) {
        Vec3 n = testsup::random_unit(rng);
        Vec3 eigs = sorted_eigs(acoustic_cauchy(c, n));
        CHECK(eigs(0) == Approx(1.0).epsilon(1e-12));
        CHECK(eigs(1) == Approx(1.0).epsilon(1e-12));
        CHECK(eigs(2) == Approx(3.0).epsilon(1e-12));
    }

    CHECK(acoustic_cauchy(isotropic_cauchy(0, 0), Vec3::UnitX()).cwiseAbs().maxCoeff() == 0.0);

    for (int rep = 0; rep < 50; ++rep) {
        CauchyTensor rc = testsup::random_indefinite_cauchy(rng);
        Vec3 n = testsup::random_unit(rng);
        Mat3 a = acoustic_cauchy(rc, n);
        Mat3 oracle = testsup::oracle_acoustic_cauchy(rc, n);
        double scale = std::max(1.0, oracle.cwiseAbs().maxCoeff());
        CHECK((a - oracle).cwiseAbs().maxCoeff() < 1e-12 * scale);
        CHECK((a - a.transpose()).cwiseAbs().maxCoeff() < 1e-13 * scale);
    }

    Vec3 bad(1.0, 0.2, 0.0);
    CHECK_THROWS_AS(acoustic_cauchy(c, bad), precondition_error);
}

TEST_CASE("couple-stress acoustic tensor: singular with n in its kernel") {
    std::mt19937_64 rng(22);
    CosseratTensor iso = isotropic_cosserat(0.5, 0.35);
    for (int rep = 0; rep < 5; ++rep) {
        Vec3 n = testsup::random_unit(rng);
        Mat3 a = acoustic_cosserat(iso, n);
        Vec3 eigs = sorted_eigs(a);
        CHECK(eigs(0) == Approx(0.0).margin(1e-13));
        CHECK(eigs(1) == Approx(0.5).epsilon(1e-12));
        CHECK(eigs(2) == Approx(0.5).epsilon(1e-12));
    }

    for (int rep = 0; rep < 50; ++rep) {
        CosseratTensor rb = testsup::random_indefinite_cosserat(rng);
        Vec3 n = testsup::random_unit(rng);
        Mat3 a = acoustic_cosserat(rb, n);
        Mat3 oracle = testsup::oracle_acoustic_cosserat(rb, n);
        double scale = std::max(1.0, oracle.cwiseAbs().maxCoeff());
        CHECK((a - oracle).cwiseAbs().maxCoeff() < 1e-12 * scale);
        CHECK((a * n).norm() < 1e-12 * scale);
        CHECK(std::abs(a.determinant()) < 1e-12 * std::pow(std::max(1.0, a.norm()), 3));
    }
}

TEST_CASE("acoustic pair and total assembly") {
    CauchyTensor c = isotropic_cauchy(1.0, 1.0);
    CosseratTensor b = isotropic_cosserat(0.5, 0.0);
    Vec3 n = Vec3(1, 2, -1).normalized();
    AcousticPair pair = make_acoustic_pair(c, b, n);

    Mat3 a2 = total_acoustic(pair, 2.0);
    CHECK((a2 - 12.0 * Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(total_acoustic(pair, 0.0).cwiseAbs().maxCoeff() == 0.0);
    CHECK((total_acoustic(pair, 1.0) - (pair.a_c + pair.a_b)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("plane-wave branches for the isotropic reference") {
    CauchyTensor c = isotropic_cauchy(1.0, 1.0);
    CosseratTensor b = isotropic_cosserat(1.0, 0.0);
    Vec3 n = Vec3(0.3, -0.4, 0.87).normalized();
    WaveSolution sol = wave_solve(c, b, 1.0, n, 2.0);

    CHECK(sol.branches[0].omega_squared == Approx(20.0).epsilon(1e-12));
    CHECK(sol.branches[1].omega_squared == Approx(20.0).epsilon(1e-12));
    CHECK(sol.branches[2].omega_squared == Approx(12.0).epsilon(1e-12));

    // the longitudinal branch travels at sqrt(lambda + 2 mu) regardless of k
    for (double k : {0.5, 2.0, 7.0}) {
        WaveSolution s = wave_solve(c, b, 1.0, n, k);
        bool found = false;
        for (const WaveBranch& br : s.branches)
            if (std::abs(std::abs(br.amplitude.dot(n)) - 1.0) < 1e-10) {
                CHECK(br.phase_velocity == Approx(std::sqrt(3.0)).epsilon(1e-12));
                found = true;
            }
        CHECK(found);
    }

    CHECK_THROWS_AS(wave_solve(c, b, -1.0, n, 1.0), precondition_error);
    CHECK_THROWS_AS(wave_solve(c, b, 1.0, n, 0.0), precondition_error);
}

TEST_CASE("extreme materials: pure couple-stress and vanished shear") {
    Vec3 n = Vec3(1, 1, 1).normalized();
    SECTION("null classical stiffness") {
        CauchyTensor c = isotropic_cauchy(0.0, 0.0);
        CosseratTensor b = isotropic_cosserat(1.0, 0.0);
        for (double k : {0.5, 1.0, 3.0}) {
            WaveSolution s = wave_solve(c, b, 1.0, n, k);
            CHECK(s.branches[2].omega_squared == Approx(0.0).margin(1e-12));
            CHECK(s.branches[0].phase_velocity == Approx(k).epsilon(1e-12));  // k sqrt(eta/rho)
        }
    }
    SECTION("null shear stiffness") {
        CauchyTensor c = isotropic_cauchy(1.0, 0.0);
        CosseratTensor b = isotropic_cosserat(1.0, 0.0);
        WaveSolution s = wave_solve(c, b, 1.0, n, 2.0);
        bool found = false;
        for (const WaveBranch& br : s.branches)
            if (std::abs(std::abs(br.amplitude.dot(n)) - 1.0) < 1e-10) {
                CHECK(br.phase_velocity == Approx(1.0).epsilon(1e-12));  // sqrt(lambda/rho)
                found = true;
            }
        CHECK(found);
    }
}

TEST_CASE("wave branch reconstruction and orthogonality over random materials") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 40; ++rep) {
        CauchyTensor c = testsup::random_pd_cauchy(rng);
        CosseratTensor b = testsup::random_pd_cosserat(rng);
        Vec3 n = testsup::random_unit(rng);
        double k = 0.3 + 3.0 * rep / 39.0;
        WaveSolution s = wave_solve(c, b, 1.3, n, k);
        Mat3 a = total_acoustic(make_acoustic_pair(c, b, n), k);
        double scale = std::max(1.0, a.norm());
        for (int i = 0; i < 3; ++i) {
            const WaveBranch& br = s.branches[static_cast<std::size_t>(i)];
            CHECK((a * br.amplitude - 1.3 * br.omega_squared * br.amplitude).norm() <
                  1e-10 * scale);
            for (int j = i + 1; j < 3; ++j)
                CHECK(std::abs(br.amplitude.dot(s.branches[static_cast<std::size_t>(j)].amplitude)) <
                      1e-10);
        }
        CHECK(s.branches[0].omega_squared >= s.branches[1].omega_squared);
        CHECK(s.branches[1].omega_squared >= s.branches[2].omega_squared);
    }
}

TEST_CASE("longitudinal directions: isotropy flag, cubic axes, generic count") {
    SECTION("isotropic: every direction qualifies") {
        LongitudinalResult r = longitudinal_directions(isotropic_cauchy(1.0, 1.0), 64);
        CHECK(r.all_directions_longitudinal);
        CHECK_FALSE(r.fewer_than_three);
    }
    SECTION("cubic symmetry: axes and diagonals appear") {
        Mat6 m = Mat6::Zero();
        double c11 = 3.0, c12 = 1.2, shear = 1.6;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = i == j ? c11 : c12;
        for (int i = 3; i < 6; ++i) m(i, i) = 4.0 * shear;
        CauchyTensor cubic = CauchyTensor::from_reduced_matrix(m);

        // alignment residual vanishes at the symmetry directions
        for (Vec3 n : {Vec3(1, 0, 0), Vec3(1, 1, 0).normalized(), Vec3(1, 1, 1).normalized()}) {
            Mat3 a = acoustic_cauchy(cubic, n);
            Vec3 an = a * n;
            CHECK((an - n.dot(an) * n).norm() < 1e-12 * a.norm());
        }

        LongitudinalResult r = longitudinal_directions(cubic, 128);
        CHECK(r.directions.size() >= 3);
        auto contains = [&](const Vec3& target) {
            for (const Vec3& d : r.directions)
                if (std::abs(std::abs(d.dot(target)) - 1.0) < 1e-6) return true;
            return false;
        };
        CHECK(contains(Vec3(1, 0, 0)));
        CHECK(contains(Vec3(1, 1, 0).normalized()));
        CHECK(contains(Vec3(1, 1, 1).normalized()));
    }
    SECTION("random definite materials give at least three sign-distinct directions") {
        std::mt19937_64 rng(24);
        for (int rep = 0; rep < 10; ++rep) {
            CauchyTensor c = testsup::random_pd_cauchy(rng);
            LongitudinalResult r = longitudinal_directions(c, 128);
            CHECK(r.directions.size() >= 3);
            for (double res : r.residuals) CHECK(res < 1e-8);
        }
    }
}

TEST_CASE("isotropic shear dispersion with evanescent cut-off") {
    IsotropicDispersion d = isotropic_dispersion(1.0, 1.0, 1.0, 2.0);
    CHECK(d.phase_velocity == Approx(std::sqrt(5.0)).epsilon(1e-13));
    CHECK(d.omega_squared == Approx(20.0).epsilon(1e-13));
    REQUIRE(d.cutoff_wavenumber.has_value());
    CHECK(*d.cutoff_wavenumber == Approx(1.0).epsilon(1e-13));

    // agreement with the eigen-solve route
    CauchyTensor c = isotropic_cauchy(1.0, 1.0);
    CosseratTensor b = isotropic_cosserat(1.0, 0.0);
    WaveSolution s = wave_solve(c, b, 1.0, Vec3::UnitZ(), 2.0);
    CHECK(s.branches[0].omega_squared == Approx(d.omega_squared).epsilon(1e-13));

    SECTION("null shear modulus: velocity linear in the wavenumber") {
        for (double k : {0.5, 1.0, 4.0}) {
            IsotropicDispersion lin = isotropic_dispersion(0.0, 1.0, 1.0, k);
            CHECK(lin.phase_velocity == Approx(k).epsilon(1e-13));
        }
    }
    SECTION("long-wave classical limit") {
        IsotropicDispersion lw = isotropic_dispersion(1.0, 1.0, 1.0, 0.0);
        CHECK(lw.phase_velocity == Approx(1.0).epsilon(1e-13));
        CHECK(lw.omega_squared == Approx(0.0).margin(1e-15));
    }
    SECTION("negative moduli: no cut-off reported") {
        CHECK_FALSE(isotropic_dispersion(-1.0, 1.0, 1.0, 1.0).cutoff_wavenumber.has_value());
        CHECK_FALSE(isotropic_dispersion(1.0, 0.0, 1.0, 1.0).cutoff_wavenumber.has_value());
        CHECK_THROWS_AS(isotropic_dispersion(1.0, 1.0, 0.0, 1.0), precondition_error);
    }
}

TEST_CASE("tangent spectrum matches the annihilated-direction split") {
    std::mt19937_64 rng(25);
    for (int rep = 0; rep < 30; ++rep) {
        CosseratTensor b = testsup::random_pd_cosserat(rng);
        Vec3 n = testsup::random_unit(rng);
        Mat3 a = acoustic_cosserat(b, n);
        TangentSpectrum sp = tangent_spectrum(a, n);
        Vec3 eigs = sorted_eigs(a);
        double scale = std::max(1.0, a.norm());
        // full spectrum is {0, lambda2, lambda3}
        Vec3 expected(0.0, sp.lambda2, sp.lambda3);
        std::sort(expected.data(), expected.data() + 3);
        for (int i = 0; i < 3; ++i) CHECK(eigs(i) == Approx(expected(i)).margin(1e-10 * scale));
        CHECK(std::abs(sp.v2.dot(n)) < 1e-10);
        CHECK(std::abs(sp.v3.dot(n)) < 1e-10);
        CHECK((a * sp.v2 - sp.lambda2 * sp.v2).norm() < 1e-9 * scale);
    }
}
