#include <doctest.h>

#include <cmath>
#include <set>

#include "sphsep/oracle.hpp"
#include "sphsep/spectra.hpp"
#include "sphsep/spectra_closedform.hpp"

using namespace sphsep;
using namespace sphsep::oracle;

namespace {

SystemSpec make(SystemKind k, std::vector<double> params = {}) {
    SystemSpec s;
    s.kind = k;
    s.params = std::move(params);
    return s;
}

} // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("build_operator: D=0 annihilates constants; l12^2 on degree 1") {
    for (auto spec : {make(SystemKind::Ellipsoidal, {1, 2, 5, 8}), make(SystemKind::Cylindrical)})
        for (int which : {0, 1}) {
            auto op = build_operator(spec, which, 0);
            REQUIRE(op.mat.rows() == 1);
            CHECK(op.mat(0, 0) == 0.0);
        }

    auto op = build_operator(make(SystemKind::Cylindrical), 0, 1); // l12^2
    REQUIRE(op.mat.rows() == 4);
    Eigen::EigenSolver<Eigen::MatrixXd> es(op.mat);
    std::vector<double> ev;
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(es.eigenvalues()(i).imag()) < 1e-12);
        ev.push_back(es.eigenvalues()(i).real());
    }
    std::sort(ev.begin(), ev.end());
    CHECK(ev[0] == doctest::Approx(0.0));
    CHECK(ev[1] == doctest::Approx(0.0));
    CHECK(ev[2] == doctest::Approx(1.0));
    CHECK(ev[3] == doctest::Approx(1.0));

    CHECK_THROWS_AS(build_operator(make(SystemKind::Cylindrical), 0, 13), DimensionGuard);
}

TEST_CASE("harmonic subspace dimensions") {
    CHECK(harmonic_subspace(0, 4).cols() == 1);
    CHECK(harmonic_subspace(5, 4).cols() == 36);
    CHECK(harmonic_subspace(3, 3).cols() == 7);
    for (int D = 0; D <= 8; ++D) {
        CHECK(harmonic_subspace(D, 4).cols() == (D + 1) * (D + 1));
        CHECK(harmonic_subspace(D, 3).cols() == 2 * D + 1);
    }
}

TEST_CASE("operators preserve the harmonic subspace and commute on it") {
    for (auto spec : {make(SystemKind::Ellipsoidal, {1, 2, 5, 8}),
                      make(SystemKind::Prolate, {2.4}), make(SystemKind::Lame, {0, 1, 2.4}),
                      make(SystemKind::S2Ellipsoidal, {0, 1, 2.4})}) {
        const int D = 6;
        const auto A = build_operator(spec, 0, D);
        const auto B = build_operator(spec, 1, D);
        const Eigen::MatrixXd P = harmonic_subspace(D, spec.nvars());
        const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(P.rows(), P.rows());
        CHECK(((I - P * P.transpose()) * A.mat * P).norm() <=
              1e-10 * std::max(1.0, A.mat.norm()));
        CHECK(((I - P * P.transpose()) * B.mat * P).norm() <=
              1e-10 * std::max(1.0, B.mat.norm()));
        const Eigen::MatrixXd Ar = P.transpose() * A.mat * P;
        const Eigen::MatrixXd Br = P.transpose() * B.mat * P;
        CHECK((Ar * Br - Br * Ar).norm() <= 1e-10 * std::max(1.0, Ar.norm() * Br.norm()));
    }
}

TEST_CASE("cylindrical: oracle pairs are the exact integer lattice") {
    auto spec = make(SystemKind::Cylindrical);
    auto pairs = joint_spectrum_oracle(spec, 2, 42);
    REQUIRE(pairs.size() == 9);
    // (m1^2, m2^2) multiset for D=2: (0,0), (0,4), (4,0), (1,1) x4, (0,0) from d=1
    std::multiset<std::pair<int, int>> got;
    for (auto [a, b] : pairs) {
        CHECK(std::abs(a - std::round(a)) < 1e-9);
        CHECK(std::abs(b - std::round(b)) < 1e-9);
        got.insert({int(std::round(a)), int(std::round(b))});
    }
    std::multiset<std::pair<int, int>> want;
    for (const auto& st : spectra_closedform::cylindrical_spectrum(2).states)
        want.insert({st.q[1] * st.q[1], st.q[2] * st.q[2]});
    CHECK(got == want);

    auto cal = calibrate(spec, 2, 42);
    CHECK(std::abs(cal.m[0][0] - 1.0) < 1e-9);
    CHECK(std::abs(cal.m[1][1] - 1.0) < 1e-9);
    CHECK(std::abs(cal.m[0][1]) < 1e-9);
    CHECK(std::abs(cal.m[1][0]) < 1e-9);
    CHECK(std::abs(cal.c[0]) < 1e-9);
    CHECK(std::abs(cal.c[1]) < 1e-9);
}

TEST_CASE("calibration fitted at D=2 transports every system to D=5") {
    for (auto spec : {make(SystemKind::Ellipsoidal, {1, 2, 5, 8}),
                      make(SystemKind::Prolate, {2.4}), make(SystemKind::Oblate, {2.4}),
                      make(SystemKind::Lame, {0, 1, 2.4}), make(SystemKind::Spherical23),
                      make(SystemKind::Cylindrical), make(SystemKind::S2Ellipsoidal, {0, 1, 2.4}),
                      make(SystemKind::S2Spherical)}) {
        auto cal = calibrate(spec, 2, 42);
        CHECK(cal.residual < 1e-8);
        for (int D : {3, 4, 5})
            CHECK(oracle_match_error(spec, D, cal, 42) < 1e-7);
    }
}

TEST_CASE("ellipsoidal D=2: separation eigenvalues match the oracle to 1e-8") {
    auto spec = make(SystemKind::Ellipsoidal, {1, 2, 5, 8});
    auto cal = calibrate(spec, 2, 42);
    CHECK(oracle_match_error(spec, 2, cal, 42) < 1e-8);
}

TEST_SUITE_END();
