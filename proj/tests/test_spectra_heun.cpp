#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "sphsep/spectra_heun.hpp"
#include "sphsep/spectra_ellipsoidal.hpp"

using namespace sphsep;
using namespace sphsep::spectra_heun;

namespace {

double eval_poly(const std::vector<double>& c, double z) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

double eval_poly_d1(const std::vector<double>& c, double z) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 1;) acc = acc * z + c[i] * double(i);
    return acc;
}

double eval_poly_d2(const std::vector<double>& c, double z) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 2;) acc = acc * z + c[i] * double(i) * double(i - 1);
    return acc;
}

// Residual of the Heun ODE times z(z-1)(z-a) for a candidate polynomial.
double heun_residual(const HeunParams& p, const std::vector<double>& c, double q, double z) {
    const double W = eval_poly(c, z), W1 = eval_poly_d1(c, z), W2 = eval_poly_d2(c, z);
    return z * (z - 1.0) * (z - p.a) * W2 +
           (p.gamma * (z - 1.0) * (z - p.a) + p.delta * z * (z - p.a) +
            p.eps * z * (z - 1.0)) * W1 +
           (p.alpha * p.beta * z - q) * W;
}

std::map<std::array<int, 2>, int> prolate_class_counts(const JointSpectrum& js) {
    std::map<std::array<int, 2>, int> counts;
    for (const auto& s : js.states) ++counts[{s.mu[0], s.mu[3]}];
    return counts;
}

} // namespace

TEST_SUITE_BEGIN("spectra_heun");

TEST_CASE("heun_matrix: degree zero forces q = 0") {
    HeunParams p;
    p.a = 2.4;
    p.gamma = p.eps = 0.5;
    p.delta = 1.0;
    p.alpha = 0.0;
    p.beta = p.gamma + p.delta + p.eps - 1.0;
    auto t = heun_matrix(p, 0);
    REQUIRE(t.n() == 1);
    CHECK(t.diag[0] == 0.0);
}

TEST_CASE("heun_matrix: prolate m=0 d=1 a=2.4 block matches the hand-built 2x2") {
    auto blk = prolate_block(2.4, 0, 2, 0, 0);
    auto t = heun_matrix(blk.params, 1);
    REQUIRE(t.n() == 2);
    CHECK(t.super[0] == doctest::Approx(1.2)); // a * gamma
    CHECK(t.sub[0] == doctest::Approx(-2.0));  // alpha * beta
    CHECK(t.diag[1] == doctest::Approx(-4.6));
    auto lam = blk.spectral_values();
    REQUIRE(lam.size() == 2);
    std::sort(lam.begin(), lam.end());
    CHECK(lam[0] == doctest::Approx(2.4).epsilon(1e-12));  // q = -0.6
    CHECK(lam[1] == doctest::Approx(16.0).epsilon(1e-12)); // q = -4
}

TEST_CASE("heun_matrix: truncation violation reported") {
    HeunParams p;
    p.a = 2.0;
    p.alpha = -1.3;
    p.beta = p.gamma + p.delta + p.eps - 1.0 - p.alpha;
    CHECK_THROWS_AS(heun_matrix(p, 1), TruncationViolated);
}

TEST_CASE("heun polynomials satisfy the ODE for every eigenvalue") {
    for (auto [mu1, mu4] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}}) {
        for (int m = 0; m <= 3; ++m) {
            const int D = 9 + ((9 + m + mu1 + mu4) % 2); // admissible parity
            auto blk = prolate_block(2.4, m, D, mu1, mu4);
            auto qt = numerics::eigen_real(heun_matrix(blk.params, blk.d));
            for (double q : qt) {
                auto c = heun_poly_coeffs(blk.params, blk.d, q);
                for (double z : {0.3, 0.9, 1.7, 2.2})
                    CHECK(std::abs(heun_residual(blk.params, c, q, z)) < 1e-6);
            }
        }
    }
}

TEST_CASE("prolate: d=0 states sit at lambda = a|m| and counts match") {
    const double a = 2.4;
    for (int m : {0, 3, 7}) {
        auto blk = prolate_block(a, m, m, 0, 0); // D = |m| forces d = 0
        auto lam = blk.spectral_values();
        REQUIRE(lam.size() == 1);
        CHECK(lam[0] == doctest::Approx(a * m).epsilon(1e-12));
    }

    auto js = prolate_spectrum(a, 20);
    CHECK(js.size() == 441);
    auto counts = prolate_class_counts(js);
    CHECK(counts[{0, 0}] == 121); // (D/2+1)^2
    CHECK(counts[{1, 0}] == 110); // (D/2+1)(D/2)
    CHECK(counts[{0, 1}] == 110);
    CHECK(counts[{1, 1}] == 100); // (D/2)^2

    auto js21 = prolate_spectrum(a, 21);
    CHECK(js21.size() == 484);
    auto c21 = prolate_class_counts(js21);
    CHECK(c21[{0, 0}] == 11 * 12); // (D+1)/2 * (D+3)/2
    CHECK(c21[{1, 0}] == 121);
    CHECK(c21[{0, 1}] == 121);
    CHECK(c21[{1, 1}] == 11 * 10);
}

TEST_CASE("prolate: parity law between m and the (mu1, mu4) class") {
    auto js = prolate_spectrum(2.4, 8);
    for (const auto& s : js.states) {
        const int m = s.q[0], mu1 = s.mu[0], mu4 = s.mu[3];
        if ((mu1 + mu4) % 2 == 0)
            CHECK(m % 2 == 0);
        else
            CHECK(std::abs(m % 2) == 1);
    }
}

TEST_CASE("oblate: d=0 gives lambda = |m|; counts equal the prolate table") {
    for (int m : {0, 2, 5}) {
        auto blk = oblate_block(2.4, m, m, 0, 0);
        auto lam = blk.spectral_values();
        REQUIRE(lam.size() == 1);
        CHECK(lam[0] == doctest::Approx(double(m)).epsilon(1e-12));
    }
    auto js = oblate_spectrum(2.4, 20);
    CHECK(js.size() == 441);
    std::map<std::array<int, 2>, int> counts;
    for (const auto& s : js.states) ++counts[{s.mu[0], s.mu[1]}];
    CHECK(counts[{0, 0}] == 121);
    CHECK(counts[{1, 0}] == 110);
    CHECK(counts[{0, 1}] == 110);
    CHECK(counts[{1, 1}] == 100);
}

TEST_CASE("Fuchs relation holds for every constructed block") {
    for (int mu1 = 0; mu1 <= 1; ++mu1)
        for (int mu2 = 0; mu2 <= 1; ++mu2)
            for (int m = 0; m <= 4; ++m) {
                const int D = 8 + ((8 + m + mu1 + mu2) % 2);
                CHECK(std::abs(prolate_block(2.4, m, D, mu1, mu2).params.fuchs_defect()) < 1e-12);
                CHECK(std::abs(oblate_block(2.4, m, D, mu1, mu2).params.fuchs_defect()) < 1e-12);
            }
    for (int mu2 = 0; mu2 <= 1; ++mu2)
        for (int mu3 = 0; mu3 <= 1; ++mu3)
            for (int mu4 = 0; mu4 <= 1; ++mu4)
                for (int d = 0; d <= 3; ++d) {
                    const int D = 2 * d + mu2 + mu3 + mu4 + 4;
                    CHECK(std::abs(lame_block(2.4, d, {mu2, mu3, mu4}, D).params.fuchs_defect()) <
                          1e-12);
                }
}

TEST_CASE("realness gate: a in (1, 10], D = 24 never trips") {
    for (double a : {1.01, 2.4, 10.0}) {
        CHECK_NOTHROW(prolate_spectrum(a, 24));
        CHECK_NOTHROW(oblate_spectrum(a, 24));
    }
}

TEST_CASE("prolate a -> 1 converges to the spherical closed-form spectrum") {
    const int D = 6;
    auto spherical_lambdas = [&](int m) {
        std::vector<double> v;
        for (int l = std::abs(m); l <= D; ++l) v.push_back(double(D) * (D + 2) - l * (l + 1.0));
        std::sort(v.begin(), v.end());
        return v;
    };
    double prev_dev = 1e9;
    for (double gap : {1e-2, 1e-3}) {
        auto js = prolate_spectrum(1.0 + gap, D);
        std::map<int, std::vector<double>> by_m;
        for (const auto& s : js.states) by_m[s.q[0]].push_back(s.raw2);
        double dev = 0.0;
        for (auto& [m, v] : by_m) {
            std::sort(v.begin(), v.end());
            auto expect = spherical_lambdas(m);
            REQUIRE(v.size() == expect.size());
            for (std::size_t i = 0; i < v.size(); ++i)
                dev = std::max(dev, std::abs(v[i] - expect[i]));
        }
        CHECK(dev < prev_dev);
        prev_dev = dev;
    }
    CHECK(prev_dev < 0.05);
}

TEST_CASE("lame: corner state and state counts") {
    auto js = lame_spectrum({0, 1, 2.4}, 20);
    CHECK(js.size() == 441);

    // d = 0, mu = (0,0,0): scaled (f, g) = (1 - hbar^2, 0)
    bool found = false;
    const double h2 = js.hbar * js.hbar;
    for (const auto& s : js.states) {
        if (s.q[1] == 0 && s.mu[1] == 0 && s.mu[2] == 0 && s.mu[3] == 0 && s.q[0] == 20) {
            found = true;
            CHECK(s.scaled1 == doctest::Approx(1.0 - h2).epsilon(1e-14));
            CHECK(std::abs(s.scaled2) < 1e-12);
        }
    }
    CHECK(found);

    // Per-class counts, keyed by (parity of n; mu2 mu3 mu4).
    std::map<std::array<int, 4>, int> counts;
    for (const auto& s : js.states) ++counts[s.mu];
    const int D = 20;
    CHECK(counts[{0, 0, 0, 0}] == (D + 2) * (D + 4) / 8);
    for (auto mu : {std::array<int, 4>{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}})
        CHECK(counts[mu] == D * (D + 2) / 8);
    for (auto mu : {std::array<int, 4>{0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}})
        CHECK(counts[mu] == D * (D + 2) / 8);
    CHECK(counts[{1, 1, 1, 1}] == D * (D - 2) / 8);

    auto js21 = lame_spectrum({0, 1, 2.4}, 21);
    CHECK(js21.size() == 484);
}

TEST_CASE("s2 ellipsoidal: counts and the horizontal Lame slice") {
    auto js0 = s2_ellipsoidal_spectrum({0, 1, 2.4}, 0);
    REQUIRE(js0.size() == 1);
    CHECK(std::abs(js0.states[0].raw2) < 1e-12);

    auto js = s2_ellipsoidal_spectrum({0, 1, 2.4}, 20);
    CHECK(js.size() == 41);
    std::map<std::array<int, 4>, int> classes;
    for (const auto& s : js.states) ++classes[s.mu];
    CHECK(classes.size() == 4);
    CHECK(classes.count({0, 0, 0, 0}) == 1);
    CHECK(classes.count({1, 1, 0, 0}) == 1);
    CHECK(classes.count({1, 0, 1, 0}) == 1);
    CHECK(classes.count({0, 1, 1, 0}) == 1);

    // Slice identity: lambda values at level l equal the g values of the Lame
    // states with 2d + U = l, and E2 = E3 - f exactly.
    for (int ell : {4, 5, 20}) {
        auto s2 = s2_ellipsoidal_spectrum({0, 1, 2.4}, ell);
        auto l3 = lame_spectrum({0, 1, 2.4}, ell);
        std::vector<double> got, expect;
        for (const auto& s : s2.states) got.push_back(s.raw2);
        for (const auto& s : l3.states) {
            const int U = s.mu[1] + s.mu[2] + s.mu[3];
            if (2 * s.q[1] + U != ell) continue;
            expect.push_back(s.raw2);
            const double E3 = double(ell) * (ell + 2);
            CHECK(std::abs((E3 - s.raw1) - double(ell) * (ell + 1)) < 1e-9);
        }
        std::sort(got.begin(), got.end());
        std::sort(expect.begin(), expect.end());
        REQUIRE(got.size() == expect.size());
        for (std::size_t i = 0; i < got.size(); ++i)
            CHECK(got[i] == doctest::Approx(expect[i]).epsilon(1e-10));
    }
}

TEST_CASE("oblate degeneration: near-coalesced ellipsoidal spectra approach oblate") {
    // e = (0, 1, a, a + eps) vs the oblate system at D = 6, mapped through
    // lambda = lambda2/a, m^2 = (lambda2/a + aE - lambda1)/(a - 1).
    const double a = 2.4;
    const int D = 6;
    const double E = double(D) * (D + 2);
    auto obl = oblate_spectrum(a, D);
    std::vector<std::pair<double, double>> want;
    for (const auto& s : obl.states) want.push_back({double(s.q[0]) * s.q[0], s.raw2});
    std::sort(want.begin(), want.end());
    // The mapped m^2 carries O(eps_degeneration) noise; pair states by the
    // exact integer m^2 and compare lambda within each m-block.

    sphsep::SystemSpec ell;
    ell.kind = SystemKind::Ellipsoidal;
    ell.params = {0.0, 1.0, a, a + 1e-4};
    auto js = sphsep::spectra_ellipsoidal::full_spectrum(ell, D, 42);
    std::vector<std::pair<double, double>> got;
    double m2dev = 0.0;
    for (const auto& s : js.states) {
        const double lambda = s.raw2 / a;
        const double m2 = (lambda + a * E - s.raw1) / (a - 1.0);
        m2dev = std::max(m2dev, std::abs(m2 - std::round(m2)));
        got.push_back({std::round(m2), lambda});
    }
    std::sort(got.begin(), got.end());
    REQUIRE(got.size() == want.size());
    double dev = m2dev;
    for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].first == want[i].first);
        dev = std::max(dev, std::abs(got[i].second - want[i].second));
    }
    CHECK(dev < 5e-3);
}

TEST_CASE("lame polynomial labels") {
    CHECK(lame_function_label(2, 1, {0, 0, 0}) == "Ec_{4}^{2}");
    CHECK(lame_function_label(1, 0, {1, 1, 1}) == "Es_{5}^{2}");
    CHECK(lame_function_label(0, 0, {0, 1, 0}) == "Es_{1}^{1}");
}

TEST_SUITE_END();
