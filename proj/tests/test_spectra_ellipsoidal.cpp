#include <doctest.h>

#include <cmath>

#include "sphsep/spectra_ellipsoidal.hpp"
#include "sphsep/numerics.hpp"

using namespace sphsep;
using namespace sphsep::spectra_ellipsoidal;

namespace {
SystemSpec ell(std::vector<double> e) {
    SystemSpec s;
    s.kind = SystemKind::Ellipsoidal;
    s.params = std::move(e);
    return s;
}
long choose2(long n) { return n * (n - 1) / 2; }
} // namespace

TEST_SUITE_BEGIN("spectra_ellipsoidal");

TEST_CASE("gen_lame_params reproduces the symmetry-class shift table") {
    const std::array<double, 4> e{1, 2, 5, 8};
    const double S1 = 16, S2 = 1 * 2 + 1 * 5 + 1 * 8 + 2 * 5 + 2 * 8 + 5 * 8;

    auto p0 = gen_lame_params(e, {0, 0, 0, 0});
    CHECK(p0.u0 == 0.0);
    CHECK(p0.u1 == 0.0);
    CHECK(p0.u2 == 0.0);
    CHECK(p0.gamma == std::array<double, 4>{0.5, 0.5, 0.5, 0.5});

    auto p4 = gen_lame_params(e, {1, 1, 1, 1});
    CHECK(p4.u0 == doctest::Approx(24.0));
    CHECK(p4.u1 == doctest::Approx(-12.0 * S1));
    CHECK(p4.u2 == doctest::Approx(4.0 * S2));
    CHECK(p4.gamma == std::array<double, 4>{1.5, 1.5, 1.5, 1.5});

    auto p1 = gen_lame_params({0, 1, 2, 3}, {1, 0, 0, 0});
    CHECK(p1.u0 == doctest::Approx(3.0));
    CHECK(p1.u1 == doctest::Approx(-12.0));
    CHECK(p1.u2 == doctest::Approx(11.0)); // 1*2 + 1*3 + 2*3

    // Double-odd class: u2 = e_i e_k + e_i e_m + e_j e_k + e_j e_m + 4 e_k e_m
    auto p2 = gen_lame_params(e, {1, 1, 0, 0});
    CHECK(p2.u0 == doctest::Approx(8.0));
    CHECK(p2.u1 == doctest::Approx(-2.0 * (1 + 2) - 6.0 * (5 + 8)));
    CHECK(p2.u2 == doctest::Approx(1 * 5 + 1 * 8 + 2 * 5 + 2 * 8 + 4 * 5 * 8));

    // Triple-odd class: u1 = -6(e_i+e_j+e_k+2e_m), m the even axis
    auto p3 = gen_lame_params(e, {1, 1, 1, 0});
    CHECK(p3.u0 == doctest::Approx(15.0));
    CHECK(p3.u1 == doctest::Approx(-6.0 * (1 + 2 + 5 + 2 * 8)));
    CHECK(p3.u2 == doctest::Approx(1 * 2 + 1 * 5 + 2 * 5 + 4.0 * (1 * 8 + 2 * 8 + 5 * 8)));
}

TEST_CASE("solve_class: D=0 trivial state") {
    auto states = solve_class(ell({1, 2, 5, 8}), 0, {0, 0, 0, 0}, 42);
    REQUIRE(states.size() == 1);
    CHECK(states[0].lambda1 == doctest::Approx(0.0));
    CHECK(states[0].lambda2 == doctest::Approx(0.0));
    CHECK(states[0].E == 0.0);
    CHECK(states[0].roots.empty());
}

TEST_CASE("solve_class: D=18 base class has 55 states") {
    auto states = solve_class(ell({1, 2, 5, 8}), 18, {0, 0, 0, 0}, 42);
    CHECK(states.size() == 55);
}

TEST_CASE("solve_class: accessory constraints hold for every state") {
    const std::array<double, 4> e{1, 2, 5, 8};
    for (const auto& mu : admissible_classes(7)) {
        for (const auto& st : solve_class(ell({1, 2, 5, 8}), 7, mu, 3)) {
            numerics::RootSystemProblem p;
            p.poles.assign(e.begin(), e.end());
            auto gp = gen_lame_params(e, st.mu);
            p.exponents.assign(gp.gamma.begin(), gp.gamma.end());
            p.occupancy.assign(st.n.begin(), st.n.end());
            auto q = numerics::accessory_parameters(p, st.roots);
            const int d = st.n[0] + st.n[1] + st.n[2];
            double sq = 0, seq = 0, sg = 0;
            for (int j = 0; j < 4; ++j) {
                sq += q[j];
                seq += e[j] * q[j];
                sg += gp.gamma[j];
            }
            CHECK(std::abs(sq) < 1e-9);
            CHECK(std::abs(seq + d * (d - 1 + sg)) < 1e-9);
            // Consistency of the energy shift: u0 - E = 4 sum e_j q_j
            CHECK(std::abs((gp.u0 - st.E) - 4.0 * seq) < 1e-7);
        }
    }
}

TEST_CASE("full_spectrum: total counts (D+1)^2 and per-class counts") {
    auto js18 = full_spectrum(ell({1, 2, 5, 8}), 18, 42);
    CHECK(js18.size() == 361);
    CHECK(js18.hbar == doctest::Approx(1.0 / 19.0));

    auto js19 = full_spectrum(ell({1, 2, 5, 8}), 19, 42);
    CHECK(js19.size() == 400);

    auto js1 = full_spectrum(ell({1, 2, 5, 8}), 1, 42);
    CHECK(js1.size() == 4);

    // Count identity C((D+4)/2,2) + 6 C((D+2)/2,2) + C(D/2,2) = (D+1)^2
    for (int D = 0; D <= 40; D += 2)
        CHECK(choose2((D + 4) / 2) + 6 * choose2((D + 2) / 2) + choose2(D / 2) ==
              (D + 1) * (D + 1));
}

TEST_CASE("full_spectrum: affine covariance of the spectral parameters") {
    const int D = 4;
    auto a = full_spectrum(ell({1, 2, 5, 8}), D, 42);
    auto b = full_spectrum(ell({0, 1, 4, 7}), D, 42);
    REQUIRE(a.size() == b.size());
    // Fit the affine map (l1,l2) -> (l1',l2') from three states, verify on all.
    // States are matched by identical (mu, occupancy) keys thanks to sorting.
    const auto &s0 = a.states[0], &s1 = a.states[7], &s2 = a.states[14];
    const auto &t0 = b.states[0], &t1 = b.states[7], &t2 = b.states[14];
    // Solve for row1: l1' = m11 l1 + m12 l2 + c1 using three equations.
    auto solve_row = [&](double y0, double y1, double y2, int) {
        const double A[3][3] = {{s0.raw1, s0.raw2, 1},
                                {s1.raw1, s1.raw2, 1},
                                {s2.raw1, s2.raw2, 1}};
        // Cramer
        auto det3 = [](const double M[3][3]) {
            return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                   M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                   M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
        };
        const double den = det3(A);
        double M0[3][3], M1[3][3], M2[3][3];
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) M0[r][c] = M1[r][c] = M2[r][c] = A[r][c];
        M0[0][0] = y0; M0[1][0] = y1; M0[2][0] = y2;
        M1[0][1] = y0; M1[1][1] = y1; M1[2][1] = y2;
        M2[0][2] = y0; M2[1][2] = y1; M2[2][2] = y2;
        return std::array<double, 3>{det3(M0) / den, det3(M1) / den, det3(M2) / den};
    };
    auto r1 = solve_row(t0.raw1, t1.raw1, t2.raw1, 0);
    auto r2 = solve_row(t0.raw2, t1.raw2, t2.raw2, 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto &s = a.states[i], &t = b.states[i];
        REQUIRE(s.mu == t.mu);
        REQUIRE(s.q == t.q);
        const double p1 = r1[0] * s.raw1 + r1[1] * s.raw2 + r1[2];
        const double p2 = r2[0] * s.raw1 + r2[1] * s.raw2 + r2[2];
        CHECK(std::abs(p1 - t.raw1) < 1e-8 * std::max(1.0, std::abs(t.raw1)));
        CHECK(std::abs(p2 - t.raw2) < 1e-8 * std::max(1.0, std::abs(t.raw2)));
    }
}

TEST_CASE("solve_class: validation and degenerate-pole guard") {
    CHECK_THROWS_AS(solve_class(ell({1, 2, 5, 8}), 3, {0, 0, 0, 0}, 1), InvalidProblem);
    CHECK_THROWS_AS(solve_class(ell({0, 1, 1.0000001, 2}), 2, {0, 0, 0, 0}, 1), InvalidProblem);
}

TEST_SUITE_END();
