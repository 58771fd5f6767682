#include <doctest.h>

#include <cmath>
#include <set>

#include "sphsep/spectra_closedform.hpp"

using namespace sphsep;
using namespace sphsep::spectra_closedform;

TEST_SUITE_BEGIN("spectra_closedform");

TEST_CASE("spherical: counts and the l=0 degenerate state") {
    auto js0 = spherical_spectrum(0);
    REQUIRE(js0.size() == 1);
    CHECK(js0.states[0].raw1 == 0.0);
    CHECK(js0.states[0].raw2 == 0.0);

    auto js30 = spherical_spectrum(30);
    CHECK(js30.size() == 961);

    for (const auto& s : js30.states) {
        CHECK(s.q[0] + s.q[1] == 30);
        CHECK(std::abs(s.q[2]) <= s.q[1]);
        CHECK(s.raw2 == doctest::Approx(30.0 * 32 - s.q[1] * (s.q[1] + 1.0)));
        if (s.q[1] == 0) {
            CHECK(s.q[2] == 0);
            CHECK(s.scaled1 == 0.0);
            CHECK(s.scaled2 == doctest::Approx(1.0 - js30.hbar * js30.hbar));
        }
    }
}

TEST_CASE("cylindrical: counts, D=1 enumeration and the m=0 parity rule") {
    CHECK(cylindrical_spectrum(20).size() == 441);

    auto js1 = cylindrical_spectrum(1);
    REQUIRE(js1.size() == 4);
    std::set<std::array<int, 3>> keys;
    for (const auto& s : js1.states) keys.insert(s.q);
    CHECK(keys == std::set<std::array<int, 3>>{
                      {0, -1, 0}, {0, 0, -1}, {0, 0, 1}, {0, 1, 0}});

    for (int D : {4, 5, 6, 7}) {
        bool has_zero_zero = false;
        for (const auto& s : cylindrical_spectrum(D).states) {
            CHECK(2 * s.q[0] + std::abs(s.q[1]) + std::abs(s.q[2]) == D);
            CHECK((std::abs(s.q[1]) + std::abs(s.q[2])) % 2 == D % 2);
            if (s.q[1] == 0 && s.q[2] == 0) has_zero_zero = true;
        }
        CHECK(has_zero_zero == (D % 2 == 0));
    }
}

TEST_CASE("s2 spherical: level sizes and the x1 parity rule") {
    CHECK(s2_spherical_level(0).size() == 1);
    CHECK(s2_spherical_level(2).size() == 5);
    CHECK(s2_spherical_spectrum(4).size() == 1 + 3 + 5 + 7 + 9);

    for (const auto& s : s2_spherical_level(5).states)
        CHECK(s.mu[0] == (5 - std::abs(s.q[1])) % 2);
}

TEST_SUITE_END();
