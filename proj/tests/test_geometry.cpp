#include <doctest.h>

#include <cmath>
#include <nlohmann/json.hpp>
#include <random>

#include "sphsep/geometry.hpp"

using namespace sphsep;
using namespace sphsep::geometry;

namespace {

SystemSpec make(SystemKind k, std::vector<double> params = {}) {
    SystemSpec s;
    s.kind = k;
    s.params = std::move(params);
    return s;
}

std::vector<SystemSpec> all_systems() {
    return {make(SystemKind::Ellipsoidal, {1, 2, 5, 8}),
            make(SystemKind::Prolate, {2.4}),
            make(SystemKind::Oblate, {2.4}),
            make(SystemKind::Lame, {0, 1, 2.4}),
            make(SystemKind::Spherical23),
            make(SystemKind::Cylindrical),
            make(SystemKind::S2Ellipsoidal, {0, 1, 2.4}),
            make(SystemKind::S2Spherical)};
}

} // namespace

TEST_SUITE_BEGIN("geometry");

TEST_CASE("to_cartesian: ellipsoidal box corner forces a single unit coordinate") {
    auto spec = make(SystemKind::Ellipsoidal, {1, 2, 5, 8});
    auto p = to_cartesian(spec, {1, 2, 5}, {1, 1, 1, 1});
    CHECK(p.x[0] == 0.0);
    CHECK(p.x[1] == 0.0);
    CHECK(p.x[2] == 0.0);
    CHECK(p.x[3] == doctest::Approx(1.0));
}

TEST_CASE("to_cartesian: spherical23 pole and cylindrical centre") {
    auto sph = make(SystemKind::Spherical23);
    auto p = to_cartesian(sph, {1.0, 0.3, 0.7}, {-1, 1, 1, 1});
    CHECK(p.x[0] == doctest::Approx(-1.0));
    CHECK(p.x[1] == doctest::Approx(0.0));
    CHECK(p.x[2] == doctest::Approx(0.0));
    CHECK(p.x[3] == doctest::Approx(0.0));

    auto cyl = make(SystemKind::Cylindrical);
    auto c = squared_cartesian(cyl, {0.5, 0.5, 0.5});
    for (double v : c) CHECK(v == doctest::Approx(0.25));
}

TEST_CASE("to_cartesian: unit-sphere identity on box-interior points, all systems") {
    std::mt19937_64 rng(5);
    auto uniform = [&](double lo, double hi) {
        return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
    };
    for (const auto& spec : all_systems()) {
        const auto box = coordinate_box(spec);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<double> s;
            for (auto [lo, hi] : box) s.push_back(uniform(lo + 0.02 * (hi - lo), hi - 0.02 * (hi - lo)));
            std::vector<int> signs(spec.nvars(), 1);
            auto p = to_cartesian(spec, s, signs);
            double sum = 0.0;
            for (double xi : p.x) sum += xi * xi;
            CHECK(std::abs(sum - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("to_cartesian: out-of-box rejected") {
    auto spec = make(SystemKind::Prolate, {2.4});
    CHECK_THROWS_AS(to_cartesian(spec, {0.5, 1.5, 1.5}, {1, 1, 1, 1}), OutOfBox);
}

TEST_CASE("from_cartesian: ellipsoidal coordinates satisfy the defining equation") {
    auto spec = make(SystemKind::Ellipsoidal, {1, 2, 5, 8});
    SpherePoint p{{0.5, 0.5, 0.5, 0.5}};
    auto s = from_cartesian(spec, p);
    REQUIRE(s.size() == 3);
    CHECK(s[0] > 1.0); CHECK(s[0] < 2.0);
    CHECK(s[1] > 2.0); CHECK(s[1] < 5.0);
    CHECK(s[2] > 5.0); CHECK(s[2] < 8.0);
    for (double sj : s) {
        double t = 0.0;
        for (int i = 0; i < 4; ++i) t += 0.25 / (sj - spec.params[i]);
        CHECK(std::abs(t) < 1e-10);
    }
}

TEST_CASE("from_cartesian: singular stratum reported") {
    auto spec = make(SystemKind::S2Spherical);
    SpherePoint p{{1.0, 0.0, 0.0}};
    CHECK_THROWS_AS(from_cartesian(spec, p), SingularStratum);
}

TEST_CASE("round trip reproduces |x_i| on seeded random sphere points, every system") {
    std::mt19937_64 rng(17);
    auto gauss = [&]() {
        // Box-Muller on deterministic uniforms
        double u1 = ((rng() >> 11) * 0x1.0p-53);
        double u2 = ((rng() >> 11) * 0x1.0p-53);
        u1 = std::max(u1, 1e-12);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    };
    for (const auto& spec : all_systems()) {
        int done = 0;
        while (done < 100) {
            std::vector<double> x(spec.nvars());
            double norm = 0.0;
            for (double& xi : x) {
                xi = gauss();
                norm += xi * xi;
            }
            norm = std::sqrt(norm);
            bool ok = true;
            for (double& xi : x) {
                xi /= norm;
                if (std::abs(xi) < 1e-3) ok = false;
            }
            if (!ok) continue;
            ++done;
            SpherePoint p{x};
            auto s = from_cartesian(spec, p);
            auto x2 = squared_cartesian(spec, s);
            for (std::size_t i = 0; i < x.size(); ++i)
                CHECK(std::abs(std::sqrt(std::max(0.0, x2[i])) - std::abs(x[i])) < 1e-10);
        }
    }
}

TEST_CASE("degenerate: pentagon edges") {
    auto base = make(SystemKind::Ellipsoidal, {0, 1, 1.7, 2.4});
    auto pro = degenerate(base, SystemKind::Prolate, 1e-3);
    CHECK(pro.params == std::vector<double>{0, 1, 1.001, 2.4});
    auto obl = degenerate(base, SystemKind::Oblate, 1e-3);
    REQUIRE(obl.params.size() == 4);
    CHECK(obl.params[2] == doctest::Approx(1.7));
    CHECK(obl.params[3] == doctest::Approx(1.701));
    auto lam = degenerate(make(SystemKind::Ellipsoidal, {-5, 0, 1, 2.4}), SystemKind::Lame, 1e-3);
    CHECK(lam.params == std::vector<double>{-1000, 0, 1, 2.4});
    CHECK_THROWS_AS(degenerate(base, SystemKind::Cylindrical, 1e-3), UnreachableTarget);
}

TEST_CASE("system spec json round trip") {
    for (const auto& spec : all_systems()) {
        auto j = system_to_json(spec);
        auto back = system_from_json(j);
        CHECK(back.kind == spec.kind);
        CHECK(back.params == spec.params);
    }
    auto j = nlohmann::json::parse(R"({"kind":"prolate","params":[2.4]})");
    CHECK(system_from_json(j).kind == SystemKind::Prolate);
}

TEST_SUITE_END();
