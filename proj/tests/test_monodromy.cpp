#include <doctest.h>

#include <cmath>

#include "sphsep/monodromy.hpp"
#include "sphsep/spectra.hpp"

using namespace sphsep;
using namespace sphsep::monodromy;

namespace {

SystemSpec make(SystemKind k, std::vector<double> params = {}) {
    SystemSpec s;
    s.kind = k;
    s.params = std::move(params);
    return s;
}

bool is_identity(const TransportResult& r) {
    return r.matrix[0][0] == 1 && r.matrix[0][1] == 0 && r.matrix[1][0] == 0 &&
           r.matrix[1][1] == 1;
}

} // namespace

TEST_SUITE_BEGIN("monodromy");

TEST_CASE("prolate D=20: omega = 2 combined, omega = 1 per class") {
    auto js = compute_spectrum(make(SystemKind::Prolate, {2.4}), 20, 42);
    const auto pts = scaled_points(js);
    const auto loop = circle_loop({0.0, 1.0}, 0.35, 64);
    auto cell = initial_cell(pts, loop.front());
    auto res = transport(pts, loop, cell);
    CHECK(res.matrix[0][0] == 1);
    CHECK(res.matrix[0][1] == 0);
    CHECK(res.matrix[1][1] == 1);
    CHECK(std::abs(res.omega()) == 2);

    // single class (mu1, mu4) = (0,0)
    std::vector<Point2> sub;
    for (const auto& st : js.states)
        if (st.mu[0] == 0 && st.mu[3] == 0) sub.push_back({st.scaled1, st.scaled2});
    auto subcell = initial_cell(sub, loop.front());
    auto subres = transport(sub, loop, subcell);
    CHECK(subres.matrix[0][0] == 1);
    CHECK(subres.matrix[0][1] == 0);
    CHECK(subres.matrix[1][1] == 1);
    CHECK(std::abs(subres.omega()) == 1);
}

TEST_CASE("contractible loops give the identity") {
    auto js = compute_spectrum(make(SystemKind::Prolate, {2.4}), 20, 42);
    const auto pts = scaled_points(js);
    const auto loop = circle_loop({-0.45, 0.8}, 0.2, 48);
    auto res = transport(pts, loop, initial_cell(pts, loop.front()));
    CHECK(is_identity(res));
}

TEST_CASE("transport is stable under loop refinement; reverse inverts") {
    auto js = compute_spectrum(make(SystemKind::Prolate, {2.4}), 20, 42);
    const auto pts = scaled_points(js);
    const auto loop64 = circle_loop({0.0, 1.0}, 0.35, 64);
    const auto loop128 = circle_loop({0.0, 1.0}, 0.35, 128);
    auto r64 = transport(pts, loop64, initial_cell(pts, loop64.front()));
    auto r128 = transport(pts, loop128, initial_cell(pts, loop128.front()));
    CHECK(r64.matrix == r128.matrix);

    auto rev = loop64;
    std::reverse(rev.begin(), rev.end());
    auto rrev = transport(pts, rev, initial_cell(pts, rev.front()));
    // product must be the identity
    const auto& A = r64.matrix;
    const auto& B = rrev.matrix;
    CHECK(A[0][0] * B[0][0] + A[0][1] * B[1][0] == 1);
    CHECK(A[0][0] * B[0][1] + A[0][1] * B[1][1] == 0);
    CHECK(A[1][0] * B[0][0] + A[1][1] * B[1][0] == 0);
    CHECK(A[1][0] * B[0][1] + A[1][1] * B[1][1] == 1);
}

TEST_CASE("oblate: interior loops in the lower chamber are trivial") {
    auto js = compute_spectrum(make(SystemKind::Oblate, {2.4}), 20, 42);
    const auto pts = scaled_points(js);
    for (Point2 center : {Point2{0.0, 0.9}, Point2{0.3, 0.7}}) {
        const auto loop = circle_loop(center, 0.3, 64);
        auto res = transport(pts, loop, initial_cell(pts, loop.front()));
        CHECK(is_identity(res));
    }
}

TEST_CASE("polygon projections produce one point per state") {
    auto js = compute_spectrum(make(SystemKind::Prolate, {2.4}), 12, 42);
    auto p1 = polygon_projection(js.system, js, 0);
    auto p3 = polygon_projection(js.system, js, 2);
    CHECK(p1.size() == js.size());
    CHECK(p3.size() == js.size());
    // cylindrical: toric, square-filling lattice, no cut: J1 = |m1| hbar
    auto cj = compute_spectrum(make(SystemKind::Cylindrical), 12, 42);
    auto cp = polygon_projection(cj.system, cj, 0);
    for (std::size_t i = 0; i < cp.size(); ++i)
        CHECK(cp[i][1] == doctest::Approx(std::abs(cj.states[i].scaled1)));
}

TEST_SUITE_END();
