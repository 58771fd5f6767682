#include "sphsep/actions.hpp"

#include <cmath>

#include "sphsep/numerics.hpp"

namespace sphsep::actions {

namespace {

constexpr double kEmptyWindow = 1e-12;

// Roots of -Et z^2 + b z - c, sorted. Throws OutsideImage on a negative
// discriminant beyond rounding.
std::pair<double, double> turning_points(double Et, double b, double c) {
    const double disc = b * b - 4.0 * Et * c;
    const double scale = std::max({1.0, b * b, std::abs(4.0 * Et * c)});
    if (disc < -1e-11 * scale)
        throw OutsideImage("actions: complex turning points");
    const double r = std::sqrt(std::max(0.0, disc));
    const double lo = (b - r) / (2.0 * Et), hi = (b + r) / (2.0 * Et);
    return {lo, hi};
}

double window(const std::function<double(double)>& p2, double lo, double hi) {
    if (!(hi - lo > kEmptyWindow)) return 0.0;
    const double mid = p2(0.5 * (lo + hi));
    if (mid < 0.0 && std::sqrt(-mid) * (hi - lo) > 1e-8)
        throw OutsideImage("actions: p^2 < 0 over a required window");
    return window_integral(p2, lo, hi);
}

} // namespace

double window_integral(const std::function<double(double)>& p2, double lo, double hi) {
    if (!(hi - lo > kEmptyWindow)) return 0.0;
    const double w = hi - lo;
    auto integrand = [&](double th) {
        const double s = std::sin(th), c = std::cos(th);
        const double z = lo + w * s * s;
        if (z <= lo || z >= hi) return 0.0;
        const double v = p2(z);
        return v <= 0.0 ? 0.0 : std::sqrt(v) * w * 2.0 * s * c;
    };
    return numerics::integrate_gauss(integrand, 0.0, 0.5 * M_PI, 1e-10);
}

ActionTriple actions_ellipsoidal(const std::array<double, 4>& e, double Et, double lambda1,
                                 double lambda2) {
    auto [R1, R2] = turning_points(Et, lambda1, lambda2);
    // Factored numerator: a nearly double root next to a denominator zero
    // would otherwise lose all significant digits to cancellation.
    auto p2 = [&, R1 = R1, R2 = R2](double z) {
        double den = 4.0;
        for (double ei : e) den *= z - ei;
        return -Et * (z - R1) * (z - R2) / den;
    };
    ActionTriple J;
    J.J1 = 2.0 * window(p2, e[0], std::min(R1, e[1])) / M_PI;
    J.J2 = 2.0 * window(p2, std::max(R1, e[1]), std::min(R2, e[2])) / M_PI;
    J.J3 = 2.0 * window(p2, std::max(R2, e[2]), e[3]) / M_PI;
    return J;
}

ActionTriple actions_prolate(double a, double Et, double m, double lambda) {
    m = std::abs(m);
    const double b = lambda + Et + (a - 1.0) * m * m;
    auto [r1, r2] = turning_points(Et, b, lambda);
    auto p2 = [=](double s) {
        return -Et * (s - r1) * (s - r2) / (4.0 * s * (s - 1.0) * (s - 1.0) * (s - a));
    };
    ActionTriple J;
    J.J1 = 2.0 * window(p2, 0.0, std::min(r1, 1.0)) / M_PI;
    J.J2 = m;
    J.J3 = 2.0 * window(p2, std::max(1.0, r2), a) / M_PI;
    return J;
}

ActionTriple actions_oblate(double a, double Et, double m, double g) {
    m = std::abs(m);
    const double b = Et * a + g - (a - 1.0) * m * m;
    auto [r1, r2] = turning_points(Et, b, a * g);
    auto p2 = [=](double s) {
        return -Et * (s - r1) * (s - r2) / (4.0 * s * (s - 1.0) * (s - a) * (s - a));
    };
    ActionTriple J;
    J.J1 = 2.0 * window(p2, 0.0, std::min(r1, 1.0)) / M_PI;
    J.J2 = 2.0 * window(p2, std::max(r1, 1.0), std::min(r2, a)) / M_PI;
    J.J3 = m;
    return J;
}

ActionTriple actions_lame(const std::array<double, 3>& f, double Et, double fval, double g) {
    if (fval > Et + 1e-12) throw OutsideImage("actions: f above the energy");
    const double r2 = (Et - fval > 1e-300) ? g / (Et - fval) : 1e300;
    auto p2 = [=](double s) {
        return (fval - Et) * (s - r2) /
               (4.0 * (s - f[0]) * (s - f[1]) * (s - f[2]));
    };
    ActionTriple J;
    J.J1 = std::sqrt(Et) - std::sqrt(std::max(0.0, Et - fval));
    J.J2 = 2.0 * window(p2, f[0], std::min(r2, f[1])) / M_PI;
    J.J3 = 2.0 * window(p2, std::max(f[1], r2), f[2]) / M_PI;
    return J;
}

ActionTriple actions_spherical(double fval, double m, double Et) {
    if (fval > Et + 1e-12) throw OutsideImage("actions: f above the energy");
    const double c = std::sqrt(std::max(0.0, Et - fval));
    return {std::sqrt(Et) - c, c - std::abs(m), std::abs(m)};
}

ActionTriple actions_cylindrical(double m1, double m2, double Et) {
    return {std::abs(m1), std::sqrt(Et) - std::abs(m1) - std::abs(m2), std::abs(m2)};
}

ActionTriple actions_for_state(const SystemSpec& spec, const QuantumState& st, double hbar,
                               EtildeMode mode) {
    const double h2 = hbar * hbar;
    const double Et = (mode == EtildeMode::Unit) ? 1.0 : 1.0 - h2;
    switch (spec.kind) {
        case SystemKind::Ellipsoidal:
            return actions_ellipsoidal(spec.e4(), Et, st.raw1 * h2, st.raw2 * h2);
        case SystemKind::Prolate:
            return actions_prolate(spec.a(), Et, st.raw1 * hbar, st.raw2 * h2);
        case SystemKind::Oblate:
            return actions_oblate(spec.a(), Et, st.raw1 * hbar, st.raw2 * h2);
        case SystemKind::Lame:
            return actions_lame(spec.f3(), Et, st.raw1 * h2, st.raw2 * h2);
        case SystemKind::Spherical23:
            return actions_spherical(st.raw2 * h2, st.raw1 * hbar, Et);
        case SystemKind::Cylindrical:
            return actions_cylindrical(st.raw1 * hbar, st.raw2 * hbar, Et);
        default:
            throw InvalidProblem("actions_for_state: no action map for S2 systems");
    }
}

} // namespace sphsep::actions
