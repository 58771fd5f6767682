#include "sphsep/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>

#include "sphsep/numerics.hpp"

namespace sphsep {

std::string kind_name(SystemKind k) {
    switch (k) {
        case SystemKind::Ellipsoidal: return "ellipsoidal";
        case SystemKind::Prolate: return "prolate";
        case SystemKind::Oblate: return "oblate";
        case SystemKind::Lame: return "lame";
        case SystemKind::Spherical23: return "spherical23";
        case SystemKind::Cylindrical: return "cylindrical";
        case SystemKind::S2Ellipsoidal: return "s2-ellipsoidal";
        case SystemKind::S2Spherical: return "s2-spherical";
    }
    throw InvalidProblem("unknown system kind");
}

SystemKind kind_from_name(const std::string& name) {
    for (SystemKind k : {SystemKind::Ellipsoidal, SystemKind::Prolate, SystemKind::Oblate,
                         SystemKind::Lame, SystemKind::Spherical23, SystemKind::Cylindrical,
                         SystemKind::S2Ellipsoidal, SystemKind::S2Spherical})
        if (kind_name(k) == name) return k;
    throw InvalidProblem("unknown system kind: " + name);
}

int SystemSpec::nvars() const {
    return (kind == SystemKind::S2Ellipsoidal || kind == SystemKind::S2Spherical) ? 3 : 4;
}

void SystemSpec::validate() const {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw InvalidProblem(kind_name(kind) + ": expected " + std::to_string(n) +
                                 " parameters, got " + std::to_string(params.size()));
    };
    for (double p : params)
        if (!std::isfinite(p)) throw InvalidProblem("system parameters must be finite");
    switch (kind) {
        case SystemKind::Ellipsoidal:
            need(4);
            for (int i = 0; i < 3; ++i)
                if (!(params[i] < params[i + 1]))
                    throw InvalidProblem("ellipsoidal: e must be strictly increasing");
            break;
        case SystemKind::Prolate:
        case SystemKind::Oblate:
            need(1);
            if (!(params[0] > 1.0)) throw InvalidProblem("prolate/oblate: a > 1 required");
            break;
        case SystemKind::Lame:
            need(3);
            if (!(params[0] < params[1] && params[1] < params[2]))
                throw InvalidProblem("lame: f must be strictly increasing");
            if (params[0] != 0.0 || params[1] != 1.0)
                throw InvalidProblem("lame: f normalised to (0, 1, a) expected");
            break;
        case SystemKind::S2Ellipsoidal:
            need(3);
            if (!(params[0] < params[1] && params[1] < params[2]))
                throw InvalidProblem("s2-ellipsoidal: e must be strictly increasing");
            break;
        case SystemKind::Spherical23:
        case SystemKind::Cylindrical:
        case SystemKind::S2Spherical:
            need(0);
            break;
    }
}

std::array<double, 4> SystemSpec::e4() const {
    if (kind != SystemKind::Ellipsoidal) throw InvalidProblem("e4(): not ellipsoidal");
    return {params[0], params[1], params[2], params[3]};
}

double SystemSpec::a() const {
    switch (kind) {
        case SystemKind::Prolate:
        case SystemKind::Oblate: return params[0];
        case SystemKind::Lame: return params[2];
        default: throw InvalidProblem("a(): system has no axis ratio");
    }
}

std::array<double, 3> SystemSpec::f3() const {
    if (kind != SystemKind::Lame) throw InvalidProblem("f3(): not lame");
    return {params[0], params[1], params[2]};
}

std::array<double, 3> SystemSpec::e3() const {
    if (kind != SystemKind::S2Ellipsoidal) throw InvalidProblem("e3(): not s2-ellipsoidal");
    return {params[0], params[1], params[2]};
}

} // namespace sphsep

namespace sphsep::geometry {

namespace {
constexpr double kBoxSlack = 1e-12;
constexpr double kSingularTol = 1e-12;
}

void SpherePoint::validate() const {
    if (x.size() != 3 && x.size() != 4)
        throw InvalidProblem("sphere point: dimension must be 3 or 4");
    double s = 0.0;
    for (double xi : x) s += xi * xi;
    if (std::abs(s - 1.0) > 1e-10)
        throw InvalidProblem("sphere point: |x|^2 differs from 1 by " +
                             std::to_string(std::abs(s - 1.0)));
}

std::vector<std::pair<double, double>> coordinate_box(const SystemSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case SystemKind::Ellipsoidal: {
            auto e = spec.e4();
            return {{e[0], e[1]}, {e[1], e[2]}, {e[2], e[3]}};
        }
        case SystemKind::Prolate: {
            double a = spec.a();
            return {{0.0, 1.0}, {0.0, 1.0}, {1.0, a}};
        }
        case SystemKind::Oblate: {
            double a = spec.a();
            return {{0.0, 1.0}, {1.0, a}, {0.0, 1.0}};
        }
        case SystemKind::Lame: {
            auto f = spec.f3();
            return {{0.0, 1.0}, {f[0], f[1]}, {f[1], f[2]}};
        }
        case SystemKind::Spherical23:
        case SystemKind::Cylindrical:
            return {{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}};
        case SystemKind::S2Ellipsoidal: {
            auto e = spec.e3();
            return {{e[0], e[1]}, {e[1], e[2]}};
        }
        case SystemKind::S2Spherical:
            return {{0.0, 1.0}, {0.0, 1.0}};
    }
    throw InvalidProblem("coordinate_box: unknown kind");
}

std::vector<double> squared_cartesian(const SystemSpec& spec, const std::vector<double>& s) {
    const auto box = coordinate_box(spec);
    if (s.size() != box.size())
        throw OutOfBox("separable coordinates: wrong dimension");
    for (std::size_t j = 0; j < box.size(); ++j) {
        const double width = box[j].second - box[j].first;
        if (s[j] < box[j].first - kBoxSlack * width || s[j] > box[j].second + kBoxSlack * width)
            throw OutOfBox("separable coordinate " + std::to_string(j + 1) + " outside its interval");
    }

    switch (spec.kind) {
        case SystemKind::Ellipsoidal: {
            auto e = spec.e4();
            std::vector<double> x2(4);
            for (int i = 0; i < 4; ++i) {
                double num = 1.0, den = 1.0;
                for (int j = 0; j < 3; ++j) num *= s[j] - e[i];
                for (int k = 0; k < 4; ++k)
                    if (k != i) den *= e[k] - e[i];
                x2[i] = num / den;
            }
            return x2;
        }
        case SystemKind::Prolate: {
            const double a = spec.a();
            return {s[0] * s[2] / a,
                    -(s[0] - 1.0) * s[1] * (s[2] - 1.0) / (a - 1.0),
                    (s[0] - 1.0) * (s[1] - 1.0) * (s[2] - 1.0) / (a - 1.0),
                    (a - s[0]) * (a - s[2]) / ((a - 1.0) * a)};
        }
        case SystemKind::Oblate: {
            const double a = spec.a();
            return {s[0] * s[1] / a,
                    -(s[0] - 1.0) * (s[1] - 1.0) / (a - 1.0),
                    (s[0] - a) * (s[1] - a) * s[2] / (a * (a - 1.0)),
                    (s[0] - a) * (s[1] - a) * (1.0 - s[2]) / (a * (a - 1.0))};
        }
        case SystemKind::Lame: {
            auto f = spec.f3();
            return {s[0],
                    (1.0 - s[0]) * (s[1] - f[0]) * (s[2] - f[0]) /
                        ((f[1] - f[0]) * (f[2] - f[0])),
                    (s[0] - 1.0) * (f[1] - s[1]) * (f[1] - s[2]) /
                        ((f[0] - f[1]) * (f[1] - f[2])),
                    (s[0] - 1.0) * (f[2] - s[1]) * (f[2] - s[2]) /
                        ((f[1] - f[2]) * (f[2] - f[0]))};
        }
        case SystemKind::Spherical23:
            return {s[0], (1.0 - s[0]) * s[1], (1.0 - s[0]) * (1.0 - s[1]) * s[2],
                    (1.0 - s[0]) * (1.0 - s[1]) * (1.0 - s[2])};
        case SystemKind::Cylindrical:
            return {s[0] * s[1], s[1] * (1.0 - s[0]), s[2] * (1.0 - s[1]),
                    (1.0 - s[1]) * (1.0 - s[2])};
        case SystemKind::S2Ellipsoidal: {
            auto e = spec.e3();
            std::vector<double> x2(3);
            for (int i = 0; i < 3; ++i) {
                double num = 1.0, den = 1.0;
                for (int j = 0; j < 2; ++j) num *= s[j] - e[i];
                for (int k = 0; k < 3; ++k)
                    if (k != i) den *= e[k] - e[i];
                x2[i] = num / den;
            }
            return x2;
        }
        case SystemKind::S2Spherical:
            return {s[0], (1.0 - s[0]) * s[1], (1.0 - s[0]) * (1.0 - s[1])};
    }
    throw InvalidProblem("squared_cartesian: unknown kind");
}

SpherePoint to_cartesian(const SystemSpec& spec, const std::vector<double>& s,
                         const std::vector<int>& signs) {
    const auto x2 = squared_cartesian(spec, s);
    if (signs.size() != x2.size())
        throw InvalidProblem("to_cartesian: one sign per coordinate required");
    SpherePoint p;
    p.x.resize(x2.size());
    for (std::size_t i = 0; i < x2.size(); ++i) {
        if (signs[i] != 1 && signs[i] != -1)
            throw InvalidProblem("to_cartesian: signs must be +-1");
        p.x[i] = signs[i] * std::sqrt(std::max(0.0, x2[i]));
    }
    return p;
}

namespace {

// Real roots of sum_i w_i * prod_{k != i} (z - e_k), one per interval
// (e_j, e_{j+1}), via the companion matrix of the cleared-denominator
// polynomial. w must be positive.
std::vector<double> interval_roots(const std::vector<double>& e, const std::vector<double>& w) {
    const int n = static_cast<int>(e.size());
    // Expand the polynomial: degree n-1, leading coefficient sum(w) = 1.
    std::vector<double> poly(n, 0.0);
    for (int i = 0; i < n; ++i) {
        std::vector<double> f = {1.0};
        for (int k = 0; k < n; ++k) {
            if (k == i) continue;
            std::vector<double> g(f.size() + 1, 0.0);
            for (std::size_t j = 0; j < f.size(); ++j) {
                g[j] += -e[k] * f[j];
                g[j + 1] += f[j];
            }
            f.swap(g);
        }
        for (std::size_t j = 0; j < f.size(); ++j) poly[j] += w[i] * f[j];
    }
    auto roots = numerics::poly_roots(poly);
    if (static_cast<int>(roots.size()) != n - 1)
        throw SingularStratum("from_cartesian: degenerate coordinate polynomial");
    std::vector<double> s;
    for (auto [re, im] : roots) {
        if (std::abs(im) > 1e-8)
            throw SingularStratum("from_cartesian: complex coordinate root");
        s.push_back(re);
    }
    std::sort(s.begin(), s.end());
    for (int j = 0; j < n - 1; ++j) s[j] = std::min(std::max(s[j], e[j]), e[j + 1]);
    return s;
}

} // namespace

std::vector<double> from_cartesian(const SystemSpec& spec, const SpherePoint& p) {
    spec.validate();
    p.validate();
    if (static_cast<int>(p.x.size()) != spec.nvars())
        throw InvalidProblem("from_cartesian: point dimension mismatch");
    for (double xi : p.x)
        if (std::abs(xi) < kSingularTol)
            throw SingularStratum("from_cartesian: point lies on a coordinate plane");

    std::vector<double> x2(p.x.size());
    for (std::size_t i = 0; i < p.x.size(); ++i) x2[i] = p.x[i] * p.x[i];

    switch (spec.kind) {
        case SystemKind::Ellipsoidal: {
            auto e = spec.e4();
            return interval_roots({e[0], e[1], e[2], e[3]}, x2);
        }
        case SystemKind::Prolate: {
            const double a = spec.a();
            const double sum = a + x2[0] - (a - 1.0) * x2[3];
            const double prod = a * x2[0];
            const double disc = std::max(0.0, sum * sum - 4.0 * prod);
            const double r = std::sqrt(disc);
            double s1 = 0.5 * (sum - r), s3 = 0.5 * (sum + r);
            s1 = std::min(std::max(s1, 0.0), 1.0);
            s3 = std::min(std::max(s3, 1.0), a);
            const double s2 = x2[1] / (x2[1] + x2[2]);
            return {s1, s2, s3};
        }
        case SystemKind::Oblate: {
            const double a = spec.a();
            const double sum = 1.0 + a * x2[0] + (a - 1.0) * x2[1];
            const double prod = a * x2[0];
            const double disc = std::max(0.0, sum * sum - 4.0 * prod);
            const double r = std::sqrt(disc);
            double s1 = 0.5 * (sum - r), s2 = 0.5 * (sum + r);
            s1 = std::min(std::max(s1, 0.0), 1.0);
            s2 = std::min(std::max(s2, 1.0), a);
            const double s3 = x2[2] / (x2[2] + x2[3]);
            return {s1, s2, s3};
        }
        case SystemKind::Lame: {
            auto f = spec.f3();
            auto tail = interval_roots({f[0], f[1], f[2]}, {x2[1], x2[2], x2[3]});
            return {x2[0], tail[0], tail[1]};
        }
        case SystemKind::Spherical23: {
            return {x2[0], x2[1] / (1.0 - x2[0]), x2[2] / (x2[2] + x2[3])};
        }
        case SystemKind::Cylindrical: {
            const double s2 = x2[0] + x2[1];
            return {x2[0] / s2, s2, x2[2] / (x2[2] + x2[3])};
        }
        case SystemKind::S2Ellipsoidal: {
            auto e = spec.e3();
            return interval_roots({e[0], e[1], e[2]}, x2);
        }
        case SystemKind::S2Spherical: {
            return {x2[0], x2[1] / (x2[1] + x2[2])};
        }
    }
    throw InvalidProblem("from_cartesian: unknown kind");
}

SystemSpec degenerate(const SystemSpec& spec, SystemKind target, double eps) {
    spec.validate();
    if (spec.kind != SystemKind::Ellipsoidal)
        throw InvalidProblem("degenerate: base system must be ellipsoidal");
    if (!(eps > 0.0)) throw InvalidProblem("degenerate: eps must be positive");
    auto e = spec.e4();
    SystemSpec out;
    out.kind = SystemKind::Ellipsoidal;
    switch (target) {
        case SystemKind::Prolate:
            out.params = {e[0], e[1], e[1] + eps, e[3]};
            break;
        case SystemKind::Oblate:
            out.params = {e[0], e[1], e[2], e[2] + eps};
            break;
        case SystemKind::Lame:
            out.params = {-1.0 / eps, e[1], e[2], e[3]};
            break;
        default:
            throw UnreachableTarget("degenerate: target must be prolate, oblate or lame");
    }
    out.validate();
    return out;
}

nlohmann::json system_to_json(const SystemSpec& spec) {
    return nlohmann::json{{"kind", kind_name(spec.kind)}, {"params", spec.params}};
}

SystemSpec system_from_json(const nlohmann::json& j) {
    SystemSpec spec;
    spec.kind = kind_from_name(j.at("kind").get<std::string>());
    spec.params = j.value("params", std::vector<double>{});
    spec.validate();
    return spec;
}

} // namespace sphsep::geometry
