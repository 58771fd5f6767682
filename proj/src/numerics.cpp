#include "sphsep/numerics.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace sphsep::numerics {

namespace {

// Deterministic uniform double in [0,1) from a raw generator word.
// (uniform_real_distribution is implementation-defined; this is not.)
inline double unit_double(std::uint64_t word) {
    return static_cast<double>(word >> 11) * 0x1.0p-53;
}

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return unit_double(next()); }
};

} // namespace

// ---------------------------------------------------------------------------
// Root systems
// ---------------------------------------------------------------------------

int RootSystemProblem::total_roots() const {
    return std::accumulate(occupancy.begin(), occupancy.end(), 0);
}

void RootSystemProblem::validate() const {
    if (poles.size() < 2)
        throw InvalidProblem("root system: need at least two poles");
    for (std::size_t j = 0; j + 1 < poles.size(); ++j)
        if (!(poles[j] < poles[j + 1]))
            throw InvalidProblem("root system: poles must be strictly increasing");
    if (exponents.size() != poles.size())
        throw InvalidProblem("root system: one exponent per pole required");
    for (double g : exponents)
        if (!(g > 0.0) || !std::isfinite(g))
            throw InvalidProblem("root system: exponents must be positive");
    if (occupancy.size() + 1 != poles.size())
        throw InvalidProblem("root system: occupancy length must be #poles - 1");
    for (int n : occupancy)
        if (n < 0) throw InvalidProblem("root system: occupancy must be nonnegative");
}

std::vector<double> root_system_residual(const RootSystemProblem& p,
                                         const std::vector<double>& z) {
    const int d = static_cast<int>(z.size());
    std::vector<double> f(d, 0.0);
    for (int k = 0; k < d; ++k) {
        double s = 0.0;
        for (std::size_t j = 0; j < p.poles.size(); ++j)
            s += 0.5 * p.exponents[j] / (z[k] - p.poles[j]);
        for (int l = 0; l < d; ++l)
            if (l != k) s += 1.0 / (z[k] - z[l]);
        f[k] = s;
    }
    return f;
}

std::vector<double> accessory_parameters(const RootSystemProblem& p,
                                         const std::vector<double>& roots) {
    std::vector<double> q(p.poles.size(), 0.0);
    for (std::size_t j = 0; j < p.poles.size(); ++j) {
        double s = 0.0;
        for (double z : roots) s += 1.0 / (z - p.poles[j]);
        q[j] = p.exponents[j] * s;
    }
    return q;
}

namespace {

// Interval index of each root slot, in ascending root order.
std::vector<int> slot_intervals(const RootSystemProblem& p) {
    std::vector<int> iv;
    for (std::size_t j = 0; j < p.occupancy.size(); ++j)
        for (int i = 0; i < p.occupancy[j]; ++i) iv.push_back(static_cast<int>(j));
    return iv;
}

std::vector<double> seed_roots(const RootSystemProblem& p, SplitMix64& rng) {
    std::vector<double> z;
    for (std::size_t j = 0; j < p.occupancy.size(); ++j) {
        const int n = p.occupancy[j];
        if (n == 0) continue;
        const double lo = p.poles[j], hi = p.poles[j + 1];
        const double mid = 0.5 * (lo + hi), hw = 0.5 * (hi - lo);
        // Chebyshev nodes, slightly shrunk, with 1% seeded jitter.
        for (int i = 0; i < n; ++i) {
            double t = std::cos(M_PI * (2.0 * i + 1.0) / (2.0 * n));
            double x = mid - 0.92 * hw * t;
            x += (rng.uniform() - 0.5) * 0.02 * (hi - lo);
            x = std::min(std::max(x, lo + 1e-4 * (hi - lo)), hi - 1e-4 * (hi - lo));
            z.push_back(x);
        }
        std::sort(z.end() - n, z.end());
    }
    return z;
}

bool in_intervals(const RootSystemProblem& p, const std::vector<int>& iv,
                  const std::vector<double>& z) {
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (!(z[k] > p.poles[iv[k]] && z[k] < p.poles[iv[k] + 1])) return false;
        if (k > 0 && iv[k] == iv[k - 1] && !(z[k] > z[k - 1])) return false;
    }
    return true;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// Per-equation convergence floor: 1e-12 absolute, relaxed to what rounding
// permits when poles or roots nearly coalesce. Two effects bound the
// achievable residual: cancellation among the summed terms, and the fact
// that one ulp of z_k moves the equation by |dF_k/dz_k| * ulp.
std::vector<double> residual_floors(const RootSystemProblem& p, const std::vector<double>& z) {
    const int d = static_cast<int>(z.size());
    const double eps = std::numeric_limits<double>::epsilon();
    std::vector<double> tol(d, 0.5 * kRootResidualTol);
    for (int k = 0; k < d; ++k) {
        double scale = 0.0, dscale = 0.0;
        for (std::size_t j = 0; j < p.poles.size(); ++j) {
            const double r = std::abs(z[k] - p.poles[j]);
            scale += 0.5 * p.exponents[j] / r;
            dscale += 0.5 * p.exponents[j] / (r * r);
        }
        for (int l = 0; l < d; ++l) {
            if (l == k) continue;
            const double r = std::abs(z[k] - z[l]);
            scale += 1.0 / r;
            dscale += 1.0 / (r * r);
        }
        const double ulp = eps * std::max(1.0, std::abs(z[k]));
        tol[k] = std::max(tol[k], 32.0 * eps * scale + 4.0 * ulp * dscale);
    }
    return tol;
}

bool below_floor(const std::vector<double>& f, const std::vector<double>& tol) {
    for (std::size_t k = 0; k < f.size(); ++k)
        if (std::abs(f[k]) > tol[k]) return false;
    return true;
}

// One damped-Newton attempt from the given start; returns true on success.
bool newton_attempt(const RootSystemProblem& p, const std::vector<int>& iv,
                    std::vector<double>& z) {
    const int d = static_cast<int>(z.size());
    Eigen::MatrixXd J(d, d);
    Eigen::VectorXd step(d);
    std::vector<double> f = root_system_residual(p, z);
    double fnorm = max_abs(f);

    for (int iter = 0; iter < 300; ++iter) {
        if (below_floor(f, residual_floors(p, z))) return true;
        for (int k = 0; k < d; ++k) {
            double diag = 0.0;
            for (std::size_t j = 0; j < p.poles.size(); ++j) {
                double r = z[k] - p.poles[j];
                diag -= 0.5 * p.exponents[j] / (r * r);
            }
            for (int l = 0; l < d; ++l) {
                if (l == k) continue;
                double r = z[k] - z[l];
                J(k, l) = 1.0 / (r * r);
                diag -= 1.0 / (r * r);
            }
            J(k, k) = diag;
        }
        Eigen::VectorXd rhs(d);
        for (int k = 0; k < d; ++k) rhs(k) = -f[k];
        step = J.partialPivLu().solve(rhs);
        if (!step.allFinite()) return false;

        double lambda = 1.0;
        bool accepted = false;
        for (int half = 0; half < 16; ++half, lambda *= 0.5) {
            std::vector<double> zt(z);
            for (int k = 0; k < d; ++k) zt[k] += lambda * step(k);
            if (!in_intervals(p, iv, zt)) continue;
            std::vector<double> ft = root_system_residual(p, zt);
            double fn = max_abs(ft);
            if (fn < fnorm || below_floor(ft, residual_floors(p, zt))) {
                z.swap(zt);
                f.swap(ft);
                fnorm = fn;
                accepted = true;
                break;
            }
        }
        if (!accepted) return below_floor(f, residual_floors(p, z));
    }
    return below_floor(f, residual_floors(p, z));
}

} // namespace

std::vector<double> solve_root_system(const RootSystemProblem& p, std::uint64_t seed) {
    p.validate();
    const int d = p.total_roots();
    if (d == 0) return {};

    const std::vector<int> iv = slot_intervals(p);
    SplitMix64 rng(seed ^ 0x5bf0f1e5u);
    for (int restart = 0; restart < 50; ++restart) {
        std::vector<double> z = seed_roots(p, rng);
        if (newton_attempt(p, iv, z)) {
            std::sort(z.begin(), z.end());
            if (in_intervals(p, iv, z) &&
                below_floor(root_system_residual(p, z), residual_floors(p, z)))
                return z;
        }
    }
    throw NonConvergence("root system: Newton failed after 50 restarts");
}

// ---------------------------------------------------------------------------
// Tridiagonal eigenvalues
// ---------------------------------------------------------------------------

void Tridiag::validate() const {
    const std::size_t n = diag.size();
    if (n == 0) throw InvalidProblem("tridiag: empty");
    if (sub.size() + 1 != n || super.size() + 1 != n)
        throw InvalidProblem("tridiag: inconsistent band lengths");
    for (double x : diag)
        if (!std::isfinite(x)) throw InvalidProblem("tridiag: non-finite entry");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!std::isfinite(sub[i]) || !std::isfinite(super[i]))
            throw InvalidProblem("tridiag: non-finite entry");
}

namespace {

// det(T - x I) and its derivative via the standard three-term recurrence.
std::pair<double, double> charpoly(const Tridiag& t, double x) {
    const int n = t.n();
    double f0 = 1.0, f1 = t.diag[0] - x;
    double g0 = 0.0, g1 = -1.0;
    for (int k = 1; k < n; ++k) {
        double w = t.sub[k - 1] * t.super[k - 1];
        double f2 = (t.diag[k] - x) * f1 - w * f0;
        double g2 = (t.diag[k] - x) * g1 - f1 - w * g0;
        f0 = f1; f1 = f2;
        g0 = g1; g1 = g2;
        // Rescale to avoid overflow for larger n.
        double m = std::max(std::abs(f1), std::abs(g1));
        if (m > 1e150) {
            f0 /= m; f1 /= m; g0 /= m; g1 /= m;
        }
    }
    return {f1, g1};
}

} // namespace

std::vector<double> eigen_real(const Tridiag& t) {
    t.validate();
    const int n = t.n();
    if (n == 1) return {t.diag[0]};

    // Diagonal similarity making |sub| and |super| equal in magnitude.
    std::vector<double> s(n, 1.0);
    for (int i = 0; i + 1 < n; ++i) {
        double prod = std::abs(t.sub[i] * t.super[i]);
        double ratio = 1.0;
        if (prod > 0.0) ratio = std::sqrt(std::abs(t.sub[i]) / std::abs(t.super[i]));
        else if (t.super[i] != 0.0) ratio = std::abs(t.super[i]);
        s[i + 1] = s[i] * ratio;
        // Keep scalings bounded.
        if (s[i + 1] < 1e-120 || s[i + 1] > 1e120) s[i + 1] = s[i];
    }
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = t.diag[i];
    for (int i = 0; i + 1 < n; ++i) {
        m(i + 1, i) = t.sub[i] * s[i + 1] / s[i];
        m(i, i + 1) = t.super[i] * s[i] / s[i + 1];
    }

    Eigen::EigenSolver<Eigen::MatrixXd> es(m, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw NonConvergence("eigen_real: QR iteration failed");

    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) {
        const auto z = es.eigenvalues()(i);
        if (std::abs(z.imag()) > kRealnessTol)
            throw ComplexSpectrum("eigen_real: |Im| = " + std::to_string(std::abs(z.imag())));
        ev[i] = z.real();
    }
    // Newton polish on the characteristic polynomial of the original matrix.
    for (double& x : ev) {
        for (int it = 0; it < 3; ++it) {
            auto [f, g] = charpoly(t, x);
            if (g == 0.0) break;
            double dx = f / g;
            if (!std::isfinite(dx) || std::abs(dx) > 1.0 + std::abs(x)) break;
            x -= dx;
        }
    }
    std::sort(ev.begin(), ev.end());
    return ev;
}

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

void QuadratureSpec::validate() const {
    if (!(lower < upper)) throw InvalidProblem("quadrature: lower < upper required");
    if (!(rel_tol > 0.0 && rel_tol <= 1e-3))
        throw InvalidProblem("quadrature: rel_tol must lie in (0, 1e-3]");
}

namespace {

// Tanh-sinh nodes: x = c + h*tanh((pi/2) sinh t). Node offsets from the
// endpoints are computed directly so 1/sqrt singularities keep precision.
double tanh_sinh(const QuadratureSpec& spec, const std::function<double(double)>& f,
                 bool& converged) {
    const double a = spec.lower, b = spec.upper;
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double tmax = 4.0;

    auto node_sum = [&](double step, bool odd_only) {
        double acc = 0.0;
        const int kmax = static_cast<int>(std::floor(tmax / step));
        for (int k = odd_only ? 1 : 0; k <= kmax; k += odd_only ? 2 : 1) {
            const double tk = k * step;
            const double u = 0.5 * M_PI * std::sinh(tk);
            const double ch = std::cosh(u);
            const double w = 0.5 * M_PI * std::cosh(tk) / (ch * ch);
            if (k == 0) {
                acc += w * f(c);
                continue;
            }
            const double one_minus_tanh = 2.0 / (1.0 + std::exp(2.0 * u));
            const double d = h * one_minus_tanh;
            const double xr = b - d;
            const double xl = a + d;
            if (xr < b && xr > a) acc += w * f(xr);
            if (xl > a && xl < b) acc += w * f(xl);
        }
        return acc;
    };

    double step = 1.0;
    double sum = node_sum(step, false);
    double prev = h * step * sum;
    converged = false;
    double result = prev;
    for (int level = 1; level <= 12; ++level) {
        step *= 0.5;
        sum += node_sum(step, true);
        result = h * step * sum;
        const double err = std::abs(result - prev);
        const double scale = std::max(std::abs(result), 1e-300);
        if (level >= 3 && err <= spec.rel_tol * scale) {
            converged = true;
            return result;
        }
        prev = result;
    }
    return result;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double fa,
                        double b, double fb, double fm, double whole, double tol,
                        int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0) throw NoConvergence("quadrature: adaptive bisection depth exhausted");
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate(const QuadratureSpec& spec, const std::function<double(double)>& f) {
    spec.validate();
    bool ok = false;
    const double ts = tanh_sinh(spec, f, ok);
    if (ok) return ts;
    if (spec.kind == IntegrandKind::Smooth) {
        // Fallback: adaptive bisection, shrinking slightly off the endpoints.
        const double a = spec.lower, b = spec.upper;
        const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
        const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        const double tol = spec.rel_tol * std::max(std::abs(whole), 1.0);
        return adaptive_simpson(f, a, fa, b, fb, fm, whole, tol, 40);
    }
    throw NoConvergence("quadrature: tanh-sinh refinement stalled");
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_rule(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

} // namespace

double integrate_gauss(const std::function<double(double)>& f, double lo, double hi,
                       double rel_tol) {
    if (!(lo < hi)) return 0.0;
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    double prev = 0.0;
    bool have_prev = false;
    for (int n = 24; n <= 1536; n *= 2) {
        std::vector<double> x, w;
        gauss_rule(n, x, w);
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += w[i] * f(c + h * x[i]);
        acc *= h;
        if (have_prev && std::abs(acc - prev) <= rel_tol * std::max(std::abs(acc), 1e-300))
            return acc;
        prev = acc;
        have_prev = true;
    }
    throw NoConvergence("integrate_gauss: order doubling stalled");
}

// ---------------------------------------------------------------------------
// Classical orthogonal polynomials
// ---------------------------------------------------------------------------

double eval_gegenbauer(int n, double u, double x) {
    if (n < 0) throw InvalidProblem("gegenbauer: degree must be nonnegative");
    if (n == 0) return 1.0;
    double y0 = 1.0, y1 = 2.0 * u * x;
    for (int k = 2; k <= n; ++k) {
        double y2 = (2.0 * x * (k + u - 1.0) * y1 - (k + 2.0 * u - 2.0) * y0) / k;
        y0 = y1;
        y1 = y2;
    }
    return y1;
}

double eval_chebyshev2(int n, double x) { return eval_gegenbauer(n, 1.0, x); }

double eval_jacobi(int n, double alpha, double beta, double x) {
    if (n < 0) throw InvalidProblem("jacobi: degree must be nonnegative");
    if (n == 0) return 1.0;
    double y0 = 1.0;
    double y1 = 0.5 * (alpha - beta) + 0.5 * (alpha + beta + 2.0) * x;
    for (int k = 2; k <= n; ++k) {
        const double t2 = 2.0 * k + alpha + beta;
        const double c1 = 2.0 * k * (k + alpha + beta) * (t2 - 2.0);
        const double c2 = (t2 - 1.0) * (alpha * alpha - beta * beta);
        const double c3 = (t2 - 2.0) * (t2 - 1.0) * t2;
        const double c4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * t2;
        double y2 = ((c2 + c3 * x) * y1 - c4 * y0) / c1;
        y0 = y1;
        y1 = y2;
    }
    return y1;
}

double eval_assoc_legendre(int l, int m, double x) {
    if (l < 0) throw InvalidProblem("assoc_legendre: degree must be nonnegative");
    m = std::abs(m);
    if (m > l) return 0.0;
    if (std::abs(x) > 1.0 + 1e-12)
        throw InvalidProblem("assoc_legendre: |x| <= 1 required");
    // P_m^m with Condon-Shortley phase, then upward in l.
    double pmm = 1.0;
    if (m > 0) {
        const double s2 = std::max(0.0, (1.0 - x) * (1.0 + x));
        const double s = std::sqrt(s2);
        double fact = 1.0;
        for (int i = 0; i < m; ++i) {
            pmm *= -fact * s;
            fact += 2.0;
        }
    }
    if (l == m) return pmm;
    double pm1 = x * (2.0 * m + 1.0) * pmm;
    if (l == m + 1) return pm1;
    double p = 0.0;
    for (int k = m + 2; k <= l; ++k) {
        p = (x * (2.0 * k - 1.0) * pm1 - (k + m - 1.0) * pmm) / (k - m);
        pmm = pm1;
        pm1 = p;
    }
    return p;
}

double eval_classical(const ClassicalKind& kind, int n, double x) {
    switch (kind.family) {
        case ClassicalKind::gegenbauer: return eval_gegenbauer(n, kind.p1, x);
        case ClassicalKind::assoc_legendre:
            return eval_assoc_legendre(n, static_cast<int>(kind.p1), x);
        case ClassicalKind::jacobi: return eval_jacobi(n, kind.p1, kind.p2, x);
        case ClassicalKind::chebyshev2: return eval_chebyshev2(n, x);
    }
    throw InvalidProblem("eval_classical: unknown family");
}

namespace {

std::vector<double> poly_mul_linear(const std::vector<double>& p, double c0, double c1) {
    // p(x) * (c0 + c1 x)
    std::vector<double> r(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[i] += c0 * p[i];
        r[i + 1] += c1 * p[i];
    }
    return r;
}

} // namespace

std::vector<double> gegenbauer_coeffs(int n, double u) {
    if (n < 0) throw InvalidProblem("gegenbauer_coeffs: degree must be nonnegative");
    std::vector<double> y0 = {1.0};
    if (n == 0) return y0;
    std::vector<double> y1 = {0.0, 2.0 * u};
    for (int k = 2; k <= n; ++k) {
        std::vector<double> y2 = poly_mul_linear(y1, 0.0, 2.0 * (k + u - 1.0) / k);
        for (std::size_t i = 0; i < y0.size(); ++i)
            y2[i] -= (k + 2.0 * u - 2.0) / k * y0[i];
        y0.swap(y1);
        y1.swap(y2);
    }
    return y1;
}

std::vector<double> jacobi_coeffs(int n, double alpha, double beta) {
    if (n < 0) throw InvalidProblem("jacobi_coeffs: degree must be nonnegative");
    std::vector<double> y0 = {1.0};
    if (n == 0) return y0;
    std::vector<double> y1 = {0.5 * (alpha - beta), 0.5 * (alpha + beta + 2.0)};
    for (int k = 2; k <= n; ++k) {
        const double t2 = 2.0 * k + alpha + beta;
        const double c1 = 2.0 * k * (k + alpha + beta) * (t2 - 2.0);
        const double c2 = (t2 - 1.0) * (alpha * alpha - beta * beta);
        const double c3 = (t2 - 2.0) * (t2 - 1.0) * t2;
        const double c4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * t2;
        std::vector<double> y2 = poly_mul_linear(y1, c2 / c1, c3 / c1);
        for (std::size_t i = 0; i < y0.size(); ++i) y2[i] -= c4 / c1 * y0[i];
        y0.swap(y1);
        y1.swap(y2);
    }
    return y1;
}

std::vector<double> assoc_legendre_poly_part(int l, int m) {
    if (l < 0 || m < 0 || m > l)
        throw InvalidProblem("assoc_legendre_poly_part: need 0 <= m <= l");
    // (1/(2^l l!)) d^{l+m}/dx^{l+m} (x^2-1)^l
    std::vector<double> p = {1.0};
    for (int i = 0; i < l; ++i) {
        std::vector<double> r(p.size() + 2, 0.0);
        for (std::size_t k = 0; k < p.size(); ++k) {
            r[k] -= p[k];
            r[k + 2] += p[k];
        }
        p.swap(r);
    }
    for (int i = 0; i < l + m; ++i) {
        std::vector<double> r(std::max<std::size_t>(p.size(), 1) - 1, 0.0);
        for (std::size_t k = 1; k < p.size(); ++k) r[k - 1] = p[k] * static_cast<double>(k);
        p.swap(r);
    }
    double norm = 1.0;
    for (int i = 1; i <= l; ++i) norm *= 2.0 * i;
    for (double& c : p) c /= norm;
    return p;
}

std::vector<std::pair<double, double>> poly_roots(const std::vector<double>& coeffs) {
    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg > 0 && coeffs[deg] == 0.0) --deg;
    if (deg <= 0) return {};
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coeffs[i] / coeffs[deg];
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    std::vector<std::pair<double, double>> roots(deg);
    for (int i = 0; i < deg; ++i)
        roots[i] = {es.eigenvalues()(i).real(), es.eigenvalues()(i).imag()};
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace sphsep::numerics
