#include "sphsep/spectra_heun.hpp"

#include <algorithm>
#include <cmath>

namespace sphsep::spectra_heun {

namespace {

constexpr int kMaxDegree = 64;

void sort_states(JointSpectrum& js) {
    std::sort(js.states.begin(), js.states.end(),
              [](const QuantumState& a, const QuantumState& b) {
                  return state_key(a) < state_key(b);
              });
}

// Parity bits about the two phase axes contributed by Re/Im[(x_p + i x_q)^|m|];
// the real part is taken for m >= 0, the imaginary part for m < 0.
std::pair<int, int> phase_parity(int m) {
    const int absm = std::abs(m);
    if (m >= 0) return {absm % 2, 0};
    return {(absm + 1) % 2, 1};
}

} // namespace

HeunParams shift_at_0(HeunParams p) {
    const double s = 1.0 - p.gamma;
    p.q += s * (p.a * p.delta + p.eps);
    p.alpha += s;
    p.beta += s;
    p.gamma = 2.0 - p.gamma;
    return p;
}

HeunParams shift_at_1(HeunParams p) {
    const double s = 1.0 - p.delta;
    p.q += p.a * p.gamma * s;
    p.alpha += s;
    p.beta += s;
    p.delta = 2.0 - p.delta;
    return p;
}

HeunParams shift_at_a(HeunParams p) {
    const double s = 1.0 - p.eps;
    p.q += p.gamma * s;
    p.alpha += s;
    p.beta += s;
    p.eps = 2.0 - p.eps;
    return p;
}

numerics::Tridiag heun_matrix(const HeunParams& p, int d) {
    if (d < 0 || d > kMaxDegree)
        throw InvalidProblem("heun_matrix: degree must lie in [0, 64]");
    if (std::abs(p.fuchs_defect()) > 1e-12)
        throw InvalidProblem("heun_matrix: Fuchs relation violated");
    const double ctrunc = (d + p.alpha) * (d + p.beta);
    if (std::abs(ctrunc) > 1e-9 * std::max(1.0, std::abs(p.beta) * (d + 1)))
        throw TruncationViolated("heun_matrix: alpha != -d, series does not terminate");

    numerics::Tridiag t;
    t.diag.resize(d + 1);
    t.sub.resize(d);
    t.super.resize(d);
    for (int i = 0; i <= d; ++i) {
        t.diag[i] = -double(i) * ((i - 1 + p.gamma) * (p.a + 1.0) + p.a * p.delta + p.eps);
        if (i < d) t.super[i] = p.a * (i + 1.0) * (i + p.gamma);
        if (i > 0) t.sub[i - 1] = (i - 1 + p.alpha) * (i - 1 + p.beta);
    }
    return t;
}

std::vector<double> heun_poly_coeffs(const HeunParams& p, int d, double q) {
    std::vector<double> c(d + 1, 0.0);
    c[0] = 1.0;
    if (d == 0) return c;
    // a gamma c1 = q c0
    c[1] = q / (p.a * p.gamma);
    for (int i = 1; i < d; ++i) {
        const double A = p.a * (i + 1.0) * (i + p.gamma);
        const double B = double(i) * ((i - 1 + p.gamma) * (p.a + 1.0) + p.a * p.delta + p.eps);
        const double C = (i - 1 + p.alpha) * (i - 1 + p.beta);
        c[i + 1] = ((B + q) * c[i] - C * c[i - 1]) / A;
    }
    return c;
}

std::vector<double> HeunBlock::spectral_values() const {
    const auto qt = numerics::eigen_real(heun_matrix(params, d));
    std::vector<double> vals(qt.size());
    for (std::size_t k = 0; k < qt.size(); ++k)
        vals[k] = q_off + q_scale * (qt[k] - qshift);
    return vals;
}

double HeunBlock::q_tilde_of_spectral(double value) const {
    return (value - q_off) / q_scale + qshift;
}

namespace {

HeunBlock make_block(HeunParams base, bool s0, bool s1, bool sa, int d, double q_off,
                     double q_scale) {
    HeunParams shifted = base;
    HeunParams zero = base;
    zero.q = 0.0;
    if (s0) { shifted = shift_at_0(shifted); zero = shift_at_0(zero); }
    if (s1) { shifted = shift_at_1(shifted); zero = shift_at_1(zero); }
    if (sa) { shifted = shift_at_a(shifted); zero = shift_at_a(zero); }
    if (std::abs(shifted.alpha + d) > 1e-9)
        throw TruncationViolated("heun block: shifted alpha is not -d");
    shifted.alpha = -double(d); // exact
    shifted.beta = shifted.gamma + shifted.delta + shifted.eps - 1.0 - shifted.alpha;
    HeunBlock blk;
    blk.params = shifted;
    blk.d = d;
    blk.qshift = zero.q;
    blk.q_off = q_off;
    blk.q_scale = q_scale;
    return blk;
}

} // namespace

HeunBlock prolate_block(double a, int absm, int D, int mu1, int mu4) {
    if (!(a > 1.0)) throw InvalidProblem("prolate: a > 1 required");
    const int rem = D - absm - mu1 - mu4;
    if (absm < 0 || rem < 0 || rem % 2 != 0)
        throw InvalidProblem("prolate block: (D, m, class) not admissible");
    const int d = rem / 2;
    HeunParams base;
    base.a = a;
    base.gamma = 0.5;
    base.delta = 1.0 + absm;
    base.eps = 0.5;
    base.alpha = 0.5 * (absm - D);
    base.beta = 0.5 * (absm + D + 2.0);
    // q = (a|m| - lambda)/4  =>  lambda = a|m| - 4q
    return make_block(base, mu1 == 1, false, mu4 == 1, d, a * absm, -4.0);
}

HeunBlock oblate_block(double a, int absm, int D, int mu1, int mu2) {
    if (!(a > 1.0)) throw InvalidProblem("oblate: a > 1 required");
    const int rem = D - absm - mu1 - mu2;
    if (absm < 0 || rem < 0 || rem % 2 != 0)
        throw InvalidProblem("oblate block: (D, m, class) not admissible");
    const int d = rem / 2;
    HeunParams base;
    base.a = a;
    base.gamma = 0.5;
    base.delta = 0.5;
    base.eps = 1.0 + absm;
    base.alpha = 0.5 * (absm - D);
    base.beta = 0.5 * (absm + D + 2.0);
    // q = (|m| - lambda)/4  =>  lambda = |m| - 4q
    return make_block(base, mu1 == 1, mu2 == 1, false, d, double(absm), -4.0);
}

HeunBlock lame_block(double a, int d, const std::array<int, 3>& mu234, int D) {
    if (!(a > 1.0)) throw InvalidProblem("lame: a > 1 required");
    const int U = mu234[0] + mu234[1] + mu234[2];
    if (d < 0 || D < 2 * d + U) throw InvalidProblem("lame block: inadmissible (D, d, class)");
    HeunParams base;
    base.a = a;
    base.gamma = base.delta = base.eps = 0.5;
    base.alpha = -d - 0.5 * U;
    base.beta = 0.5 + d + 0.5 * U;
    // numerator ((f-E)z + g)/4: q = -g/4  =>  g = -4q
    return make_block(base, mu234[0] == 1, mu234[1] == 1, mu234[2] == 1, d, 0.0, -4.0);
}

HeunBlock s2_ellipsoidal_block(const std::array<double, 3>& e, int ell,
                               const std::array<int, 3>& mu) {
    if (!(e[0] < e[1] && e[1] < e[2]))
        throw InvalidProblem("s2 ellipsoidal: e must be strictly increasing");
    const int U = mu[0] + mu[1] + mu[2];
    if (ell < U || (ell - U) % 2 != 0)
        throw InvalidProblem("s2 ellipsoidal block: class parity mismatch");
    const int d = (ell - U) / 2;
    const double h = e[1] - e[0];
    const double anorm = (e[2] - e[0]) / h;
    const double E = double(ell) * (ell + 1);
    HeunParams base;
    base.a = anorm;
    base.gamma = base.delta = base.eps = 0.5;
    base.alpha = -0.5 * ell;
    base.beta = 0.5 * (ell + 1.0);
    // normalised numerator (-E z + lambda')/4: q = -lambda'/4, lambda = E e1 + h lambda'
    return make_block(base, mu[0] == 1, mu[1] == 1, mu[2] == 1, d, E * e[0], -4.0 * h);
}

JointSpectrum prolate_spectrum(double a, int D) {
    if (D < 0) throw InvalidProblem("prolate_spectrum: D >= 0 required");
    if (D > 2 * kMaxDegree) throw InvalidProblem("prolate_spectrum: D cap exceeded");
    JointSpectrum js;
    js.system.kind = SystemKind::Prolate;
    js.system.params = {a};
    js.D = D;
    js.hbar = hbar_of(D);
    const double h = js.hbar, h2 = h * h;
    for (int mu1 = 0; mu1 <= 1; ++mu1)
        for (int mu4 = 0; mu4 <= 1; ++mu4)
            for (int m = -D; m <= D; ++m) {
                const int rem = D - std::abs(m) - mu1 - mu4;
                if (rem < 0 || rem % 2 != 0) continue;
                const auto blk = prolate_block(a, std::abs(m), D, mu1, mu4);
                const auto lambdas = blk.spectral_values();
                for (int k = 0; k < static_cast<int>(lambdas.size()); ++k) {
                    QuantumState qs;
                    qs.D = D;
                    auto [p2, p3] = phase_parity(m);
                    qs.mu = {mu1, p2, p3, mu4};
                    qs.q = {m, blk.d, k};
                    qs.raw1 = m;
                    qs.raw2 = lambdas[k];
                    qs.scaled1 = m * h;
                    qs.scaled2 = lambdas[k] * h2;
                    js.states.push_back(qs);
                }
            }
    sort_states(js);
    return js;
}

JointSpectrum oblate_spectrum(double a, int D) {
    if (D < 0) throw InvalidProblem("oblate_spectrum: D >= 0 required");
    if (D > 2 * kMaxDegree) throw InvalidProblem("oblate_spectrum: D cap exceeded");
    JointSpectrum js;
    js.system.kind = SystemKind::Oblate;
    js.system.params = {a};
    js.D = D;
    js.hbar = hbar_of(D);
    const double h = js.hbar, h2 = h * h;
    for (int mu1 = 0; mu1 <= 1; ++mu1)
        for (int mu2 = 0; mu2 <= 1; ++mu2)
            for (int m = -D; m <= D; ++m) {
                const int rem = D - std::abs(m) - mu1 - mu2;
                if (rem < 0 || rem % 2 != 0) continue;
                const auto blk = oblate_block(a, std::abs(m), D, mu1, mu2);
                const auto lambdas = blk.spectral_values();
                for (int k = 0; k < static_cast<int>(lambdas.size()); ++k) {
                    QuantumState qs;
                    qs.D = D;
                    auto [p3, p4] = phase_parity(m);
                    qs.mu = {mu1, mu2, p3, p4};
                    qs.q = {m, blk.d, k};
                    qs.raw1 = m;
                    qs.raw2 = lambdas[k];
                    qs.scaled1 = m * h;
                    qs.scaled2 = lambdas[k] * h2;
                    js.states.push_back(qs);
                }
            }
    sort_states(js);
    return js;
}

JointSpectrum lame_spectrum(const std::array<double, 3>& f, int D) {
    if (D < 0) throw InvalidProblem("lame_spectrum: D >= 0 required");
    if (D > 2 * kMaxDegree) throw InvalidProblem("lame_spectrum: D cap exceeded");
    if (f[0] != 0.0 || f[1] != 1.0 || !(f[2] > 1.0))
        throw InvalidProblem("lame_spectrum: f normalised to (0, 1, a) expected");
    const double a = f[2];
    JointSpectrum js;
    js.system.kind = SystemKind::Lame;
    js.system.params = {f[0], f[1], f[2]};
    js.D = D;
    js.hbar = hbar_of(D);
    const double h2 = js.hbar * js.hbar;
    const double E = double(D) * (D + 2);
    for (int mu2 = 0; mu2 <= 1; ++mu2)
        for (int mu3 = 0; mu3 <= 1; ++mu3)
            for (int mu4 = 0; mu4 <= 1; ++mu4) {
                const int U = mu2 + mu3 + mu4;
                for (int d = 0; 2 * d + U <= D; ++d) {
                    const int n = D - 2 * d - U; // Gegenbauer degree
                    const auto blk = lame_block(a, d, {mu2, mu3, mu4}, D);
                    const auto gs = blk.spectral_values();
                    const double fval = E - U * (U + 1.0) - 4.0 * d * (d + 0.5 + U);
                    for (int k = 0; k < static_cast<int>(gs.size()); ++k) {
                        QuantumState qs;
                        qs.D = D;
                        qs.mu = {n % 2, mu2, mu3, mu4};
                        qs.q = {n, d, k};
                        qs.raw1 = fval;
                        qs.raw2 = gs[k];
                        qs.scaled1 = fval * h2;
                        qs.scaled2 = gs[k] * h2;
                        js.states.push_back(qs);
                    }
                }
            }
    sort_states(js);
    return js;
}

JointSpectrum s2_ellipsoidal_spectrum(const std::array<double, 3>& e, int ell) {
    if (ell < 0) throw InvalidProblem("s2_ellipsoidal_spectrum: l >= 0 required");
    if (ell > 2 * kMaxDegree) throw InvalidProblem("s2_ellipsoidal_spectrum: l cap exceeded");
    JointSpectrum js;
    js.system.kind = SystemKind::S2Ellipsoidal;
    js.system.params = {e[0], e[1], e[2]};
    js.D = ell;
    js.hbar = hbar_of(ell);
    const double h2 = js.hbar * js.hbar;
    const double E = double(ell) * (ell + 1);
    for (int mu1 = 0; mu1 <= 1; ++mu1)
        for (int mu2 = 0; mu2 <= 1; ++mu2)
            for (int mu3 = 0; mu3 <= 1; ++mu3) {
                const int U = mu1 + mu2 + mu3;
                if (ell < U || (ell - U) % 2 != 0) continue;
                const auto blk = s2_ellipsoidal_block(e, ell, {mu1, mu2, mu3});
                const auto lambdas = blk.spectral_values();
                for (int k = 0; k < static_cast<int>(lambdas.size()); ++k) {
                    QuantumState qs;
                    qs.D = ell;
                    qs.mu = {mu1, mu2, mu3, 0};
                    qs.q = {blk.d, k, 0};
                    qs.raw1 = E;
                    qs.raw2 = lambdas[k];
                    qs.scaled1 = E * h2;
                    qs.scaled2 = lambdas[k] * h2;
                    js.states.push_back(qs);
                }
            }
    sort_states(js);
    return js;
}

std::string lame_function_label(int d, int m_index, const std::array<int, 3>& mu) {
    if (d < 0 || m_index < 0) throw InvalidProblem("lame_function_label: negative index");
    struct Row { std::array<int, 3> mu; char kind; int dsub; int msup; };
    static const Row table[] = {
        {{0, 0, 0}, 'c', 0, 0}, {{1, 0, 0}, 'c', 1, 1}, {{0, 1, 0}, 's', 1, 1},
        {{0, 0, 1}, 'c', 1, 0}, {{1, 1, 0}, 's', 1, 2}, {{1, 0, 1}, 'c', 2, 1},
        {{0, 1, 1}, 's', 2, 1}, {{1, 1, 1}, 's', 3, 2},
    };
    for (const auto& row : table) {
        if (row.mu != mu) continue;
        return std::string("E") + row.kind + "_{" + std::to_string(2 * d + row.dsub) +
               "}^{" + std::to_string(2 * m_index + row.msup) + "}";
    }
    throw InvalidProblem("lame_function_label: unknown class");
}

} // namespace sphsep::spectra_heun
