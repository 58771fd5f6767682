#include "sphsep/spectra_closedform.hpp"

#include <algorithm>
#include <cmath>

namespace sphsep::spectra_closedform {

namespace {

void sort_states(JointSpectrum& js) {
    std::sort(js.states.begin(), js.states.end(),
              [](const QuantumState& a, const QuantumState& b) {
                  return state_key(a) < state_key(b);
              });
}

std::pair<int, int> phase_parity(int m) {
    const int absm = std::abs(m);
    if (m >= 0) return {absm % 2, 0};
    return {(absm + 1) % 2, 1};
}

} // namespace

JointSpectrum spherical_spectrum(int D) {
    if (D < 0) throw InvalidProblem("spherical_spectrum: D >= 0 required");
    JointSpectrum js;
    js.system.kind = SystemKind::Spherical23;
    js.D = D;
    js.hbar = hbar_of(D);
    const double h = js.hbar, h2 = h * h;
    const double E = double(D) * (D + 2);
    for (int l = 0; l <= D; ++l) {
        const int n = D - l;
        const double lambda = E - double(l) * (l + 1);
        for (int m = -l; m <= l; ++m) {
            QuantumState qs;
            qs.D = D;
            auto [p3, p4] = phase_parity(m);
            qs.mu = {n % 2, (l - std::abs(m)) % 2, p3, p4};
            qs.q = {n, l, m};
            qs.raw1 = m;
            qs.raw2 = lambda;
            qs.scaled1 = m * h;
            qs.scaled2 = lambda * h2;
            js.states.push_back(qs);
        }
    }
    sort_states(js);
    return js;
}

JointSpectrum cylindrical_spectrum(int D) {
    if (D < 0) throw InvalidProblem("cylindrical_spectrum: D >= 0 required");
    JointSpectrum js;
    js.system.kind = SystemKind::Cylindrical;
    js.D = D;
    js.hbar = hbar_of(D);
    const double h = js.hbar;
    for (int m1 = -D; m1 <= D; ++m1)
        for (int m2 = -(D - std::abs(m1)); m2 <= D - std::abs(m1); ++m2) {
            const int rem = D - std::abs(m1) - std::abs(m2);
            if (rem % 2 != 0) continue;
            const int d = rem / 2;
            QuantumState qs;
            qs.D = D;
            auto [p1, p2] = phase_parity(m1);
            auto [p3, p4] = phase_parity(m2);
            qs.mu = {p1, p2, p3, p4};
            qs.q = {d, m1, m2};
            qs.raw1 = m1;
            qs.raw2 = m2;
            qs.scaled1 = m1 * h;
            qs.scaled2 = m2 * h;
            js.states.push_back(qs);
        }
    sort_states(js);
    return js;
}

JointSpectrum s2_spherical_level(int ell) {
    if (ell < 0) throw InvalidProblem("s2_spherical: l >= 0 required");
    JointSpectrum js;
    js.system.kind = SystemKind::S2Spherical;
    js.D = ell;
    js.hbar = hbar_of(ell);
    const double E = double(ell) * (ell + 1);
    for (int m = -ell; m <= ell; ++m) {
        QuantumState qs;
        qs.D = ell;
        auto [p2, p3] = phase_parity(m);
        qs.mu = {(ell - std::abs(m)) % 2, p2, p3, 0};
        qs.q = {ell, m, 0};
        qs.raw1 = E;
        qs.raw2 = m;
        qs.scaled1 = E * js.hbar * js.hbar;
        qs.scaled2 = m * js.hbar;
        js.states.push_back(qs);
    }
    sort_states(js);
    return js;
}

std::vector<QuantumState> s2_spherical_spectrum(int lmax) {
    if (lmax < 0) throw InvalidProblem("s2_spherical_spectrum: lmax >= 0 required");
    std::vector<QuantumState> all;
    for (int l = 0; l <= lmax; ++l) {
        auto level = s2_spherical_level(l);
        all.insert(all.end(), level.states.begin(), level.states.end());
    }
    return all;
}

} // namespace sphsep::spectra_closedform
