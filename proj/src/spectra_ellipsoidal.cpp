#include "sphsep/spectra_ellipsoidal.hpp"

#include <algorithm>
#include <cmath>

#include "sphsep/numerics.hpp"

namespace sphsep::spectra_ellipsoidal {

namespace {

constexpr int kMaxRootDegree = 64; // recurrences and root systems degrade beyond this
constexpr double kMinPoleGap = 1e-6;

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t state_salt(const SymmetryClass4& mu, const std::array<int, 3>& n) {
    std::uint64_t s = 0;
    for (int b : mu) s = s * 2 + b;
    for (int x : n) s = s * 131 + x;
    return s;
}

int class_weight(const SymmetryClass4& mu) { return mu[0] + mu[1] + mu[2] + mu[3]; }

} // namespace

std::vector<SymmetryClass4> classes_even() {
    return {{0, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1},
            {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 1}};
}

std::vector<SymmetryClass4> classes_odd() {
    return {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0},
            {1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}};
}

std::vector<SymmetryClass4> admissible_classes(int D) {
    return (D % 2 == 0) ? classes_even() : classes_odd();
}

GenLameParams gen_lame_params(const std::array<double, 4>& e, const SymmetryClass4& mu) {
    for (int i = 0; i < 3; ++i)
        if (!(e[i] < e[i + 1]))
            throw InvalidProblem("gen_lame_params: e must be strictly increasing");
    GenLameParams p;
    p.e = e;
    p.gamma = {0.5, 0.5, 0.5, 0.5};
    const double S1 = e[0] + e[1] + e[2] + e[3];
    // Accumulate the numerator shift of one index transform (z-e_p)^{1/2} at a
    // time; each uses the current exponents of the other three poles.
    for (int pth = 0; pth < 4; ++pth) {
        if (!mu[pth]) continue;
        const double sigma = 1.0 - p.gamma[pth]; // 1/2
        for (int j = 0; j < 4; ++j) {
            if (j == pth) continue;
            double prod = 1.0;
            for (int k = 0; k < 4; ++k)
                if (k != j && k != pth) prod *= e[k];
            p.u0 += 4.0 * sigma * p.gamma[j];
            p.u1 -= 4.0 * sigma * p.gamma[j] * (S1 - e[j] - e[pth]);
            p.u2 += 4.0 * sigma * p.gamma[j] * prod;
        }
        p.gamma[pth] = 1.5;
    }
    return p;
}

EllipsoidalState solve_occupancy(const std::array<double, 4>& e, const SymmetryClass4& mu,
                                 int D, const std::array<int, 3>& n, std::uint64_t seed) {
    const GenLameParams gp = gen_lame_params(e, mu);
    const int U = class_weight(mu);
    const int d = n[0] + n[1] + n[2];
    if (D != 2 * d + U)
        throw InvalidProblem("solve_occupancy: D, class and occupancy are inconsistent");

    numerics::RootSystemProblem problem;
    problem.poles.assign(e.begin(), e.end());
    problem.exponents.assign(gp.gamma.begin(), gp.gamma.end());
    problem.occupancy.assign(n.begin(), n.end());

    EllipsoidalState st;
    st.D = D;
    st.mu = mu;
    st.n = n;
    st.E = double(D) * (D + 2);
    try {
        st.roots = numerics::solve_root_system(problem, mix(seed, state_salt(mu, n)));
    } catch (const NonConvergence& err) {
        throw NonConvergence(std::string(err.what()) + " [occupancy " + std::to_string(n[0]) +
                             "," + std::to_string(n[1]) + "," + std::to_string(n[2]) + "]");
    }
    const auto q = numerics::accessory_parameters(problem, st.roots);

    // lambda from the partial-fraction expansion of sum_j q_j/(z-e_j):
    //   c1 = 4 sum_j q_j sigma2(others of j), c2 = -4 sum_j q_j sigma3(others).
    double c1 = 0.0, c2 = 0.0;
    for (int j = 0; j < 4; ++j) {
        double others[3];
        int t = 0;
        for (int k = 0; k < 4; ++k)
            if (k != j) others[t++] = e[k];
        const double s2 = others[0] * others[1] + others[0] * others[2] + others[1] * others[2];
        const double s3 = others[0] * others[1] * others[2];
        c1 += 4.0 * q[j] * s2;
        c2 -= 4.0 * q[j] * s3;
    }
    st.lambda1 = c1 - gp.u1;
    st.lambda2 = gp.u2 - c2;
    return st;
}

std::vector<EllipsoidalState> solve_class(const SystemSpec& spec, int D,
                                          const SymmetryClass4& mu, std::uint64_t seed) {
    spec.validate();
    if (spec.kind != SystemKind::Ellipsoidal)
        throw InvalidProblem("solve_class: ellipsoidal system required");
    const auto e = spec.e4();
    for (int i = 0; i < 3; ++i)
        if (e[i + 1] - e[i] <= kMinPoleGap)
            throw InvalidProblem("solve_class: pole gap below 1e-6, use the degenerate system");
    const int U = class_weight(mu);
    if (D < U || (D - U) % 2 != 0)
        throw InvalidProblem("solve_class: need D >= sum(mu) with matching parity");
    const int d = (D - U) / 2;
    if (d > kMaxRootDegree) throw InvalidProblem("solve_class: degree cap d <= 64 exceeded");

    std::vector<EllipsoidalState> states;
    states.reserve((d + 2) * (d + 1) / 2);
    for (int n1 = d; n1 >= 0; --n1)
        for (int n2 = d - n1; n2 >= 0; --n2) {
            const int n3 = d - n1 - n2;
            states.push_back(solve_occupancy(e, mu, D, {n1, n2, n3}, seed));
        }
    std::sort(states.begin(), states.end(), [](const auto& a, const auto& b) {
        return a.n < b.n;
    });
    return states;
}

JointSpectrum full_spectrum(const SystemSpec& spec, int D, std::uint64_t seed) {
    if (D < 0) throw InvalidProblem("full_spectrum: D >= 0 required");
    JointSpectrum js;
    js.system = spec;
    js.D = D;
    js.hbar = hbar_of(D);
    const double h2 = js.hbar * js.hbar;
    for (const auto& mu : admissible_classes(D)) {
        if (class_weight(mu) > D) continue;
        for (const auto& st : solve_class(spec, D, mu, seed)) {
            QuantumState qs;
            qs.D = D;
            qs.mu = {mu[0], mu[1], mu[2], mu[3]};
            qs.q = st.n;
            qs.raw1 = st.lambda1;
            qs.raw2 = st.lambda2;
            qs.scaled1 = st.lambda1 * h2;
            qs.scaled2 = st.lambda2 * h2;
            js.states.push_back(qs);
        }
    }
    std::sort(js.states.begin(), js.states.end(),
              [](const QuantumState& a, const QuantumState& b) {
                  return state_key(a) < state_key(b);
              });
    return js;
}

} // namespace sphsep::spectra_ellipsoidal
