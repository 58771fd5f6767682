#include "sphsep/eigenfunctions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "sphsep/numerics.hpp"
#include "sphsep/spectra_ellipsoidal.hpp"
#include "sphsep/spectra_heun.hpp"

namespace sphsep::eigenfunctions {

namespace {

using Idx = std::array<int, 4>;
using CPoly = std::map<Idx, std::complex<double>>;

CPoly cmul(const CPoly& a, const CPoly& b) {
    CPoly r;
    for (const auto& [ia, ca] : a)
        for (const auto& [ib, cb] : b) {
            Idx k{ia[0] + ib[0], ia[1] + ib[1], ia[2] + ib[2], ia[3] + ib[3]};
            r[k] += ca * cb;
        }
    return r;
}

CPoly from_real(const HomogPoly& p) {
    CPoly r;
    for (const auto& [i, c] : p.terms) r[i] = c;
    return r;
}

HomogPoly realify(const CPoly& p, int nvars) {
    double scale = 0.0;
    for (const auto& [i, c] : p) scale = std::max(scale, std::abs(c));
    HomogPoly out;
    out.nvars = nvars;
    for (const auto& [i, c] : p) {
        if (std::abs(c.imag()) > 1e-8 * std::max(scale, 1.0))
            throw MissingRoots("reconstruct: complex residue in expanded polynomial");
        if (std::abs(c.real()) > 1e-13 * std::max(scale, 1.0)) out.terms[i] = c.real();
    }
    return out;
}

HomogPoly monomial(int nvars, const Idx& i, double c = 1.0) {
    HomogPoly p;
    p.nvars = nvars;
    p.terms[i] = c;
    return p;
}

// sum of x_i^2 over the given variable indices
HomogPoly square_sum(int nvars, std::initializer_list<int> vars) {
    HomogPoly p;
    p.nvars = nvars;
    for (int v : vars) {
        Idx i{0, 0, 0, 0};
        i[v] = 2;
        p.terms[i] = 1.0;
    }
    return p;
}

// (x_p + i x_q)^absm, then Re (take_real) or Im part.
HomogPoly phase_part(int nvars, int p, int q, int absm, bool take_real) {
    CPoly acc;
    acc[{0, 0, 0, 0}] = 1.0;
    CPoly base;
    {
        Idx ip{0, 0, 0, 0};
        ip[p] = 1;
        base[ip] = 1.0;
        Idx iq{0, 0, 0, 0};
        iq[q] = 1;
        base[iq] = std::complex<double>(0.0, 1.0);
    }
    for (int k = 0; k < absm; ++k) acc = cmul(acc, base);
    HomogPoly out;
    out.nvars = nvars;
    for (const auto& [i, c] : acc) {
        const double v = take_real ? c.real() : c.imag();
        if (v != 0.0) out.terms[i] = v;
    }
    return out;
}

// sum_j c_j x_v^j R^{(n-j)/2} for a parity-pure coefficient vector c.
HomogPoly homogenize_univariate(const std::vector<double>& c, int v, const HomogPoly& R,
                                int nvars) {
    const int n = static_cast<int>(c.size()) - 1;
    HomogPoly out;
    out.nvars = nvars;
    std::vector<HomogPoly> Rpow(n / 2 + 1);
    Rpow[0] = monomial(nvars, {0, 0, 0, 0});
    for (int k = 1; k <= n / 2; ++k) Rpow[k] = Rpow[k - 1] * R;
    for (int j = 0; j <= n; ++j) {
        if (c[j] == 0.0) continue;
        if ((n - j) % 2 != 0)
            throw InvalidProblem("homogenize: coefficient parity mismatch");
        Idx i{0, 0, 0, 0};
        i[v] = j;
        out = out + (c[j] * (monomial(nvars, i) * Rpow[(n - j) / 2]));
    }
    return out;
}

// Product over polynomial roots of a 3- or 4-pole quadratic form
//   prod_k sum_i w_i(z_k) x_{vars[i]}^2,  w_i(z) = prod_{j != i} (z - poles[j]).
HomogPoly root_product(const std::vector<std::pair<double, double>>& roots,
                       const std::vector<double>& poles, const std::vector<int>& vars,
                       int nvars) {
    CPoly acc;
    acc[{0, 0, 0, 0}] = 1.0;
    for (const auto& [re, im] : roots) {
        const std::complex<double> z(re, im);
        CPoly factor;
        for (std::size_t i = 0; i < poles.size(); ++i) {
            std::complex<double> w = 1.0;
            for (std::size_t j = 0; j < poles.size(); ++j)
                if (j != i) w *= z - poles[j];
            Idx idx{0, 0, 0, 0};
            idx[vars[i]] = 2;
            factor[idx] += w;
        }
        acc = cmul(acc, factor);
    }
    return realify(acc, nvars);
}

std::vector<std::pair<double, double>> heun_roots(const spectra_heun::HeunBlock& blk,
                                                  double spectral) {
    const double qt = blk.q_tilde_of_spectral(spectral);
    // Confirm the state really is an eigenvalue of its block.
    const auto qs = numerics::eigen_real(spectra_heun::heun_matrix(blk.params, blk.d));
    double best = 1e300, scale = 1.0;
    for (double q : qs) {
        best = std::min(best, std::abs(q - qt));
        scale = std::max(scale, std::abs(q));
    }
    if (best > 1e-6 * scale)
        throw MissingRoots("reconstruct: eigenvalue does not belong to the state's block");
    return numerics::poly_roots(spectra_heun::heun_poly_coeffs(blk.params, blk.d, qt));
}

HomogPoly axis_prefactor(int nvars, const std::array<int, 4>& mu) {
    Idx i{0, 0, 0, 0};
    for (int v = 0; v < 4; ++v) i[v] = mu[v];
    return monomial(nvars, i);
}

HomogPoly reconstruct_ellipsoidal(const SystemSpec& spec, const QuantumState& st,
                                  std::uint64_t seed) {
    const auto e = spec.e4();
    auto sol = spectra_ellipsoidal::solve_occupancy(e, st.mu, st.D, st.q, seed);
    const double scale = std::max({1.0, std::abs(sol.lambda1), std::abs(sol.lambda2)});
    if (std::abs(sol.lambda1 - st.raw1) > 1e-6 * scale ||
        std::abs(sol.lambda2 - st.raw2) > 1e-6 * scale)
        throw MissingRoots("reconstruct: ellipsoidal state does not match its occupancy");
    std::vector<std::pair<double, double>> roots;
    for (double z : sol.roots) roots.push_back({z, 0.0});
    auto p = root_product(roots, {e[0], e[1], e[2], e[3]}, {0, 1, 2, 3}, 4);
    return (axis_prefactor(4, st.mu) * p).normalize();
}

HomogPoly reconstruct_prolate(const SystemSpec& spec, const QuantumState& st) {
    const double a = spec.a();
    const int m = st.q[0], d = st.q[1];
    const int mu1 = st.mu[0], mu4 = st.mu[3];
    auto blk = spectra_heun::prolate_block(a, std::abs(m), st.D, mu1, mu4);
    auto roots = heun_roots(blk, st.raw2);
    // prod_k [ x1^2 (z-a) - r^2 z(z-a) + (1-a) z x4^2 ]
    CPoly acc;
    acc[{0, 0, 0, 0}] = 1.0;
    const HomogPoly r2 = square_sum(4, {0, 1, 2, 3});
    for (auto [re, im] : roots) {
        const std::complex<double> z(re, im);
        CPoly factor;
        factor[{2, 0, 0, 0}] += z - a;
        factor[{0, 0, 0, 2}] += (1.0 - a) * z;
        for (const auto& [i, c] : from_real(r2)) factor[i] += -z * (z - a) * c;
        acc = cmul(acc, factor);
    }
    HomogPoly p = realify(acc, 4);
    p = p * phase_part(4, 1, 2, std::abs(m), m >= 0);
    return (axis_prefactor(4, {mu1, 0, 0, mu4}) * p).normalize();
}

HomogPoly reconstruct_oblate(const SystemSpec& spec, const QuantumState& st) {
    const double a = spec.a();
    const int m = st.q[0], d = st.q[1];
    const int mu1 = st.mu[0], mu2 = st.mu[1];
    auto blk = spectra_heun::oblate_block(a, std::abs(m), st.D, mu1, mu2);
    auto roots = heun_roots(blk, st.raw2);
    // prod_k [ z(z-1) r^2 - a(z-1) x1^2 - (a-1) z x2^2 ]
    CPoly acc;
    acc[{0, 0, 0, 0}] = 1.0;
    const HomogPoly r2 = square_sum(4, {0, 1, 2, 3});
    for (auto [re, im] : roots) {
        const std::complex<double> z(re, im);
        CPoly factor;
        factor[{2, 0, 0, 0}] += -a * (z - 1.0);
        factor[{0, 2, 0, 0}] += -(a - 1.0) * z;
        for (const auto& [i, c] : from_real(r2)) factor[i] += z * (z - 1.0) * c;
        acc = cmul(acc, factor);
    }
    HomogPoly p = realify(acc, 4);
    p = p * phase_part(4, 2, 3, std::abs(m), m >= 0);
    return (axis_prefactor(4, {mu1, mu2, 0, 0}) * p).normalize();
}

HomogPoly reconstruct_lame(const SystemSpec& spec, const QuantumState& st) {
    const auto f = spec.f3();
    const int n = st.q[0], d = st.q[1];
    const std::array<int, 3> mu234{st.mu[1], st.mu[2], st.mu[3]};
    const int U = mu234[0] + mu234[1] + mu234[2];
    auto blk = spectra_heun::lame_block(f[2], d, mu234, st.D);
    auto roots = heun_roots(blk, st.raw2);
    HomogPoly p = root_product(roots, {f[0], f[1], f[2]}, {1, 2, 3}, 4);
    // Gegenbauer factor r^n C_n^{2d+1+U}(x1/r)
    const auto geg = numerics::gegenbauer_coeffs(n, 2.0 * d + 1.0 + U);
    p = p * homogenize_univariate(geg, 0, square_sum(4, {0, 1, 2, 3}), 4);
    return (axis_prefactor(4, {0, mu234[0], mu234[1], mu234[2]}) * p).normalize();
}

HomogPoly reconstruct_spherical(const QuantumState& st) {
    const int n = st.q[0], l = st.q[1], m = st.q[2];
    const auto geg = numerics::gegenbauer_coeffs(n, l + 1.0);
    HomogPoly p = homogenize_univariate(geg, 0, square_sum(4, {0, 1, 2, 3}), 4);
    const auto leg = numerics::assoc_legendre_poly_part(l, std::abs(m));
    p = p * homogenize_univariate(leg, 1, square_sum(4, {1, 2, 3}), 4);
    p = p * phase_part(4, 2, 3, std::abs(m), m >= 0);
    return p.normalize();
}

HomogPoly reconstruct_cylindrical(const QuantumState& st) {
    const int d = st.q[0], m1 = st.q[1], m2 = st.q[2];
    const auto jac = numerics::jacobi_coeffs(d, std::abs(m1), std::abs(m2));
    // sum_j c_j W^j (r^2)^{d-j},  W = x3^2 + x4^2 - x1^2 - x2^2
    HomogPoly W = square_sum(4, {2, 3});
    W.terms[{2, 0, 0, 0}] = -1.0;
    W.terms[{0, 2, 0, 0}] = -1.0;
    const HomogPoly R = square_sum(4, {0, 1, 2, 3});
    HomogPoly p;
    p.nvars = 4;
    HomogPoly Wj = monomial(4, {0, 0, 0, 0});
    std::vector<HomogPoly> Rpow(d + 1);
    Rpow[0] = monomial(4, {0, 0, 0, 0});
    for (int k = 1; k <= d; ++k) Rpow[k] = Rpow[k - 1] * R;
    for (int j = 0; j <= d; ++j) {
        if (jac[j] != 0.0) p = p + (jac[j] * (Wj * Rpow[d - j]));
        if (j < d) Wj = Wj * W;
    }
    p = p * phase_part(4, 0, 1, std::abs(m1), m1 >= 0);
    p = p * phase_part(4, 2, 3, std::abs(m2), m2 >= 0);
    return p.normalize();
}

HomogPoly reconstruct_s2_ellipsoidal(const SystemSpec& spec, const QuantumState& st) {
    const auto e = spec.e3();
    const std::array<int, 3> mu{st.mu[0], st.mu[1], st.mu[2]};
    auto blk = spectra_heun::s2_ellipsoidal_block(e, st.D, mu);
    auto zroots = heun_roots(blk, st.raw2); // in normalised coordinates
    const double h = e[1] - e[0];
    for (auto& [re, im] : zroots) {
        re = e[0] + h * re;
        im = h * im;
    }
    HomogPoly p = root_product(zroots, {e[0], e[1], e[2]}, {0, 1, 2}, 3);
    return (axis_prefactor(3, {mu[0], mu[1], mu[2], 0}) * p).normalize();
}

HomogPoly reconstruct_s2_spherical(const QuantumState& st) {
    const int l = st.q[0], m = st.q[1];
    const auto leg = numerics::assoc_legendre_poly_part(l, std::abs(m));
    HomogPoly p = homogenize_univariate(leg, 0, square_sum(3, {0, 1, 2}), 3);
    p = p * phase_part(3, 1, 2, std::abs(m), m >= 0);
    return p.normalize();
}

} // namespace

int HomogPoly::degree() const {
    if (terms.empty()) return -1;
    const auto& i = terms.begin()->first;
    return i[0] + i[1] + i[2] + i[3];
}

double HomogPoly::coeff_norm() const {
    double s = 0.0;
    for (const auto& [i, c] : terms) s += c * c;
    return std::sqrt(s);
}

HomogPoly& HomogPoly::prune(double tol) {
    for (auto it = terms.begin(); it != terms.end();)
        it = (std::abs(it->second) <= tol) ? terms.erase(it) : std::next(it);
    return *this;
}

HomogPoly& HomogPoly::normalize() {
    prune(0.0);
    if (terms.empty()) return *this;
    const double lead = terms.rbegin()->second;
    for (auto& [i, c] : terms) c /= lead;
    return *this;
}

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
    HomogPoly r;
    r.nvars = std::max(a.nvars, b.nvars);
    for (const auto& [ia, ca] : a.terms)
        for (const auto& [ib, cb] : b.terms) {
            Idx k{ia[0] + ib[0], ia[1] + ib[1], ia[2] + ib[2], ia[3] + ib[3]};
            r.terms[k] += ca * cb;
        }
    r.prune(0.0);
    return r;
}

HomogPoly operator+(const HomogPoly& a, const HomogPoly& b) {
    HomogPoly r = a;
    r.nvars = std::max(a.nvars, b.nvars);
    for (const auto& [i, c] : b.terms) r.terms[i] += c;
    r.prune(0.0);
    return r;
}

HomogPoly operator*(double s, const HomogPoly& a) {
    HomogPoly r = a;
    for (auto& [i, c] : r.terms) c *= s;
    r.prune(0.0);
    return r;
}

HomogPoly laplacian(const HomogPoly& p) {
    HomogPoly r;
    r.nvars = p.nvars;
    for (const auto& [i, c] : p.terms)
        for (int v = 0; v < p.nvars; ++v) {
            if (i[v] < 2) continue;
            Idx k = i;
            k[v] -= 2;
            r.terms[k] += c * i[v] * (i[v] - 1);
        }
    r.prune(0.0);
    return r;
}

std::array<int, 4> classify_symmetry(const HomogPoly& p) {
    if (p.terms.empty()) throw InvalidProblem("classify_symmetry: zero polynomial");
    std::array<int, 4> parity{0, 0, 0, 0};
    bool first = true;
    for (const auto& [i, c] : p.terms) {
        for (int v = 0; v < 4; ++v) {
            const int bit = i[v] % 2;
            if (first)
                parity[v] = bit;
            else if (parity[v] != bit)
                throw MixedParity("classify_symmetry: axis " + std::to_string(v + 1) +
                                  " mixes parities");
        }
        first = false;
    }
    return parity;
}

HomogPoly reconstruct(const SystemSpec& spec, const QuantumState& st, std::uint64_t seed) {
    spec.validate();
    HomogPoly p;
    switch (spec.kind) {
        case SystemKind::Ellipsoidal: p = reconstruct_ellipsoidal(spec, st, seed); break;
        case SystemKind::Prolate: p = reconstruct_prolate(spec, st); break;
        case SystemKind::Oblate: p = reconstruct_oblate(spec, st); break;
        case SystemKind::Lame: p = reconstruct_lame(spec, st); break;
        case SystemKind::Spherical23: p = reconstruct_spherical(st); break;
        case SystemKind::Cylindrical: p = reconstruct_cylindrical(st); break;
        case SystemKind::S2Ellipsoidal: p = reconstruct_s2_ellipsoidal(spec, st); break;
        case SystemKind::S2Spherical: p = reconstruct_s2_spherical(st); break;
        default: throw InvalidProblem("reconstruct: unknown system");
    }
    // Drop expansion dust so the parity classification sees clean exponents.
    p.prune(1e-11 * std::max(1.0, p.coeff_norm()));
    if (p.degree() != st.D)
        throw MissingRoots("reconstruct: expanded degree differs from the state degree");
    return p;
}

std::vector<std::array<int, 4>> monomial_basis(int D, int nvars) {
    std::vector<Idx> basis;
    if (nvars == 4) {
        for (int i = 0; i <= D; ++i)
            for (int j = 0; j <= D - i; ++j)
                for (int k = 0; k <= D - i - j; ++k)
                    basis.push_back({i, j, k, D - i - j - k});
    } else if (nvars == 3) {
        for (int i = 0; i <= D; ++i)
            for (int j = 0; j <= D - i; ++j) basis.push_back({i, j, D - i - j, 0});
    } else {
        throw InvalidProblem("monomial_basis: nvars must be 3 or 4");
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

std::vector<double> coeff_vector(const HomogPoly& p, const std::vector<std::array<int, 4>>& basis) {
    std::vector<double> v(basis.size(), 0.0);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        auto it = p.terms.find(basis[k]);
        if (it != p.terms.end()) v[k] = it->second;
    }
    return v;
}

std::vector<std::vector<double>> sphere_gram(const std::vector<std::array<int, 4>>& basis,
                                             int nvars) {
    auto moment = [nvars](const Idx& k) {
        int total = 0;
        for (int v = 0; v < nvars; ++v) {
            if (k[v] % 2 != 0) return 0.0;
            total += k[v];
        }
        double lg = std::log(2.0) - std::lgamma(0.5 * (nvars + total));
        for (int v = 0; v < nvars; ++v) lg += std::lgamma(0.5 * (k[v] + 1));
        return std::exp(lg);
    };
    const std::size_t n = basis.size();
    std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            Idx k{basis[a][0] + basis[b][0], basis[a][1] + basis[b][1],
                  basis[a][2] + basis[b][2], basis[a][3] + basis[b][3]};
            g[a][b] = g[b][a] = moment(k);
        }
    return g;
}

void write_poly(std::ostream& os, const HomogPoly& p) {
    for (const auto& [i, c] : p.terms) {
        char buf[32];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, c);
        os.write(buf, ptr - buf);
        for (int v = 0; v < p.nvars; ++v) os << ' ' << i[v];
        os << '\n';
    }
}

HomogPoly read_poly(std::istream& is, int nvars) {
    HomogPoly p;
    p.nvars = nvars;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        double c;
        Idx i{0, 0, 0, 0};
        ss >> c;
        for (int v = 0; v < nvars; ++v) ss >> i[v];
        if (!ss.fail()) p.terms[i] = c;
    }
    return p;
}

} // namespace sphsep::eigenfunctions
