#include "sphsep/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "sphsep/spectra.hpp"

namespace sphsep::oracle {

namespace {

using eigenfunctions::HomogPoly;
using eigenfunctions::monomial_basis;

struct AngularTerm {
    int i, j;    // plane indices, 0-based
    double coef; // coefficient of l_ij^2
};

std::vector<AngularTerm> operator_terms(const SystemSpec& spec, int which) {
    spec.validate();
    if (which != 0 && which != 1)
        throw InvalidProblem("build_operator: which must be 0 (first) or 1 (second)");
    switch (spec.kind) {
        case SystemKind::Ellipsoidal: {
            const auto e = spec.e4();
            std::vector<AngularTerm> t;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    double sum = 0.0, prod = 1.0;
                    for (int k = 0; k < 4; ++k) {
                        if (k == i || k == j) continue;
                        sum += e[k];
                        prod *= e[k];
                    }
                    t.push_back({i, j, which == 0 ? sum : prod});
                }
            return t;
        }
        case SystemKind::Prolate: {
            const double a = spec.a();
            if (which == 0) return {{0, 1, a}, {0, 2, a}, {0, 3, 1.0}};
            return {{1, 2, 1.0}};
        }
        case SystemKind::Oblate: {
            const double a = spec.a();
            if (which == 0) return {{0, 1, a}, {0, 2, 1.0}, {0, 3, 1.0}};
            return {{2, 3, 1.0}};
        }
        case SystemKind::Lame: {
            const auto f = spec.f3();
            if (which == 0) return {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}};
            return {{2, 3, f[0]}, {1, 3, f[1]}, {1, 2, f[2]}};
        }
        case SystemKind::Spherical23: {
            if (which == 0) return {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}};
            return {{2, 3, 1.0}};
        }
        case SystemKind::Cylindrical: {
            if (which == 0) return {{0, 1, 1.0}};
            return {{2, 3, 1.0}};
        }
        case SystemKind::S2Ellipsoidal: {
            const auto e = spec.e3();
            if (which == 0) return {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}};
            return {{0, 1, e[2]}, {0, 2, e[1]}, {1, 2, e[0]}};
        }
        case SystemKind::S2Spherical: {
            if (which == 0) return {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}};
            // m is the angular momentum in the (x2, x3) plane (phase x2 + i x3)
            return {{1, 2, 1.0}};
        }
    }
    throw InvalidProblem("build_operator: unknown system");
}

using Term = std::pair<std::array<int, 4>, double>;

// L_ij x^alpha = alpha_j x^{alpha+e_i-e_j} - alpha_i x^{alpha-e_i+e_j}
std::vector<Term> apply_Lij(int i, int j, const std::array<int, 4>& a, double c) {
    std::vector<Term> out;
    if (a[j] > 0) {
        auto b = a;
        ++b[i];
        --b[j];
        out.push_back({b, c * a[j]});
    }
    if (a[i] > 0) {
        auto b = a;
        --b[i];
        ++b[j];
        out.push_back({b, -c * a[i]});
    }
    return out;
}

} // namespace

OperatorMatrix build_operator(const SystemSpec& spec, int which, int D) {
    if (D < 0 || D > kMaxOracleDegree)
        throw DimensionGuard("build_operator: D must lie in [0, 12]");
    OperatorMatrix op;
    op.D = D;
    op.nvars = spec.nvars();
    op.basis = monomial_basis(D, op.nvars);
    const auto terms = operator_terms(spec, which);

    std::map<std::array<int, 4>, int> index;
    for (std::size_t k = 0; k < op.basis.size(); ++k) index[op.basis[k]] = static_cast<int>(k);

    const int n = static_cast<int>(op.basis.size());
    op.mat = Eigen::MatrixXd::Zero(n, n);
    for (int col = 0; col < n; ++col) {
        for (const auto& t : terms) {
            // quantum l_ij^2 = -(L_ij o L_ij)
            for (const auto& [mono1, c1] : apply_Lij(t.i, t.j, op.basis[col], 1.0))
                for (const auto& [mono2, c2] : apply_Lij(t.i, t.j, mono1, c1))
                    op.mat(index.at(mono2), col) -= t.coef * c2;
        }
    }
    return op;
}

Eigen::MatrixXd harmonic_subspace(int D, int nvars) {
    if (D < 0) throw InvalidProblem("harmonic_subspace: D >= 0 required");
    const auto basis = monomial_basis(D, nvars);
    const int n = static_cast<int>(basis.size());
    const int expected = (nvars == 4) ? (D + 1) * (D + 1) : 2 * D + 1;
    if (D < 2) return Eigen::MatrixXd::Identity(n, n);

    const auto low = monomial_basis(D - 2, nvars);
    std::map<std::array<int, 4>, int> lowidx;
    for (std::size_t k = 0; k < low.size(); ++k) lowidx[low[k]] = static_cast<int>(k);

    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(low.size(), n);
    for (int col = 0; col < n; ++col)
        for (int v = 0; v < nvars; ++v) {
            const auto& a = basis[col];
            if (a[v] < 2) continue;
            auto b = a;
            b[v] -= 2;
            lap(lowidx.at(b), col) += double(a[v]) * (a[v] - 1);
        }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(lap, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const int rank = n - expected;
    if (rank > 0 && sv(rank - 1) < 1e-8)
        throw NonConvergence("harmonic_subspace: unexpected rank deficiency");
    Eigen::MatrixXd kernel = svd.matrixV().rightCols(expected);
    return kernel; // V's columns are orthonormal already
}

std::vector<std::pair<double, double>> joint_spectrum_oracle(const SystemSpec& spec, int D,
                                                             std::uint64_t seed) {
    if (D > kMaxOracleDegree) throw DimensionGuard("joint_spectrum_oracle: D > 12");
    const auto A = build_operator(spec, 0, D);
    const auto B = build_operator(spec, 1, D);
    const Eigen::MatrixXd P = harmonic_subspace(D, spec.nvars());
    const Eigen::MatrixXd Ar = P.transpose() * A.mat * P;
    const Eigen::MatrixXd Br = P.transpose() * B.mat * P;
    const int k = static_cast<int>(Ar.rows());
    const double scaleA = std::max(1.0, Ar.norm());
    const double scaleB = std::max(1.0, Br.norm());

    std::uint64_t state = seed * 0x9e3779b97f4a7c15ULL + 0x1234567ULL;
    for (int attempt = 0; attempt < 5; ++attempt) {
        state = (state ^ (state >> 30)) * 0xbf58476d1ce4e5b9ULL;
        state ^= state >> 27;
        const double t = 0.5 + 1.5 * double(state >> 11) * 0x1.0p-53;
        Eigen::EigenSolver<Eigen::MatrixXd> es(Ar + t * Br, true);
        if (es.info() != Eigen::Success) continue;
        bool ok = true;
        std::vector<std::pair<double, double>> pairs;
        pairs.reserve(k);
        for (int i = 0; i < k && ok; ++i) {
            if (std::abs(es.eigenvalues()(i).imag()) > 1e-8 * (scaleA + scaleB)) {
                ok = false;
                break;
            }
            Eigen::VectorXcd vc = es.eigenvectors().col(i);
            Eigen::VectorXd v = vc.real();
            if (vc.imag().norm() > 1e-8 * vc.norm()) v = vc.imag(); // conjugate-pair partner
            const double vv = v.squaredNorm();
            if (vv < 1e-20) {
                ok = false;
                break;
            }
            const Eigen::VectorXd Av = Ar * v, Bv = Br * v;
            const double a = v.dot(Av) / vv, b = v.dot(Bv) / vv;
            if ((Av - a * v).norm() > 1e-7 * scaleA * v.norm() ||
                (Bv - b * v).norm() > 1e-7 * scaleB * v.norm()) {
                ok = false; // degenerate combination mixed two eigenspaces
                break;
            }
            pairs.push_back({a, b});
        }
        if (ok) {
            std::sort(pairs.begin(), pairs.end());
            return pairs;
        }
    }
    throw DegenerateT("joint_spectrum_oracle: no generic combination found in 5 draws");
}

std::pair<double, double> separation_pair(const SystemSpec& spec, const QuantumState& st) {
    switch (spec.kind) {
        case SystemKind::Ellipsoidal: return {st.raw1, st.raw2};
        case SystemKind::Prolate:
        case SystemKind::Oblate:
        case SystemKind::Spherical23: return {st.raw2, st.raw1 * st.raw1};
        case SystemKind::Lame: return {st.raw1, st.raw2};
        case SystemKind::Cylindrical: return {st.raw1 * st.raw1, st.raw2 * st.raw2};
        case SystemKind::S2Ellipsoidal: return {st.raw1, st.raw2};
        case SystemKind::S2Spherical: return {st.raw1, st.raw2 * st.raw2};
    }
    throw InvalidProblem("separation_pair: unknown system");
}

std::pair<double, double> rayleigh_pair(const OperatorMatrix& A, const OperatorMatrix& B,
                                        const eigenfunctions::HomogPoly& p) {
    const auto vstd = eigenfunctions::coeff_vector(p, A.basis);
    Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(vstd.data(), vstd.size());
    const double vv = v.squaredNorm();
    if (vv <= 0.0) throw InvalidProblem("rayleigh_pair: zero polynomial");
    const Eigen::VectorXd Av = A.mat * v, Bv = B.mat * v;
    const double a = v.dot(Av) / vv, b = v.dot(Bv) / vv;
    if ((Av - a * v).norm() > 1e-6 * std::max(1.0, A.mat.norm()) * v.norm() ||
        (Bv - b * v).norm() > 1e-6 * std::max(1.0, B.mat.norm()) * v.norm())
        throw NoConsistentMap("rayleigh_pair: polynomial is not a joint eigenvector");
    return {a, b};
}

Calibration calibrate(const SystemSpec& spec, int Dfit, std::uint64_t seed) {
    // Eigenfunction-matched fit data: (separation pair) -> (oracle pair).
    std::vector<std::pair<double, double>> xs, ys;
    auto add_level = [&](int D) {
        const auto js = compute_spectrum(spec, D, seed);
        const auto A = build_operator(spec, 0, D);
        const auto B = build_operator(spec, 1, D);
        for (const auto& st : js.states) {
            const auto p = eigenfunctions::reconstruct(spec, st, seed);
            xs.push_back(separation_pair(spec, st));
            ys.push_back(rayleigh_pair(A, B, p));
        }
    };
    add_level(Dfit);

    auto degenerate_fit = [&]() {
        // All separation pairs affinely dependent? Check the 2x2 covariance.
        double mx = 0, my = 0;
        for (auto [x, y] : xs) {
            mx += x;
            my += y;
        }
        mx /= xs.size();
        my /= xs.size();
        double sxx = 0, sxy = 0, syy = 0;
        for (auto [x, y] : xs) {
            sxx += (x - mx) * (x - mx);
            sxy += (x - mx) * (y - my);
            syy += (y - my) * (y - my);
        }
        const double tr = sxx + syy, det = sxx * syy - sxy * sxy;
        const double lam_min = 0.5 * (tr - std::sqrt(std::max(0.0, tr * tr - 4 * det)));
        return lam_min < 1e-10 * std::max(1.0, tr);
    };
    if (xs.size() < 3 || degenerate_fit()) {
        if (Dfit >= 1) add_level(Dfit - 1);
        if (xs.size() < 3 || degenerate_fit()) {
            if (Dfit >= 2) add_level(Dfit - 2);
        }
    }

    const int n = static_cast<int>(xs.size());
    Eigen::MatrixXd Amat(n, 3);
    Eigen::VectorXd b1(n), b2(n);
    for (int i = 0; i < n; ++i) {
        Amat(i, 0) = xs[i].first;
        Amat(i, 1) = xs[i].second;
        Amat(i, 2) = 1.0;
        b1(i) = ys[i].first;
        b2(i) = ys[i].second;
    }
    const Eigen::Vector3d r1 = Amat.colPivHouseholderQr().solve(b1);
    const Eigen::Vector3d r2 = Amat.colPivHouseholderQr().solve(b2);

    Calibration cal;
    cal.m = {{{r1(0), r1(1)}, {r2(0), r2(1)}}};
    cal.c = {r1(2), r2(2)};
    double scale = 1.0, resid = 0.0;
    for (int i = 0; i < n; ++i) {
        scale = std::max({scale, std::abs(b1(i)), std::abs(b2(i))});
        const auto f = cal.apply(xs[i]);
        resid = std::max({resid, std::abs(f.first - b1(i)), std::abs(f.second - b2(i))});
    }
    cal.residual = resid / scale;
    if (cal.residual > 1e-8)
        throw NoConsistentMap("calibrate: no affine map reproduces the oracle eigenvalues");
    return cal;
}

double oracle_match_error(const SystemSpec& spec, int D, const Calibration& cal,
                          std::uint64_t seed) {
    const auto js = compute_spectrum(spec, D, seed);
    std::vector<std::pair<double, double>> sep;
    for (const auto& st : js.states) sep.push_back(cal.apply(separation_pair(spec, st)));
    const auto orc = joint_spectrum_oracle(spec, D, seed);
    if (sep.size() != orc.size())
        throw NoConsistentMap("oracle_match_error: state count mismatch");
    double scale = 1.0;
    for (const auto& [a, b] : orc) scale = std::max({scale, std::abs(a), std::abs(b)});
    // Greedy nearest-neighbour matching; matched distances sit many orders
    // below the spacing of distinct joint eigenvalues.
    std::vector<bool> used(orc.size(), false);
    double err = 0.0;
    for (const auto& s : sep) {
        double best = 1e300;
        std::size_t pick = orc.size();
        for (std::size_t j = 0; j < orc.size(); ++j) {
            if (used[j]) continue;
            const double dist = std::max(std::abs(s.first - orc[j].first),
                                         std::abs(s.second - orc[j].second));
            if (dist < best) {
                best = dist;
                pick = j;
            }
        }
        used[pick] = true;
        err = std::max(err, best);
    }
    return err / scale;
}

} // namespace sphsep::oracle
