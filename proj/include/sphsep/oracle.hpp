#ifndef SPHSEP_ORACLE_HPP
#define SPHSEP_ORACLE_HPP

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "sphsep/eigenfunctions.hpp"
#include "sphsep/types.hpp"

namespace sphsep::oracle {

inline constexpr int kMaxOracleDegree = 12;

// A commuting integral quantised in Cartesian coordinates (hbar = 1), as a
// dense matrix on the monomial basis of homogeneous degree D.
struct OperatorMatrix {
    int D = 0;
    int nvars = 4;
    std::vector<std::array<int, 4>> basis;
    Eigen::MatrixXd mat;
};

// which = 0 or 1 selects the first/second integral of the pair belonging to
// the system (e.g. (G, M) for prolate, (eta1, eta2) for ellipsoidal).
OperatorMatrix build_operator(const SystemSpec& spec, int which, int D);

// Orthonormal basis (columns) of the harmonic polynomials inside degree D:
// (D+1)^2 columns for 4 variables, 2D+1 for 3.
Eigen::MatrixXd harmonic_subspace(int D, int nvars);

// Joint eigenvalue pairs of the two integrals restricted to the harmonic
// subspace, via a seeded generic combination A + tB.
std::vector<std::pair<double, double>> joint_spectrum_oracle(const SystemSpec& spec, int D,
                                                             std::uint64_t seed);

// The separation-side eigenvalue pair of a state, ordered to match the
// operator pair of build_operator (angular momenta enter squared).
std::pair<double, double> separation_pair(const SystemSpec& spec, const QuantumState& st);

// Affine dictionary oracle = M * separation + c, fitted on eigenfunction-
// matched pairs at D = Dfit (augmented with D-1 if the fit data is affinely
// degenerate, as for the fixed-energy first component of the S2 systems).
struct Calibration {
    std::array<std::array<double, 2>, 2> m{{{1, 0}, {0, 1}}};
    std::array<double, 2> c{0, 0};
    double residual = 0.0;

    std::pair<double, double> apply(std::pair<double, double> s) const {
        return {m[0][0] * s.first + m[0][1] * s.second + c[0],
                m[1][0] * s.first + m[1][1] * s.second + c[1]};
    }
};

Calibration calibrate(const SystemSpec& spec, int Dfit = 2, std::uint64_t seed = 42);

// Max mismatch between the calibrated separation spectrum and the oracle's
// joint spectrum at degree D, relative to the spread of each component.
double oracle_match_error(const SystemSpec& spec, int D, const Calibration& cal,
                          std::uint64_t seed);

// Rayleigh values (vT A v / vT v, vT B v / vT v) of an eigenfunction's
// coefficient vector under both integrals; throws NoConsistentMap if the
// vector is not an eigenvector of either matrix.
std::pair<double, double> rayleigh_pair(const OperatorMatrix& A, const OperatorMatrix& B,
                                        const eigenfunctions::HomogPoly& p);

} // namespace sphsep::oracle

#endif
