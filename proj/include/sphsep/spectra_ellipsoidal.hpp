#ifndef SPHSEP_SPECTRA_ELLIPSOIDAL_HPP
#define SPHSEP_SPECTRA_ELLIPSOIDAL_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "sphsep/types.hpp"

namespace sphsep::spectra_ellipsoidal {

using SymmetryClass4 = std::array<int, 4>; // parity bits, 1 = odd about x_i

// The 8 classes present at even (odd) degree D.
std::vector<SymmetryClass4> classes_even();
std::vector<SymmetryClass4> classes_odd();
std::vector<SymmetryClass4> admissible_classes(int D);

// Exponents and polynomial shifts of the symmetry-transformed equation:
// gamma_m = 3/2 where mu_m = 1, else 1/2; (u0, u1, u2) shift the numerator
// (u0 - E) z^2 + (u1 + lambda1) z + (u2 - lambda2).
struct GenLameParams {
    std::array<double, 4> e;
    std::array<double, 4> gamma;
    double u0 = 0.0, u1 = 0.0, u2 = 0.0;
};

GenLameParams gen_lame_params(const std::array<double, 4>& e, const SymmetryClass4& mu);

struct EllipsoidalState {
    int D = 0;
    SymmetryClass4 mu{};
    std::array<int, 3> n{};      // interval occupancies
    std::vector<double> roots;   // sorted, d = n1+n2+n3 entries
    double lambda1 = 0.0, lambda2 = 0.0;
    double E = 0.0;              // D(D+2)
};

// Unique Heine-Stieltjes solution for one occupancy vector.
EllipsoidalState solve_occupancy(const std::array<double, 4>& e, const SymmetryClass4& mu,
                                 int D, const std::array<int, 3>& n, std::uint64_t seed);

// All C(d+2,2) states of one symmetry class, d = (D - sum mu)/2.
std::vector<EllipsoidalState> solve_class(const SystemSpec& spec, int D,
                                          const SymmetryClass4& mu, std::uint64_t seed);

// Union over the 8 admissible classes; (D+1)^2 states with hbar = 1/(D+1).
JointSpectrum full_spectrum(const SystemSpec& spec, int D, std::uint64_t seed);

} // namespace sphsep::spectra_ellipsoidal

#endif
