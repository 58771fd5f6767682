#ifndef SPHSEP_SPECTRA_HEUN_HPP
#define SPHSEP_SPECTRA_HEUN_HPP

#include <array>
#include <string>
#include <vector>

#include "sphsep/numerics.hpp"
#include "sphsep/types.hpp"

namespace sphsep::spectra_heun {

// Heun equation
//   W'' + (gamma/z + delta/(z-1) + eps/(z-a)) W' + (alpha beta z - q)/(z(z-1)(z-a)) W = 0
// with the Fuchs relation alpha + beta + 1 = gamma + delta + eps.
struct HeunParams {
    double a = 2.0;
    double q = 0.0;
    double alpha = 0.0, beta = 0.0;
    double gamma = 0.5, delta = 0.5, eps = 0.5;

    double fuchs_defect() const { return alpha + beta + 1.0 - gamma - delta - eps; }
};

// Index shifts W -> z^{1-gamma} W etc. at the three finite singular points.
// They realise the parity classes: multiplying the wavefunction by the odd
// coordinate factors shifts the local exponents of both Heun variables.
HeunParams shift_at_0(HeunParams p);
HeunParams shift_at_1(HeunParams p);
HeunParams shift_at_a(HeunParams p);

// (d+1)x(d+1) matrix whose eigenvalues are the admissible accessory values q:
// row 0 encodes a gamma c1 - q c0 = 0, rows i >= 1 the three-term recurrence
// A_i c_{i+1} - (B_i + q) c_i + C_i c_{i-1} = 0. Requires the truncation
// condition alpha = -d (throws TruncationViolated otherwise).
numerics::Tridiag heun_matrix(const HeunParams& p, int d);

// Series coefficients c_0..c_d of the degree-d Heun polynomial for a given
// accessory eigenvalue (c_0 = 1).
std::vector<double> heun_poly_coeffs(const HeunParams& p, int d, double q);

// One eigenvalue block: a symmetry-shifted Heun problem plus the affine map
// from the base accessory parameter to the physical spectral value,
//   spectral = q_off + q_scale * (q_tilde - qshift).
struct HeunBlock {
    HeunParams params; // class-shifted, alpha = -d
    int d = 0;
    double qshift = 0.0;
    double q_off = 0.0, q_scale = 1.0;

    std::vector<double> spectral_values() const; // sorted by q_tilde ascending
    double q_tilde_of_spectral(double value) const;
};

HeunBlock prolate_block(double a, int absm, int D, int mu1, int mu4);
HeunBlock oblate_block(double a, int absm, int D, int mu1, int mu2);
HeunBlock lame_block(double a, int d, const std::array<int, 3>& mu234, int D);
HeunBlock s2_ellipsoidal_block(const std::array<double, 3>& e, int ell,
                               const std::array<int, 3>& mu);

// Joint spectra. Scaled pairs: prolate/oblate (m hbar, lambda hbar^2),
// Lame (f hbar^2, g hbar^2), S2 ellipsoidal (E hbar^2, lambda hbar^2).
JointSpectrum prolate_spectrum(double a, int D);
JointSpectrum oblate_spectrum(double a, int D);
JointSpectrum lame_spectrum(const std::array<double, 3>& f, int D);
JointSpectrum s2_ellipsoidal_spectrum(const std::array<double, 3>& e, int ell);

// Lame polynomial naming (Arscott), e.g. (0,0,0) -> Ec_{2d}^{2m}.
std::string lame_function_label(int d, int m_index, const std::array<int, 3>& mu);

} // namespace sphsep::spectra_heun

#endif
