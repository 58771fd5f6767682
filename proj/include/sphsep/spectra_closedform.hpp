#ifndef SPHSEP_SPECTRA_CLOSEDFORM_HPP
#define SPHSEP_SPECTRA_CLOSEDFORM_HPP

#include <vector>

#include "sphsep/types.hpp"

namespace sphsep::spectra_closedform {

// Pure integer enumerations plus the analytic eigenvalue laws; these never
// touch the numerics module and serve as exact fixtures for limit tests.

// States (n, l, m) with n + l = D, |m| <= l; lambda = D(D+2) - l(l+1).
// Scaled pair (m hbar, lambda hbar^2).
JointSpectrum spherical_spectrum(int D);

// States (d, m1, m2) with 2d + |m1| + |m2| = D. Scaled pair (m1 hbar, m2 hbar).
JointSpectrum cylindrical_spectrum(int D);

// One l-level on S2: states (l, m), E = l(l+1). Scaled pair (E hbar^2, m hbar).
JointSpectrum s2_spherical_level(int ell);

// All levels l <= lmax concatenated.
std::vector<QuantumState> s2_spherical_spectrum(int lmax);

} // namespace sphsep::spectra_closedform

#endif
