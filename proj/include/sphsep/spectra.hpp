#ifndef SPHSEP_SPECTRA_HPP
#define SPHSEP_SPECTRA_HPP

#include <cstdint>

#include "sphsep/types.hpp"

namespace sphsep {

// Joint spectrum of any of the eight systems at degree D (l for S2 systems).
JointSpectrum compute_spectrum(const SystemSpec& spec, int D, std::uint64_t seed);

} // namespace sphsep

#endif
