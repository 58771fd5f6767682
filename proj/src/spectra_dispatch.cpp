#include "sphsep/spectra.hpp"

#include "sphsep/spectra_closedform.hpp"
#include "sphsep/spectra_ellipsoidal.hpp"
#include "sphsep/spectra_heun.hpp"

namespace sphsep {

JointSpectrum compute_spectrum(const SystemSpec& spec, int D, std::uint64_t seed) {
    spec.validate();
    if (D < 0) throw InvalidProblem("compute_spectrum: D >= 0 required");
    switch (spec.kind) {
        case SystemKind::Ellipsoidal:
            return spectra_ellipsoidal::full_spectrum(spec, D, seed);
        case SystemKind::Prolate:
            return spectra_heun::prolate_spectrum(spec.a(), D);
        case SystemKind::Oblate:
            return spectra_heun::oblate_spectrum(spec.a(), D);
        case SystemKind::Lame:
            return spectra_heun::lame_spectrum(spec.f3(), D);
        case SystemKind::Spherical23:
            return spectra_closedform::spherical_spectrum(D);
        case SystemKind::Cylindrical:
            return spectra_closedform::cylindrical_spectrum(D);
        case SystemKind::S2Ellipsoidal:
            return spectra_heun::s2_ellipsoidal_spectrum(spec.e3(), D);
        case SystemKind::S2Spherical:
            return spectra_closedform::s2_spherical_level(D);
    }
    throw InvalidProblem("compute_spectrum: unknown system");
}

} // namespace sphsep
