#ifndef SPHSEP_TYPES_HPP
#define SPHSEP_TYPES_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sphsep {

// Error taxonomy shared by all modules. Every failure mode callers are
// expected to handle has its own type; all derive from Error so a CLI can
// map them onto exit codes in one place.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidProblem : Error { using Error::Error; };
struct NonConvergence : Error { using Error::Error; };
struct ComplexSpectrum : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct OutOfBox : Error { using Error::Error; };
struct SingularStratum : Error { using Error::Error; };
struct UnreachableTarget : Error { using Error::Error; };
struct TruncationViolated : Error { using Error::Error; };
struct DimensionGuard : Error { using Error::Error; };
struct DegenerateT : Error { using Error::Error; };
struct NoConsistentMap : Error { using Error::Error; };
struct OutsideImage : Error { using Error::Error; };
struct AmbiguousMatch : Error { using Error::Error; };
struct LeftLattice : Error { using Error::Error; };
struct MissingRoots : Error { using Error::Error; };
struct MixedParity : Error { using Error::Error; };

enum class SystemKind {
    Ellipsoidal,   // S3, e = (e1 < e2 < e3 < e4)
    Prolate,       // S3, axes (0, 1, 1, a), a > 1
    Oblate,        // S3, axes (0, 1, a, a), a > 1
    Lame,          // S3, f = (0, 1, a) after normalisation
    Spherical23,   // S3, parameter free
    Cylindrical,   // S3, parameter free
    S2Ellipsoidal, // S2, e = (e1 < e2 < e3)
    S2Spherical,   // S2, parameter free
};

std::string kind_name(SystemKind k);
SystemKind kind_from_name(const std::string& name);

struct SystemSpec {
    SystemKind kind = SystemKind::Spherical23;
    std::vector<double> params; // per-kind semantics, see geometry module

    int nvars() const;          // 4 on S3, 3 on S2
    void validate() const;      // throws InvalidProblem

    // Convenience accessors (validate() must hold).
    std::array<double, 4> e4() const;  // Ellipsoidal
    double a() const;                  // Prolate / Oblate / Lame
    std::array<double, 3> f3() const;  // Lame
    std::array<double, 3> e3() const;  // S2Ellipsoidal
};

// One joint-spectrum state. The raw pair holds the separation eigenvalues in
// the convention of the separated ODEs; the scaled pair applies the hbar
// powers appropriate to each component (hbar = 1/(D+1)).
//
// Quantum numbers q per system:
//   Ellipsoidal    q = (n1, n2, n3)   interval occupancies, mu = 4 parity bits
//   Prolate/Oblate q = (m, d, k)      signed m, Heun degree d, eigen index k
//   Lame           q = (n, d, k)      Gegenbauer degree n
//   Spherical23    q = (n, l, m)
//   Cylindrical    q = (d, m1, m2)
//   S2Ellipsoidal  q = (n1, n2, 0)
//   S2Spherical    q = (l, m, 0)
// mu always stores the full per-axis parity bits (axis i odd iff mu[i]=1);
// unused slots (S2 systems) stay 0.
struct QuantumState {
    int D = 0;
    std::array<int, 4> mu{0, 0, 0, 0};
    std::array<int, 3> q{0, 0, 0};
    double raw1 = 0.0, raw2 = 0.0;
    double scaled1 = 0.0, scaled2 = 0.0;
};

// Key used for deterministic ordering and identity of states.
inline std::array<long, 8> state_key(const QuantumState& s) {
    return {s.mu[0], s.mu[1], s.mu[2], s.mu[3], s.q[0], s.q[1], s.q[2], s.D};
}

struct JointSpectrum {
    SystemSpec system;
    int D = 0;          // homogeneous degree (l for the S2 systems)
    double hbar = 1.0;  // 1/(D+1)
    std::vector<QuantumState> states; // sorted by state_key

    std::size_t size() const { return states.size(); }
};

inline double hbar_of(int D) { return 1.0 / (D + 1); }

} // namespace sphsep

#endif
