#ifndef SPHSEP_ACTIONS_HPP
#define SPHSEP_ACTIONS_HPP

#include <array>
#include <functional>

#include "sphsep/types.hpp"

namespace sphsep::actions {

struct ActionTriple {
    double J1 = 0.0, J2 = 0.0, J3 = 0.0;
    double sum() const { return J1 + J2 + J3; }
};

// Quantum states are evaluated at Etilde = 1 by default (plotting
// convention); Exact uses the eigenvalue Etilde = 1 - hbar^2.
enum class EtildeMode { Unit, Exact };

// integral of sqrt(max(p2, 0)) over (lo, hi), mapped through
// z = lo + (hi - lo) sin^2(theta) so that simple poles and simple zeros of
// p2 at the endpoints both become smooth in theta. Windows shorter than
// 1e-12 count as empty.
double window_integral(const std::function<double(double)>& p2, double lo, double hi);

// All arguments hbar-scaled. Throws OutsideImage if the turning points are
// complex or a required window sees p^2 < 0.
ActionTriple actions_ellipsoidal(const std::array<double, 4>& e, double Et, double lambda1,
                                 double lambda2);
ActionTriple actions_prolate(double a, double Et, double m, double lambda);
ActionTriple actions_oblate(double a, double Et, double m, double g);
ActionTriple actions_lame(const std::array<double, 3>& f, double Et, double fval, double g);
ActionTriple actions_spherical(double fval, double m, double Et = 1.0);
ActionTriple actions_cylindrical(double m1, double m2, double Et = 1.0);

// Dispatch on a computed state (S3 systems only; the S2 systems carry no
// action-triangle representation in this artifact).
ActionTriple actions_for_state(const SystemSpec& spec, const QuantumState& st, double hbar,
                               EtildeMode mode = EtildeMode::Unit);

} // namespace sphsep::actions

#endif
