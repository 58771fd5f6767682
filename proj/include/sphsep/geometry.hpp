#ifndef SPHSEP_GEOMETRY_HPP
#define SPHSEP_GEOMETRY_HPP

#include <nlohmann/json_fwd.hpp>
#include <vector>

#include "sphsep/types.hpp"

namespace sphsep::geometry {

struct SpherePoint {
    std::vector<double> x; // length 4 (S3) or 3 (S2), sum of squares = 1
    void validate() const;
};

// Separable coordinate boxes (inclusive):
//   Ellipsoidal    e_j <= s_j <= e_{j+1}
//   Prolate        0 <= s1 <= 1, 0 <= s2 <= 1, 1 <= s3 <= a
//   Oblate         0 <= s1 <= 1, 1 <= s2 <= a, 0 <= s3 <= 1
//   Lame           0 <= s1 <= 1, f1 <= s2 <= f2 <= s3 <= f3
//   Spherical23 / Cylindrical / S2Spherical: each s_k in [0, 1]
//   S2Ellipsoidal  e1 <= s1 <= e2 <= s2 <= e3
// (For oblate the Heun pair is (s1, s2) and s3 carries the angle; the box
// follows the coordinate formulas.)
std::vector<std::pair<double, double>> coordinate_box(const SystemSpec& spec);

// Squared coordinates x_i^2 from separable coordinates (no sign choice).
std::vector<double> squared_cartesian(const SystemSpec& spec, const std::vector<double>& s);

SpherePoint to_cartesian(const SystemSpec& spec, const std::vector<double>& s,
                         const std::vector<int>& signs);

// Strict inverse; throws SingularStratum if any x_i = 0.
std::vector<double> from_cartesian(const SystemSpec& spec, const SpherePoint& p);

// Ellipsoidal parameter vectors converging to a degenerate system:
//   Prolate: e3 = e2 + eps,  Oblate: e4 = e3 + eps,  Lame: e1 = -1/eps.
SystemSpec degenerate(const SystemSpec& ellipsoidal, SystemKind target, double eps);

nlohmann::json system_to_json(const SystemSpec& spec);
SystemSpec system_from_json(const nlohmann::json& j);

} // namespace sphsep::geometry

#endif
