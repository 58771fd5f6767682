#ifndef SPHSEP_MONODROMY_HPP
#define SPHSEP_MONODROMY_HPP

#include <array>
#include <vector>

#include "sphsep/actions.hpp"
#include "sphsep/types.hpp"

namespace sphsep::monodromy {

using Point2 = std::array<double, 2>;

struct LatticeCell {
    Point2 base{0, 0};
    Point2 v1{0, 0}; // "vertical" basis vector
    Point2 v2{0, 0}; // "horizontal" basis vector
};

// Integer unimodular basis change accumulated around a closed loop,
// rows transform: (v1', v2') = matrix * (v1, v2).
struct TransportResult {
    std::array<std::array<long, 2>, 2> matrix{{{1, 0}, {0, 1}}};
    long omega() const { return matrix[1][0]; }
};

// Cell anchored at the lattice point nearest to `at`, with v1 the most
// vertical and v2 the most horizontal short lattice vector.
LatticeCell initial_cell(const std::vector<Point2>& lattice, const Point2& at);

std::vector<Point2> circle_loop(const Point2& center, double radius, int waypoints);

// Parallel transport by minimal-change nearest-neighbour matching: at each
// waypoint the cell re-anchors to the nearest lattice point and each basis
// vector is re-matched to the neighbour difference closest to its previous
// value. Throws AmbiguousMatch / LeftLattice when the matching degrades.
TransportResult transport(const std::vector<Point2>& lattice, const std::vector<Point2>& loop,
                          LatticeCell cell);

// Scatter of (signed m, J_axis), axis 0 -> J1, axis 2 -> J3: the two
// semi-toric polygon representatives.
std::vector<Point2> polygon_projection(const SystemSpec& spec, const JointSpectrum& js,
                                       int axis,
                                       actions::EtildeMode mode = actions::EtildeMode::Unit);

// Scaled joint-spectrum points (the lattice the transport runs on).
std::vector<Point2> scaled_points(const JointSpectrum& js);

} // namespace sphsep::monodromy

#endif
