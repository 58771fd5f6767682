#include "sphsep/monodromy.hpp"

#include <algorithm>
#include <cmath>

namespace sphsep::monodromy {

namespace {

double dist2(const Point2& a, const Point2& b) {
    const double dx = a[0] - b[0], dy = a[1] - b[1];
    return dx * dx + dy * dy;
}

std::size_t nearest(const std::vector<Point2>& pts, const Point2& p) {
    std::size_t best = 0;
    double bd = 1e300;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double d = dist2(pts[i], p);
        if (d < bd) {
            bd = d;
            best = i;
        }
    }
    return best;
}

// Difference vectors to the k nearest neighbours of pts[at].
std::vector<Point2> neighbour_vectors(const std::vector<Point2>& pts, std::size_t at,
                                      std::size_t k = 48) {
    std::vector<std::pair<double, std::size_t>> order;
    order.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i == at) continue;
        order.push_back({dist2(pts[i], pts[at]), i});
    }
    std::partial_sort(order.begin(), order.begin() + std::min(k, order.size()), order.end());
    std::vector<Point2> out;
    for (std::size_t i = 0; i < std::min(k, order.size()); ++i) {
        const auto& p = pts[order[i].second];
        out.push_back({p[0] - pts[at][0], p[1] - pts[at][1]});
    }
    return out;
}

// Columns of the joint-spectrum lattice: the first coordinate takes exact
// values m hbar, so grouping by abscissa is unambiguous. Monodromy matrices
// of these lattices are lower triangular precisely because the column index
// is global; a transported basis vector keeps its column offset and only its
// ladder component is re-matched.
struct ColumnIndex {
    std::vector<double> xs;               // sorted column abscissae
    std::vector<std::vector<double>> lam; // sorted ladder values per column

    static ColumnIndex build(const std::vector<Point2>& pts) {
        std::vector<double> x(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) x[i] = pts[i][0];
        std::sort(x.begin(), x.end());
        double gap = 1e300;
        for (std::size_t i = 0; i + 1 < x.size(); ++i)
            if (x[i + 1] - x[i] > 1e-9) gap = std::min(gap, x[i + 1] - x[i]);
        if (gap == 1e300) throw InvalidProblem("transport: single-column lattice");
        ColumnIndex ci;
        for (double xi : x)
            if (ci.xs.empty() || xi - ci.xs.back() > 0.5 * gap) ci.xs.push_back(xi);
        ci.lam.resize(ci.xs.size());
        for (const auto& p : pts) ci.lam[ci.col(p[0])].push_back(p[1]);
        for (auto& l : ci.lam) std::sort(l.begin(), l.end());
        return ci;
    }

    int col(double x) const {
        const auto it = std::lower_bound(xs.begin(), xs.end(), x);
        int i = static_cast<int>(it - xs.begin());
        if (i > 0 && (i == static_cast<int>(xs.size()) || x - xs[i - 1] < xs[i] - x)) --i;
        return i;
    }

    // Ladder value nearest to target in the given column, plus the runner-up
    // distance and the local rung for the ambiguity gates.
    std::array<double, 3> match(int column, double target) const {
        const auto& l = lam[column];
        double d1 = 1e300, d2 = 1e300, best = 0.0;
        for (double v : l) {
            const double d = std::abs(v - target);
            if (d < d1) {
                d2 = d1;
                d1 = d;
                best = v;
            } else if (d < d2) {
                d2 = d;
            }
        }
        double rung = 1e300;
        for (std::size_t i = 0; i + 1 < l.size(); ++i) rung = std::min(rung, l[i + 1] - l[i]);
        if (rung == 1e300) rung = 2.0 * d1 + 1e-300;
        return {best, d1, d2 == 1e300 ? 1e300 : d2};
    }

    double rung_near(int column, double value) const {
        const auto& l = lam[column];
        double rung = 1e300;
        for (std::size_t i = 0; i + 1 < l.size(); ++i) {
            if (value < l[i] - 1e-12 || value > l[i + 1] + 1e-12) continue;
            rung = std::min(rung, l[i + 1] - l[i]);
        }
        if (rung == 1e300)
            for (std::size_t i = 0; i + 1 < l.size(); ++i)
                rung = std::min(rung, l[i + 1] - l[i]);
        return rung;
    }
};

} // namespace

LatticeCell initial_cell(const std::vector<Point2>& lattice, const Point2& at) {
    if (lattice.size() < 8) throw InvalidProblem("initial_cell: lattice too small");
    LatticeCell cell;
    const std::size_t b = nearest(lattice, at);
    cell.base = lattice[b];
    const auto cand = neighbour_vectors(lattice, b, 24);
    // Joint-spectrum lattices have exact m-columns: vertical lattice vectors
    // carry dx = 0 up to rounding.
    double best1 = 1e300, best2 = 1e300;
    for (const auto& c : cand) {
        const double len = std::hypot(c[0], c[1]);
        if (std::abs(c[0]) <= 1e-9 + 1e-6 * std::abs(c[1])) {
            if (len < best1) {
                best1 = len;
                cell.v1 = c;
            }
        } else if (len < best2) {
            best2 = len;
            cell.v2 = c;
        }
    }
    if (best1 == 1e300 || best2 == 1e300)
        throw LeftLattice("initial_cell: no transverse neighbour pair");
    if (cell.v1[1] < 0) cell.v1 = {-cell.v1[0], -cell.v1[1]};
    if (cell.v2[0] < 0) cell.v2 = {-cell.v2[0], -cell.v2[1]};
    return cell;
}

std::vector<Point2> circle_loop(const Point2& center, double radius, int waypoints) {
    if (waypoints < 8) throw InvalidProblem("circle_loop: need at least 8 waypoints");
    std::vector<Point2> loop;
    loop.reserve(waypoints + 1);
    for (int i = 0; i <= waypoints; ++i) {
        const double t = 2.0 * M_PI * i / waypoints;
        loop.push_back({center[0] + radius * std::cos(t), center[1] + radius * std::sin(t)});
    }
    return loop;
}

TransportResult transport(const std::vector<Point2>& lattice, const std::vector<Point2>& loop,
                          LatticeCell cell) {
    if (loop.size() < 2 || dist2(loop.front(), loop.back()) > 1e-18)
        throw InvalidProblem("transport: loop must be closed");
    const Point2 v1_0 = cell.v1, v2_0 = cell.v2;
    const double det0 = v1_0[0] * v2_0[1] - v1_0[1] * v2_0[0];
    if (std::abs(det0) < 1e-14) throw InvalidProblem("transport: degenerate initial cell");

    const ColumnIndex ci = ColumnIndex::build(lattice);
    std::size_t base = nearest(lattice, loop.front());
    int bcol = ci.col(lattice[base][0]);
    const int dcol1 = ci.col(lattice[base][0] + cell.v1[0]) - bcol;
    const int dcol2 = ci.col(lattice[base][0] + cell.v2[0]) - bcol;

    auto step_to = [&](std::size_t b) {
        const int c = ci.col(lattice[b][0]);
        for (auto [v, dc] : {std::pair{&cell.v1, dcol1}, {&cell.v2, dcol2}}) {
            const int tc = c + dc;
            if (tc < 0 || tc >= static_cast<int>(ci.xs.size()))
                throw LeftLattice("transport: basis vector leaves the lattice columns");
            const double target = lattice[b][1] + (*v)[1];
            const auto [lam, d1, d2] = ci.match(tc, target);
            const double rung = ci.rung_near(tc, lam);
            if (d1 > 0.52 * rung)
                throw LeftLattice("transport: no neighbour continues the basis vector");
            if (d1 > 0.35 * rung && d1 / d2 > 0.9)
                throw AmbiguousMatch(
                    "transport: two neighbour candidates within 10%, shrink the step");
            *v = {ci.xs[tc] - lattice[b][0], lam - lattice[b][1]};
        }
        base = b;
        bcol = c;
    };

    for (const auto& w : loop) {
        const std::size_t b = nearest(lattice, w);
        if (b != base) step_to(b);
    }
    // Loop is closed: re-anchor once more at the start.
    {
        const std::size_t b = nearest(lattice, loop.front());
        if (b != base) step_to(b);
    }

    auto solve = [&](const Point2& v) {
        const double a = (v[0] * v2_0[1] - v[1] * v2_0[0]) / det0;
        const double b = (v1_0[0] * v[1] - v1_0[1] * v[0]) / det0;
        return std::array<double, 2>{a, b};
    };
    const auto r1 = solve(cell.v1);
    const auto r2 = solve(cell.v2);
    TransportResult res;
    res.matrix = {{{std::lround(r1[0]), std::lround(r1[1])},
                   {std::lround(r2[0]), std::lround(r2[1])}}};
    const double err = std::max({std::abs(r1[0] - res.matrix[0][0]), std::abs(r1[1] - res.matrix[0][1]),
                                 std::abs(r2[0] - res.matrix[1][0]), std::abs(r2[1] - res.matrix[1][1])});
    if (err > 0.25)
        throw LeftLattice("transport: final basis is not an integer combination of the start");
    const long det = res.matrix[0][0] * res.matrix[1][1] - res.matrix[0][1] * res.matrix[1][0];
    if (det != 1 && det != -1)
        throw LeftLattice("transport: basis change is not unimodular");
    return res;
}

std::vector<Point2> scaled_points(const JointSpectrum& js) {
    std::vector<Point2> pts;
    pts.reserve(js.states.size());
    for (const auto& st : js.states) pts.push_back({st.scaled1, st.scaled2});
    return pts;
}

std::vector<Point2> polygon_projection(const SystemSpec& spec, const JointSpectrum& js, int axis,
                                       actions::EtildeMode mode) {
    if (axis != 0 && axis != 2)
        throw InvalidProblem("polygon_projection: axis must select J1 or J3");
    std::vector<Point2> pts;
    pts.reserve(js.states.size());
    for (const auto& st : js.states) {
        const auto J = actions::actions_for_state(spec, st, js.hbar, mode);
        pts.push_back({st.scaled1, axis == 0 ? J.J1 : J.J3});
    }
    return pts;
}

} // namespace sphsep::monodromy
