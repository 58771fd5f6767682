#ifndef SPHSEP_NUMERICS_HPP
#define SPHSEP_NUMERICS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "sphsep/types.hpp"

namespace sphsep::numerics {

// Default tolerances: root-system residual 1e-12, eigenvalue realness 1e-9,
// generic comparisons 1e-8 relative.
inline constexpr double kRootResidualTol = 1e-12;
inline constexpr double kRealnessTol = 1e-9;

// ---------------------------------------------------------------------------
// Nonlinear root systems (Heine-Stieltjes electrostatics).
//
// Roots z_1 < ... < z_d solve, for each k,
//   sum_j (gamma_j/2)/(z_k - e_j) + sum_{l != k} 1/(z_k - z_l) = 0
// with n_j roots required in the open interval (e_j, e_{j+1}).
// ---------------------------------------------------------------------------
struct RootSystemProblem {
    std::vector<double> poles;     // e, strictly increasing
    std::vector<double> exponents; // gamma, one per pole, > 0
    std::vector<int> occupancy;    // n, one per interval (poles.size()-1)

    int total_roots() const;
    void validate() const; // throws InvalidProblem
};

// Deterministic for a fixed seed. Throws NonConvergence after bounded
// restarts with fresh jitter.
std::vector<double> solve_root_system(const RootSystemProblem& problem, std::uint64_t seed);

// Accessory parameters q_j = gamma_j * sum_k 1/(z_k - e_j).
std::vector<double> accessory_parameters(const RootSystemProblem& problem,
                                         const std::vector<double>& roots);

// Residual vector of the electrostatic equations at the given roots.
std::vector<double> root_system_residual(const RootSystemProblem& problem,
                                         const std::vector<double>& roots);

// ---------------------------------------------------------------------------
// Real eigenvalues of small dense tridiagonal matrices (not symmetrizable in
// general: the sign pattern sub*super < 0 occurs for all Heun blocks here).
// ---------------------------------------------------------------------------
struct Tridiag {
    std::vector<double> sub;   // length n-1
    std::vector<double> diag;  // length n
    std::vector<double> super; // length n-1

    int n() const { return static_cast<int>(diag.size()); }
    void validate() const;
};

// Sorted ascending. Balances by a positive diagonal similarity first, then
// runs a general real eigensolver; throws ComplexSpectrum if any eigenvalue
// keeps |Im| > kRealnessTol.
std::vector<double> eigen_real(const Tridiag& t);

// ---------------------------------------------------------------------------
// Quadrature robust to inverse-square-root endpoint singularities.
// ---------------------------------------------------------------------------
enum class IntegrandKind { SqrtEndpointBoth, SqrtEndpointLeft, Smooth };

struct QuadratureSpec {
    double lower = 0.0;
    double upper = 1.0;
    IntegrandKind kind = IntegrandKind::Smooth;
    double rel_tol = 1e-10;

    void validate() const;
};

// Tanh-sinh with level doubling; adaptive-bisection fallback. Throws
// NoConvergence if the refinement stalls.
double integrate(const QuadratureSpec& spec, const std::function<double(double)>& f);

// Gauss-Legendre with order doubling until two consecutive orders agree to
// rel_tol. Exponentially accurate for integrands smooth on [lo, hi]; the
// action module maps its windows onto smooth integrands before calling this.
double integrate_gauss(const std::function<double(double)>& f, double lo, double hi,
                       double rel_tol);

// ---------------------------------------------------------------------------
// Classical orthogonal polynomials by stable forward recurrence.
// ---------------------------------------------------------------------------
struct ClassicalKind {
    enum Family { gegenbauer, assoc_legendre, jacobi, chebyshev2 } family;
    double p1 = 0.0; // gegenbauer: u ; assoc_legendre: m ; jacobi: alpha
    double p2 = 0.0; // jacobi: beta
};

double eval_classical(const ClassicalKind& kind, int n, double x);

double eval_gegenbauer(int n, double u, double x);
double eval_assoc_legendre(int l, int m, double x); // Condon-Shortley phase
double eval_jacobi(int n, double alpha, double beta, double x);
double eval_chebyshev2(int n, double x);

// Coefficient vectors (index = power of x), used by the eigenfunction module.
std::vector<double> gegenbauer_coeffs(int n, double u);
std::vector<double> jacobi_coeffs(int n, double alpha, double beta);
// Polynomial part Q of P_l^m: P_l^m(x) = (-1)^m (1-x^2)^{m/2} Q(x), m >= 0.
std::vector<double> assoc_legendre_poly_part(int l, int m);

// Real roots helper used for Heun polynomial factorisations: eigenvalues of
// the companion matrix; imaginary parts returned as-is.
std::vector<std::pair<double, double>> poly_roots(const std::vector<double>& coeffs);

} // namespace sphsep::numerics

#endif
