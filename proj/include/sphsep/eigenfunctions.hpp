#ifndef SPHSEP_EIGENFUNCTIONS_HPP
#define SPHSEP_EIGENFUNCTIONS_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "sphsep/types.hpp"

namespace sphsep::eigenfunctions {

// Sparse homogeneous polynomial in 3 or 4 Cartesian variables. For 3
// variables the last exponent slot stays 0. No explicit zeros are stored.
struct HomogPoly {
    int nvars = 4;
    std::map<std::array<int, 4>, double> terms;

    int degree() const;         // common total degree; -1 for the zero polynomial
    double coeff_norm() const;  // l2 norm of the coefficients
    bool is_zero() const { return terms.empty(); }

    HomogPoly& prune(double tol = 0.0);
    HomogPoly& normalize(); // unit leading (lexicographically largest) coefficient
};

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);
HomogPoly operator+(const HomogPoly& a, const HomogPoly& b);
HomogPoly operator*(double s, const HomogPoly& a);

// Exact term-by-term Laplacian (degree D-2; zero polynomial for D < 2).
HomogPoly laplacian(const HomogPoly& p);

// Per-axis parity bits (1 = odd). Throws MixedParity if any axis mixes.
std::array<int, 4> classify_symmetry(const HomogPoly& p);

// Rebuild the eigenfunction of a computed state as a homogeneous polynomial
// of degree D. Root data is recomputed from the state key and eigenvalues;
// throws MissingRoots if the state's payload cannot be reproduced.
HomogPoly reconstruct(const SystemSpec& spec, const QuantumState& state,
                      std::uint64_t seed = 42);

// Monomial basis of total degree D (lexicographic order).
std::vector<std::array<int, 4>> monomial_basis(int D, int nvars);

// Coefficients of p in the given basis.
std::vector<double> coeff_vector(const HomogPoly& p, const std::vector<std::array<int, 4>>& basis);

// Gram matrix of monomials under integration over S^{nvars-1}
// (closed-form half-integer Gamma moments), row-major.
std::vector<std::vector<double>> sphere_gram(const std::vector<std::array<int, 4>>& basis,
                                             int nvars);

// Plain-text export: one "coeff i j k l" line per term ("coeff i j k" on S2),
// sorted lexicographically; floats as shortest round-trip decimals.
void write_poly(std::ostream& os, const HomogPoly& p);
HomogPoly read_poly(std::istream& is, int nvars);

} // namespace sphsep::eigenfunctions

#endif
