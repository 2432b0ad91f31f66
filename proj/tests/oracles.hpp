#pragma once

// Independent reference computations used to cross-check the library.
// Everything here is implemented by a different route than the code under
// test: determinants by cofactor expansion, invariant factors by gcds of
// minors, and so on.

#include "excc/exactla.hpp"
#include "excc/numeric.hpp"
#include "excc/puiseux.hpp"

#include <vector>

namespace oracles {

// Determinant by recursive cofactor expansion. Exponential; small n only.
excc::Int cofactor_determinant(const std::vector<std::vector<excc::Int>>& m);

// Invariant factors via determinantal divisors: the k-th diagonal entry of
// the Smith form equals d_k / d_{k-1}, where d_k is the gcd of all k x k
// minors and d_0 = 1.
std::vector<excc::Int> snf_diag_by_minor_gcds(const excc::IntMatrix& a);

// Counts connected components of the complement of the subtorus union cut
// out by the covector k, on a grid with 8 * max(k) samples per circle.
// Supports l = 2 and l = 3.
excc::Int grid_component_count(const std::vector<excc::Int>& k);

// Schoolbook product of bivariate polynomials.
excc::BivariatePolynomial poly_mul(const excc::BivariatePolynomial& p,
                                   const excc::BivariatePolynomial& q);

// Expands prod_i (y - c_i t^{m_i}). A factor with m_i = 0 contributes a
// branch that does not vanish at t = 0.
excc::BivariatePolynomial branch_product(const std::vector<std::pair<excc::Rat, long>>& factors);

// Rank of a rational matrix by exact Gaussian elimination.
std::size_t rational_matrix_rank(std::vector<std::vector<excc::Rat>> m);

// Euler characteristic (kernel minus cokernel) of the connection operator
// g -> g' + g of e^x, acting on polynomials of degree <= truncation. The
// matrix is triangular with unit diagonal, so the value is stable in the
// truncation.
excc::Int de_rham_index_exp_line(long truncation);

// Euler characteristic of the connection operator g -> g' - g/x^2 of
// e^{1/x} on the punctured line, acting from Laurent monomial exponents
// [-truncation, truncation] to the span of their images, exponents
// [-truncation - 2, truncation - 1].
excc::Int de_rham_index_exp_punctured(long truncation);

}  // namespace oracles
