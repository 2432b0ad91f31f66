#pragma once

// Exact integer linear algebra: dense arbitrary-precision matrices, Smith
// normal form with unimodular transforms, Bezout certificate chains,
// saturated kernel lattice bases, and exterior-power ranks.

#include "excc/numeric.hpp"

#include <cstddef>
#include <vector>

namespace excc {

// Dense row-major matrix over arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> e_;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);

// Exact determinant of a square matrix (fraction-free elimination).
Int determinant(const IntMatrix& a);

// left * a * right is the diagonal matrix of diag; left and right are
// unimodular; diag is the nonnegative divisibility chain d_i | d_{i+1}.
struct SnfResult {
    IntMatrix left;
    std::vector<Int> diag;
    IntMatrix right;
};

SnfResult smith_normal_form(const IntMatrix& a);

// Rank over Q (the number of nonzero Smith invariant factors).
std::size_t rank(const IntMatrix& a);

// Certificate for level m of a gcd chain: sum_{i<=m} k_i N_i = gcd(k_1..k_m).
struct BezoutCertificate {
    std::size_t level = 0;
    std::vector<Int> coefficients;
};

// Extended-gcd chain over the first m entries of ks, 2 <= m <= ks.size(),
// all entries positive.  Coefficients are normalised by reducing N_i into
// (-(k_{i+1}/d), 0] left to right, compensating on N_{i+1}, so the result
// is deterministic despite non-uniqueness.
BezoutCertificate bezout_chain(const std::vector<Int>& ks, std::size_t m);

// Basis of the saturated lattice {v in Z^l : k . v = 0} as the columns of
// an l x (l-1) matrix, obtained from the right transform of the SNF of the
// row vector k.  Requires at least one nonzero entry.
IntMatrix kernel_lattice_basis(const std::vector<Int>& k);

// binomial(rank_Q(m), j); the rank of the j-th exterior power of a linear
// map represented by m.
Int exterior_rank(const IntMatrix& m, long j);

}  // namespace excc
