#pragma once

#include "excc/exactla.hpp"
#include "excc/numeric.hpp"

#include <map>
#include <vector>

namespace excc {

// Union of parallel subtori in the l-torus cut out by one integer covector
// k with positive entries; the complement has gcd(k) slab components.
class TorusProblem {
  public:
    explicit TorusProblem(std::vector<Int> k);

    const std::vector<Int>& k() const { return k_; }
    std::size_t l() const { return k_.size(); }

  private:
    std::vector<Int> k_;
};

// Compactly supported Betti numbers, nonzero only in degrees 1..l.
struct CohomologyTable {
    std::map<long, Int> dims;

    Int dim(long j) const;
    Int alternating_sum() const;
    bool operator==(const CohomologyTable&) const = default;
};

// dims[j] = gcd(k) * C(l-1, j-1) for 1 <= j <= l.
CohomologyTable closed_form_dims(const TorusProblem& p);

// Independent route: straighten the covector with the Smith normal form so
// the subtorus union becomes gcd(k) parallel coordinate fibers, decompose
// the complement into product slabs, and sum Kuenneth dimensions. The
// binomial factors come from iterated convolution, not from binomial().
CohomologyTable oracle_dims(const TorusProblem& p);

// Rank of the degree-j restriction map to the subtorus union, computed as
// the exterior rank of the transposed kernel-lattice basis.
Int restriction_rank(const TorusProblem& p, long j);

// Coefficient matrix of the subtorus parametrization, one column per level
// Bezout certificate. Requires gcd(k) = 1; every column is orthogonal to k
// and the columns span the saturated kernel lattice.
IntMatrix phi_parametrization(const TorusProblem& p);

}  // namespace excc
