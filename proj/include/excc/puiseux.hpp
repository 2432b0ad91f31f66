#pragma once

#include "excc/numeric.hpp"

#include <map>
#include <utility>
#include <vector>

namespace excc {

// Polynomial in two variables y and t with rational coefficients. A support
// key (a, b) holds the y-exponent a and the t-exponent b; stored
// coefficients are nonzero and exponents are nonnegative.
class BivariatePolynomial {
  public:
    BivariatePolynomial() = default;

    // Adds coeff * y^a * t^b, merging with an existing term. A term whose
    // coefficient cancels to zero is removed from the support.
    void add_term(long a, long b, const Rat& coeff);

    const std::map<std::pair<long, long>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long max_y_degree() const;

  private:
    std::map<std::pair<long, long>, Rat> terms_;
};

// Edge of the lower Newton hull, a1 < a2. Every support point lies on or
// above the line through the endpoints.
struct NewtonEdge {
    long a1;
    long b1;
    long a2;
    long b2;
    Rat mu;      // (b1 - b2) / (a2 - a1)
    Int length;  // a2 - a1
};

// Lower convex hull of the support, edges ordered by increasing a.
// Collinear support points are merged into a single edge.
std::vector<NewtonEdge> lower_hull(const BivariatePolynomial& p);

// Number of Puiseux branches y(t) with y -> 0 as t -> 0, counted with
// multiplicity: the total length of the hull edges of positive slope.
Int count_vanishing_branches(const BivariatePolynomial& p);

// Branch count at the origin for the fixed quartic family cut out by the
// shape parameters alpha and beta. Throws GenericityError when a parameter
// choice kills one of the six support coefficients.
Int count_quartic_family_branches(const Rat& alpha, const Rat& beta);

}  // namespace excc
