#pragma once

// Shared exact arithmetic: arbitrary-precision integers and rationals,
// plus the error types raised by the computation modules.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace excc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Raised when a quantity that is an integer by theory (an irregularity,
// a limit multiplicity) comes out fractional, signalling inconsistent
// factor data.
class IntegralityViolation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Raised when rational stand-ins chosen for generic symbolic parameters
// collide with the vanishing locus of a required coefficient.
class GenericityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// gcd of a nonempty list of positive integers.
Int gcd_many(const std::vector<Int>& ks);

// Binomial coefficient C(n, k); 0 when k < 0 or k > n.
Int binomial(const Int& n, const Int& k);

bool is_integer(const Rat& r);

// Exact conversion; throws IntegralityViolation when r has a denominator.
Int to_integer(const Rat& r);

// Floor and ceiling division for b > 0.
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

// Parses "p/q" or "p" with optional sign; the result is stored reduced.
Rat parse_rational(const std::string& s);

// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 1.
std::string format_rational(const Rat& r);

}  // namespace excc
