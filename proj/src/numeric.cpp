#include "excc/numeric.hpp"

#include <boost/multiprecision/integer.hpp>

namespace excc {

Int gcd_many(const std::vector<Int>& ks) {
    if (ks.empty()) {
        throw std::invalid_argument("gcd_many: empty list");
    }
    Int g = 0;
    for (const Int& k : ks) {
        if (k <= 0) {
            throw std::invalid_argument("gcd_many: entries must be positive");
        }
        g = boost::multiprecision::gcd(g, k);
    }
    return g;
}

Int binomial(const Int& n, const Int& k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    Int kk = k;
    if (n - k < kk) {
        kk = n - k;
    }
    Int result = 1;
    for (Int i = 1; i <= kk; ++i) {
        result = result * (n - kk + i) / i;  // exact at every step
    }
    return result;
}

bool is_integer(const Rat& r) {
    return boost::multiprecision::denominator(r) == 1;
}

Int to_integer(const Rat& r) {
    if (!is_integer(r)) {
        throw IntegralityViolation("expected an integer, got " + format_rational(r));
    }
    return boost::multiprecision::numerator(r);
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) {
        --q;
    }
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a > 0) {
        ++q;
    }
    return q;
}

Rat parse_rational(const std::string& s) {
    if (s.empty()) {
        throw std::invalid_argument("parse_rational: empty string");
    }
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(s));
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("parse_rational: zero denominator");
        }
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
    }
}

std::string format_rational(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

}  // namespace excc
