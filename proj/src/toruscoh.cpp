#include "excc/toruscoh.hpp"

#include <stdexcept>

namespace excc {

TorusProblem::TorusProblem(std::vector<Int> k) : k_(std::move(k)) {
    if (k_.size() < 2) {
        throw std::invalid_argument("TorusProblem: need at least two weights");
    }
    for (const Int& v : k_) {
        if (v < 1) {
            throw std::invalid_argument("TorusProblem: weights must be positive");
        }
    }
}

Int CohomologyTable::dim(long j) const {
    auto it = dims.find(j);
    return it == dims.end() ? Int(0) : it->second;
}

Int CohomologyTable::alternating_sum() const {
    Int sum = 0;
    for (const auto& [j, dim] : dims) {
        sum += (j % 2 == 0 ? dim : -dim);
    }
    return sum;
}

CohomologyTable closed_form_dims(const TorusProblem& p) {
    const long l = static_cast<long>(p.l());
    const Int d = gcd_many(p.k());
    CohomologyTable table;
    for (long j = 1; j <= l; ++j) {
        table.dims[j] = d * binomial(Int(l - 1), Int(j - 1));
    }
    return table;
}

CohomologyTable oracle_dims(const TorusProblem& p) {
    const std::size_t l = p.l();

    // Straightening: the first invariant factor of the 1 x l covector is
    // the number of parallel slab components of the complement.
    IntMatrix row(1, l);
    for (std::size_t j = 0; j < l; ++j) {
        row(0, j) = p.k()[j];
    }
    const Int d = smith_normal_form(row).diag[0];

    // Each slab is an (l-1)-torus times an open interval; the interval
    // shifts compactly supported degrees up by one. Kuenneth over the
    // torus factors is an (l-1)-fold convolution of (1, 1).
    std::vector<Int> conv{Int(1)};
    for (std::size_t step = 0; step + 1 < l; ++step) {
        std::vector<Int> next(conv.size() + 1, Int(0));
        for (std::size_t i = 0; i < conv.size(); ++i) {
            next[i] += conv[i];
            next[i + 1] += conv[i];
        }
        conv = std::move(next);
    }

    CohomologyTable table;
    for (std::size_t j = 1; j <= l; ++j) {
        table.dims[static_cast<long>(j)] = d * conv[j - 1];
    }
    return table;
}

Int restriction_rank(const TorusProblem& p, long j) {
    if (j < 0) {
        throw std::invalid_argument("restriction_rank: negative degree");
    }
    const IntMatrix basis = kernel_lattice_basis(p.k());
    return exterior_rank(transpose(basis), j);
}

IntMatrix phi_parametrization(const TorusProblem& p) {
    const std::size_t l = p.l();
    const std::vector<Int>& k = p.k();
    if (gcd_many(k) != 1) {
        throw std::invalid_argument("phi_parametrization: weights must be coprime");
    }

    // Partial gcds d_m = gcd(k_1..k_m).
    std::vector<Int> d(l + 1, Int(0));
    d[1] = k[0];
    for (std::size_t m = 2; m <= l; ++m) {
        d[m] = boost::multiprecision::gcd(d[m - 1], k[m - 1]);
    }

    IntMatrix phi(l, l - 1);
    for (std::size_t m = 1; m + 1 <= l; ++m) {
        // Level-m certificate; level 1 is the trivial one k_1 * 1 = d_1.
        std::vector<Int> cert{Int(1)};
        if (m >= 2) {
            cert = bezout_chain(k, m).coefficients;
        }
        if (m + 1 == l) {
            for (std::size_t i = 0; i < m; ++i) {
                phi(i, m - 1) = k[l - 1] * cert[i];
            }
            phi(l - 1, m - 1) = -d[l - 1];
        } else if (m == 1) {
            phi(0, 0) = k[1] / d[2];
            phi(1, 0) = -k[0] / d[2];
        } else {
            const Int scale = k[m] / d[m + 1];
            for (std::size_t i = 0; i < m; ++i) {
                phi(i, m - 1) = scale * cert[i];
            }
            phi(m, m - 1) = -d[m] / d[m + 1];
        }
    }

    for (std::size_t j = 0; j + 1 < l; ++j) {
        Int dot = 0;
        for (std::size_t i = 0; i < l; ++i) {
            dot += k[i] * phi(i, j);
        }
        if (dot != 0) {
            throw std::logic_error("phi_parametrization: column not orthogonal to the covector");
        }
    }
    return phi;
}

}  // namespace excc
