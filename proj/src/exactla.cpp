#include "excc/exactla.hpp"

#include <utility>

namespace excc {

namespace {

Int abs_int(const Int& v) {
    return v < 0 ? Int(-v) : v;
}

// Extended gcd: returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct ExtGcd {
    Int g, x, y;
};

ExtGcd ext_gcd(const Int& a, const Int& b) {
    if (b == 0) {
        if (a < 0) {
            return {-a, -1, 0};
        }
        return {a, 1, 0};
    }
    ExtGcd sub = ext_gcd(b, a % b);
    return {sub.g, sub.y, sub.x - (a / b) * sub.y};
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) {
        throw std::invalid_argument("IntMatrix: entry count does not match shape");
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("mul: shape mismatch");
    }
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

IntMatrix transpose(const IntMatrix& a) {
    IntMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = a(i, j);
        }
    }
    return out;
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("determinant: matrix not square");
    }
    const std::size_t n = a.rows();
    if (n == 0) {
        return 1;
    }
    // Bareiss fraction-free elimination; every division is exact.
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t pivot_row = k;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (m(i, k) != 0) {
                    pivot_row = i;
                    break;
                }
            }
            if (pivot_row == k) {
                return 0;
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(k, j), m(pivot_row, j));
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

SnfResult smith_normal_form(const IntMatrix& a_in) {
    const std::size_t r = a_in.rows();
    const std::size_t c = a_in.cols();
    if (r == 0 || c == 0) {
        throw std::invalid_argument("smith_normal_form: empty matrix");
    }

    IntMatrix a = a_in;
    IntMatrix left = IntMatrix::identity(r);
    IntMatrix right = IntMatrix::identity(c);

    auto row_swap = [&](std::size_t i1, std::size_t i2) {
        if (i1 == i2) return;
        for (std::size_t j = 0; j < c; ++j) std::swap(a(i1, j), a(i2, j));
        for (std::size_t j = 0; j < r; ++j) std::swap(left(i1, j), left(i2, j));
    };
    auto col_swap = [&](std::size_t j1, std::size_t j2) {
        if (j1 == j2) return;
        for (std::size_t i = 0; i < r; ++i) std::swap(a(i, j1), a(i, j2));
        for (std::size_t i = 0; i < c; ++i) std::swap(right(i, j1), right(i, j2));
    };
    // row i -= q * row t
    auto row_axpy = [&](std::size_t i, std::size_t t, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < c; ++j) a(i, j) -= q * a(t, j);
        for (std::size_t j = 0; j < r; ++j) left(i, j) -= q * left(t, j);
    };
    // col j -= q * col t
    auto col_axpy = [&](std::size_t j, std::size_t t, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < r; ++i) a(i, j) -= q * a(i, t);
        for (std::size_t i = 0; i < c; ++i) right(i, j) -= q * right(i, t);
    };
    auto row_add = [&](std::size_t dst, std::size_t src) {
        for (std::size_t j = 0; j < c; ++j) a(dst, j) += a(src, j);
        for (std::size_t j = 0; j < r; ++j) left(dst, j) += left(src, j);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < c; ++j) a(i, j) = -a(i, j);
        for (std::size_t j = 0; j < r; ++j) left(i, j) = -left(i, j);
    };

    const std::size_t steps = r < c ? r : c;
    for (std::size_t t = 0; t < steps; ++t) {
        // Smallest-absolute-value pivot in the trailing submatrix, ties
        // resolved in row-major order.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < r; ++i) {
            for (std::size_t j = t; j < c; ++j) {
                if (a(i, j) == 0) continue;
                if (!found || abs_int(a(i, j)) < abs_int(a(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        }
        if (!found) {
            break;  // trailing submatrix is zero
        }
        row_swap(t, pi);
        col_swap(t, pj);

        while (true) {
            // Clear column t and row t by remainder reduction; whenever a
            // nonzero remainder survives it is strictly smaller than the
            // pivot and replaces it, so this terminates.
            bool swapped = true;
            while (swapped) {
                swapped = false;
                for (std::size_t i = t + 1; i < r; ++i) {
                    if (a(i, t) == 0) continue;
                    row_axpy(i, t, a(i, t) / a(t, t));
                    if (a(i, t) != 0) {
                        row_swap(t, i);
                        swapped = true;
                    }
                }
                for (std::size_t j = t + 1; j < c; ++j) {
                    if (a(t, j) == 0) continue;
                    col_axpy(j, t, a(t, j) / a(t, t));
                    if (a(t, j) != 0) {
                        col_swap(t, j);
                        swapped = true;
                    }
                }
            }
            // Divisibility sweep: fold a non-divisible row into row t and
            // repeat the clearing pass.
            bool divisible = true;
            for (std::size_t i = t + 1; i < r && divisible; ++i) {
                for (std::size_t j = t + 1; j < c && divisible; ++j) {
                    if (a(i, j) % a(t, t) != 0) {
                        row_add(t, i);
                        divisible = false;
                    }
                }
            }
            if (divisible) {
                break;
            }
        }
        if (a(t, t) < 0) {
            negate_row(t);
        }
    }

    SnfResult out;
    out.left = std::move(left);
    out.right = std::move(right);
    out.diag.reserve(steps);
    for (std::size_t t = 0; t < steps; ++t) {
        out.diag.push_back(a(t, t));
    }
    return out;
}

std::size_t rank(const IntMatrix& a) {
    const SnfResult snf = smith_normal_form(a);
    std::size_t rk = 0;
    for (const Int& d : snf.diag) {
        if (d != 0) {
            ++rk;
        }
    }
    return rk;
}

BezoutCertificate bezout_chain(const std::vector<Int>& ks, std::size_t m) {
    if (m < 2 || m > ks.size()) {
        throw std::invalid_argument("bezout_chain: level out of range");
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (ks[i] <= 0) {
            throw std::invalid_argument("bezout_chain: entries must be positive");
        }
    }

    // Running extended-gcd chain over the first m entries.
    Int g = ks[0];
    std::vector<Int> n{Int(1)};
    for (std::size_t i = 1; i < m; ++i) {
        const ExtGcd e = ext_gcd(g, ks[i]);
        for (Int& coeff : n) {
            coeff *= e.x;
        }
        n.push_back(e.y);
        g = e.g;
    }

    // Deterministic representative: push N_i into (-(k_{i+1}/g), 0] in order,
    // compensating on N_{i+1}; each step preserves sum k_i N_i = g.
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const Int q = ks[i + 1] / g;
        if (q == 0) continue;
        const Int shift = ceil_div(n[i], q);
        n[i] -= shift * q;
        n[i + 1] += shift * (ks[i] / g);
    }

    BezoutCertificate cert;
    cert.level = m;
    cert.coefficients = std::move(n);
    return cert;
}

IntMatrix kernel_lattice_basis(const std::vector<Int>& k) {
    const std::size_t l = k.size();
    bool any_nonzero = false;
    for (const Int& v : k) {
        if (v != 0) {
            any_nonzero = true;
        }
    }
    if (l < 2 || !any_nonzero) {
        throw std::invalid_argument("kernel_lattice_basis: need length >= 2 and a nonzero entry");
    }

    IntMatrix row(1, l);
    for (std::size_t j = 0; j < l; ++j) {
        row(0, j) = k[j];
    }
    const SnfResult snf = smith_normal_form(row);
    // left * k * right = (d, 0, ..., 0), so the trailing l-1 columns of
    // right span the kernel; right is unimodular, hence the span is the
    // full saturated kernel lattice.
    IntMatrix basis(l, l - 1);
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 1; j < l; ++j) {
            basis(i, j - 1) = snf.right(i, j);
        }
    }
    return basis;
}

Int exterior_rank(const IntMatrix& m, long j) {
    if (j < 0) {
        throw std::invalid_argument("exterior_rank: negative degree");
    }
    return binomial(Int(rank(m)), Int(j));
}

}  // namespace excc
