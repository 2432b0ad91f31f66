#include "excc/charcycle.hpp"

#include <stdexcept>
#include <utility>

namespace excc {

namespace {

// Exponential contribution to the coefficient on the conormal indexed by
// p, a subset of the pole branches. Each factor contributes
// multiplicity * (1 + sum of its orders over p); the same number must
// come out of the ramified covering determinant det(diag(d) + 1 kappa^T)
// divided by prod(d), with kappa_j = d_j * ord_j.
Rat exponential_coefficient(const IrregularCCData& data, const std::set<std::size_t>& p) {
    Rat total = 0;
    for (const IrregularFactor& f : data.factors()) {
        Rat term = 1;
        for (std::size_t j : p) {
            auto it = f.orders.find(j);
            if (it != f.orders.end()) {
                term += it->second;
            }
        }

        IntMatrix m(p.size(), p.size());
        Int denom = 1;
        std::size_t col = 0;
        for (std::size_t j : p) {
            const Int d = data.ramification_of(j);
            Rat kappa = Rat(d);
            auto it = f.orders.find(j);
            if (it != f.orders.end()) {
                kappa *= it->second;
            } else {
                kappa = 0;
            }
            const Int kappa_int = to_integer(kappa);
            for (std::size_t row = 0; row < p.size(); ++row) {
                m(row, col) = kappa_int;
            }
            m(col, col) += d;
            denom *= d;
            ++col;
        }
        if (Rat(determinant(m)) != Rat(denom) * term) {
            throw std::logic_error("limit multiplicity: covering determinant mismatch");
        }

        total += Rat(f.multiplicity) * term;
    }
    return total;
}

}  // namespace

IrregularCCData::IrregularCCData(std::set<std::size_t> pole_branches,
                                 std::set<std::size_t> regular_branches,
                                 std::vector<IrregularFactor> factors,
                                 LagrangianCycle regular_cycle,
                                 std::map<std::size_t, Int> ramification,
                                 std::map<std::size_t, Int> g_orders)
    : pole_branches_(std::move(pole_branches)),
      regular_branches_(std::move(regular_branches)),
      factors_(std::move(factors)),
      regular_cycle_(std::move(regular_cycle)),
      ramification_(std::move(ramification)),
      g_orders_(std::move(g_orders)) {
    // Re-partition: a branch on both sides belongs to the pole side.
    for (std::size_t b : pole_branches_) {
        regular_branches_.erase(b);
    }

    auto check_index = [&](std::size_t b, const char* where) {
        if (b == 0) {
            throw std::invalid_argument(std::string("IrregularCCData: zero branch index in ") +
                                        where);
        }
        if (pole_branches_.count(b) == 0 && regular_branches_.count(b) == 0) {
            throw std::invalid_argument(std::string("IrregularCCData: unknown branch in ") +
                                        where);
        }
    };
    if (pole_branches_.count(0) != 0 || regular_branches_.count(0) != 0) {
        throw std::invalid_argument("IrregularCCData: zero branch index");
    }

    for (const IrregularFactor& f : factors_) {
        if (f.multiplicity < 1) {
            throw std::invalid_argument("IrregularCCData: factor multiplicity must be positive");
        }
        for (const auto& [branch, order] : f.orders) {
            if (pole_branches_.count(branch) == 0) {
                throw std::invalid_argument(
                    "IrregularCCData: factor order on a branch outside the pole set");
            }
            if (order < 0) {
                throw std::invalid_argument("IrregularCCData: negative pole order");
            }
            if (ramification_of(branch) % denominator(order) != 0) {
                throw std::invalid_argument(
                    "IrregularCCData: pole order denominator does not divide the ramification");
            }
        }
    }

    for (const auto& [id, coeff] : regular_cycle_.coefficients) {
        (void)coeff;
        for (std::size_t b : parse_subset_id(id)) {
            if (regular_branches_.count(b) == 0) {
                throw std::invalid_argument(
                    "IrregularCCData: regular cycle touches a branch outside the regular set");
            }
        }
    }

    for (const auto& [b, d] : ramification_) {
        check_index(b, "ramification");
        if (d < 1) {
            throw std::invalid_argument("IrregularCCData: ramification degrees must be positive");
        }
    }
    for (const auto& [b, m] : g_orders_) {
        check_index(b, "g_orders");
        if (m < 1) {
            throw std::invalid_argument("IrregularCCData: g pole orders must be positive");
        }
    }
}

Int IrregularCCData::ramification_of(std::size_t branch) const {
    auto it = ramification_.find(branch);
    return it == ramification_.end() ? Int(1) : it->second;
}

Int IrregularCCData::g_order_of(std::size_t branch) const {
    auto it = g_orders_.find(branch);
    return it == g_orders_.end() ? Int(1) : it->second;
}

LagrangianCycle cc_quasinormal(const QuasiNormalData& q) {
    const std::size_t l = q.l();
    if (l > 16) {
        throw std::invalid_argument("cc_quasinormal: more than 16 branches");
    }
    std::vector<Int> irr(l);
    for (std::size_t i = 0; i < l; ++i) {
        irr[i] = irregularity(q, i + 1);
    }

    LagrangianCycle cc;
    const std::size_t full = (std::size_t{1} << l) - 1;
    for (std::size_t mask = 0; mask <= full; ++mask) {
        Int coeff = q.rank();
        std::set<std::size_t> s;
        for (std::size_t i = 0; i < l; ++i) {
            if ((mask >> i) & 1u) {
                coeff += irr[i];
                s.insert(i + 1);
            }
        }
        cc.coefficients[subset_id(s)] = coeff;
    }
    cc.normalize();
    return cc;
}

Int limit_multiplicity(const IrregularCCData& data, const std::set<std::size_t>& s) {
    if (s.empty()) {
        throw std::invalid_argument("limit_multiplicity: empty stratum");
    }
    std::set<std::size_t> p;
    for (std::size_t b : s) {
        if (data.pole_branches().count(b) != 0) {
            p.insert(b);
        } else if (data.regular_branches().count(b) == 0) {
            throw std::invalid_argument("limit_multiplicity: unknown branch index");
        }
    }
    return to_integer(exponential_coefficient(data, p));
}

LagrangianCycle ginsburg_limit(const IrregularCCData& data) {
    // Enumerate the subsets of the pole branches once; coefficient values
    // depend only on the subset, not on the regular-cycle term.
    const std::vector<std::size_t> poles(data.pole_branches().begin(),
                                         data.pole_branches().end());
    if (poles.size() > 16) {
        throw std::invalid_argument("ginsburg_limit: more than 16 pole branches");
    }

    std::vector<std::pair<std::set<std::size_t>, Int>> weights;
    const std::size_t full = (std::size_t{1} << poles.size()) - 1;
    for (std::size_t mask = 0;; ++mask) {
        std::set<std::size_t> p;
        for (std::size_t i = 0; i < poles.size(); ++i) {
            if ((mask >> i) & 1u) {
                p.insert(poles[i]);
            }
        }
        const Int weight = to_integer(exponential_coefficient(data, p));
        weights.emplace_back(std::move(p), weight);
        if (mask == full) {
            break;
        }
    }

    LagrangianCycle out;
    for (const auto& [id, c] : data.regular_cycle().coefficients) {
        const std::set<std::size_t> base = parse_subset_id(id);
        for (const auto& [p, weight] : weights) {
            std::set<std::size_t> stratum = base;
            stratum.insert(p.begin(), p.end());
            out.coefficients[subset_id(stratum)] += c * weight;
        }
    }
    out.normalize();
    return out;
}

ToricDegreeWitness toric_degree_witness(const std::vector<Int>& k) {
    const std::size_t l = k.size();
    if (l == 0) {
        throw std::invalid_argument("toric_degree_witness: empty order vector");
    }
    Int s = 0;
    for (const Int& v : k) {
        if (v < 0) {
            throw std::invalid_argument("toric_degree_witness: negative order");
        }
        s += v;
    }
    const Int degree = s + 1;

    ToricDegreeWitness w{IntMatrix(l, l), IntMatrix(l, l), {}};
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
            w.a(i, j) = -k[j] - (i == j ? 1 : 0);
            w.c(i, j) = k[j] - (i == j ? degree : 0);
        }
    }

    IntMatrix expected(l, l);
    for (std::size_t i = 0; i < l; ++i) {
        expected(i, i) = degree;
    }
    if (mul(w.a, w.c) != expected || mul(w.c, w.a) != expected) {
        throw std::logic_error("toric_degree_witness: product check failed");
    }

    w.snf = smith_normal_form(w.a);
    std::vector<Int> diag(l, Int(1));
    diag.back() = degree;
    if (w.snf.diag != diag) {
        throw std::logic_error("toric_degree_witness: invariant factors are not (1,...,1,degree)");
    }
    return w;
}

}  // namespace excc
