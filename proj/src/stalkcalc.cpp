#include "excc/stalkcalc.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace excc {

namespace {

std::set<std::size_t> subset_from_mask(std::size_t mask) {
    std::set<std::size_t> s;
    for (std::size_t i = 0; mask >> i != 0; ++i) {
        if ((mask >> i) & 1u) {
            s.insert(i + 1);
        }
    }
    return s;
}

}  // namespace

PoleVector::PoleVector(std::vector<Rat> orders) : orders_(std::move(orders)) {
    for (const Rat& v : orders_) {
        if (v < 0) {
            throw std::invalid_argument("PoleVector: negative pole order");
        }
    }
}

QuasiNormalData::QuasiNormalData(std::size_t l, std::size_t ambient_dim,
                                 std::vector<WeightedFactor> factors, Int rank,
                                 std::vector<Int> ramification)
    : l_(l),
      ambient_dim_(ambient_dim),
      factors_(std::move(factors)),
      rank_(std::move(rank)),
      ramification_(std::move(ramification)) {
    if (l_ == 0) {
        throw std::invalid_argument("QuasiNormalData: need at least one branch");
    }
    if (ambient_dim_ < l_) {
        throw std::invalid_argument("QuasiNormalData: ambient dimension below branch count");
    }
    if (rank_ < 0) {
        throw std::invalid_argument("QuasiNormalData: negative rank");
    }
    if (ramification_.size() != l_) {
        throw std::invalid_argument("QuasiNormalData: need one ramification degree per branch");
    }
    for (const Int& d : ramification_) {
        if (d < 1) {
            throw std::invalid_argument("QuasiNormalData: ramification degrees must be positive");
        }
    }
    Int total = 0;
    for (const WeightedFactor& f : factors_) {
        if (f.orders.size() != l_) {
            throw std::invalid_argument("QuasiNormalData: factor order count differs from l");
        }
        if (f.multiplicity < 1) {
            throw std::invalid_argument("QuasiNormalData: factor multiplicity must be positive");
        }
        for (std::size_t i = 0; i < l_; ++i) {
            if (ramification_[i] % denominator(f.orders.orders()[i]) != 0) {
                throw std::invalid_argument(
                    "QuasiNormalData: pole order denominator does not divide the ramification");
            }
        }
        total += f.multiplicity;
    }
    if (rank_ == 0 && !factors_.empty()) {
        throw std::invalid_argument("QuasiNormalData: rank zero admits no factors");
    }
    if (rank_ > 0 && total != rank_) {
        throw std::invalid_argument("QuasiNormalData: factor multiplicities must sum to the rank");
    }
}

std::string subset_id(const std::set<std::size_t>& s) {
    std::string id = "{";
    for (auto it = s.begin(); it != s.end(); ++it) {
        if (it != s.begin()) {
            id += ",";
        }
        id += std::to_string(*it);
    }
    id += "}";
    return id;
}

std::set<std::size_t> parse_subset_id(const std::string& id) {
    if (id.size() < 2 || id.front() != '{' || id.back() != '}') {
        throw std::invalid_argument("parse_subset_id: malformed id " + id);
    }
    std::set<std::size_t> s;
    const std::string body = id.substr(1, id.size() - 2);
    if (body.empty()) {
        return s;
    }
    std::size_t last = 0;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        const std::size_t comma = body.find(',', pos);
        const std::string token =
            body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("parse_subset_id: malformed id " + id);
        }
        const std::size_t value = std::stoul(token);
        if (value == 0 || value <= last) {
            throw std::invalid_argument("parse_subset_id: indices must increase in " + id);
        }
        s.insert(value);
        last = value;
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return s;
}

StalkTable exponential_stalk_dims(const PoleVector& k) {
    const std::size_t l = k.size();
    if (l == 0) {
        throw std::invalid_argument("exponential_stalk_dims: need at least one branch");
    }
    std::vector<Int> orders;
    orders.reserve(l);
    for (const Rat& v : k.orders()) {
        orders.push_back(to_integer(v));
    }

    StalkTable table;
    if (l == 1) {
        table.dims[1] = orders[0];
        table.euler = -orders[0];
        return table;
    }

    Int d = 0;
    bool all_positive = true;
    for (const Int& v : orders) {
        if (v == 0) {
            all_positive = false;
        }
    }
    if (all_positive) {
        d = gcd_many(orders);
    }
    table.euler = 0;
    for (long j = 1; j <= static_cast<long>(l); ++j) {
        const Int dim = d * binomial(Int(l - 1), Int(j - 1));
        table.dims[j] = dim;
        table.euler += (j % 2 == 0 ? dim : -dim);
    }
    return table;
}

Int irregularity(const QuasiNormalData& q, std::size_t branch) {
    if (branch < 1 || branch > q.l()) {
        throw std::invalid_argument("irregularity: branch index out of range");
    }
    Rat sum = 0;
    for (const WeightedFactor& f : q.factors()) {
        sum += Rat(f.multiplicity) * f.orders.orders()[branch - 1];
    }
    return to_integer(sum);
}

Int local_euler_index(const QuasiNormalData& q, const std::set<std::size_t>& stratum) {
    for (std::size_t i : stratum) {
        if (i < 1 || i > q.l()) {
            throw std::invalid_argument("local_euler_index: branch index out of range");
        }
    }
    if (stratum.empty()) {
        return q.rank();
    }
    if (stratum.size() == 1) {
        return -irregularity(q, *stratum.begin());
    }
    return 0;
}

Stratification nc_chart_stratification(std::size_t l) {
    if (l > 16) {
        throw std::invalid_argument("nc_chart_stratification: more than 16 branches");
    }
    std::vector<Stratum> strata;
    std::map<std::string, std::vector<std::string>> edges;
    const std::size_t full = (std::size_t{1} << l) - 1;
    for (std::size_t mask = 0; mask <= full; ++mask) {
        const std::set<std::size_t> s = subset_from_mask(mask);
        const std::string id = subset_id(s);
        strata.push_back({id, Int(s.size()), mask == full ? Int(1) : Int(0)});
        for (std::size_t i = 0; i < l; ++i) {
            if (((mask >> i) & 1u) == 0) {
                edges[id].push_back(subset_id(subset_from_mask(mask | (std::size_t{1} << i))));
            }
        }
    }
    return Stratification(std::move(strata), edges);
}

ConstructibleFunction chi_sol_function(const QuasiNormalData& q) {
    const std::size_t l = q.l();
    const Stratification chart = nc_chart_stratification(l);

    std::vector<Int> irr(l);
    for (std::size_t i = 0; i < l; ++i) {
        irr[i] = irregularity(q, i + 1);
    }

    std::map<std::string, Int> values;
    const std::size_t full = (std::size_t{1} << l) - 1;
    for (std::size_t mask = 0; mask <= full; ++mask) {
        const std::set<std::size_t> t = subset_from_mask(mask);
        const Int direct = local_euler_index(q, t);

        // Signed expansion over closed coordinate subspaces D_S with S
        // inside T; it must collapse to the direct stratum value.
        Int expanded = 0;
        for (std::size_t sub = mask;; sub = (sub - 1) & mask) {
            Int weight = q.rank();
            for (std::size_t i = 0; i < l; ++i) {
                if ((sub >> i) & 1u) {
                    weight += irr[i];
                }
            }
            expanded += (std::popcount(sub) % 2 == 0 ? weight : -weight);
            if (sub == 0) {
                break;
            }
        }
        if (expanded != direct) {
            throw std::logic_error("chi_sol_function: signed expansion mismatch");
        }
        values[subset_id(t)] = direct;
    }
    return ConstructibleFunction(chart, std::move(values));
}

}  // namespace excc
