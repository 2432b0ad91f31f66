#include "excc/constructible.hpp"

#include <algorithm>
#include <stdexcept>

namespace excc {

namespace {

int parity_sign(const Int& codim) {
    return codim % 2 == 0 ? 1 : -1;
}

}  // namespace

Stratification::Stratification(
    std::vector<Stratum> strata,
    const std::map<std::string, std::vector<std::string>>& closure_edges)
    : strata_(std::move(strata)) {
    if (strata_.empty()) {
        throw std::invalid_argument("Stratification: no strata");
    }
    for (std::size_t i = 0; i < strata_.size(); ++i) {
        if (strata_[i].codim < 0) {
            throw std::invalid_argument("Stratification: negative codimension");
        }
        if (!index_.emplace(strata_[i].id, i).second) {
            throw std::invalid_argument("Stratification: duplicate stratum id " + strata_[i].id);
        }
    }

    std::map<std::string, std::vector<std::string>> direct;
    for (const auto& [z, ws] : closure_edges) {
        if (!contains(z)) {
            throw std::invalid_argument("Stratification: closure edge from unknown stratum " + z);
        }
        for (const std::string& w : ws) {
            if (!contains(w)) {
                throw std::invalid_argument("Stratification: closure edge to unknown stratum " + w);
            }
            if (w == z) {
                throw std::invalid_argument("Stratification: closure edge from " + z + " to itself");
            }
            if (stratum(w).codim < stratum(z).codim) {
                throw std::invalid_argument(
                    "Stratification: codimension drops along closure edge " + z + " -> " + w);
            }
            direct[z].push_back(w);
        }
    }

    // Transitive closure by depth-first search; a stratum reached back
    // through one or more edges means the relation has a cycle.
    for (const Stratum& s : strata_) {
        std::set<std::string>& reach = closure_[s.id];
        std::vector<std::string> stack{s.id};
        while (!stack.empty()) {
            const std::string z = stack.back();
            stack.pop_back();
            auto it = direct.find(z);
            if (it == direct.end()) continue;
            for (const std::string& w : it->second) {
                if (w == s.id) {
                    throw std::invalid_argument("Stratification: closure relation has a cycle at " + s.id);
                }
                if (reach.insert(w).second) {
                    stack.push_back(w);
                }
            }
        }
        reach.insert(s.id);
    }

    // Kahn's algorithm over the direct edges; input order breaks ties so
    // the result is deterministic.
    std::map<std::string, std::size_t> indegree;
    for (const Stratum& s : strata_) {
        indegree[s.id] = 0;
    }
    for (const auto& [z, ws] : direct) {
        (void)z;
        for (const std::string& w : ws) {
            ++indegree[w];
        }
    }
    std::vector<std::string> ready;
    for (const Stratum& s : strata_) {
        if (indegree[s.id] == 0) {
            ready.push_back(s.id);
        }
    }
    std::size_t cursor = 0;
    while (cursor < ready.size()) {
        const std::string z = ready[cursor++];
        order_.push_back(z);
        auto it = direct.find(z);
        if (it == direct.end()) continue;
        for (const std::string& w : it->second) {
            if (--indegree[w] == 0) {
                ready.push_back(w);
            }
        }
    }
    if (order_.size() != strata_.size()) {
        throw std::invalid_argument("Stratification: closure relation has a cycle");
    }
}

bool Stratification::contains(const std::string& id) const {
    return index_.find(id) != index_.end();
}

const Stratum& Stratification::stratum(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw std::invalid_argument("Stratification: unknown stratum " + id);
    }
    return strata_[it->second];
}

const std::set<std::string>& Stratification::closure_of(const std::string& z) const {
    auto it = closure_.find(z);
    if (it == closure_.end()) {
        throw std::invalid_argument("Stratification: unknown stratum " + z);
    }
    return it->second;
}

bool Stratification::in_closure(const std::string& w, const std::string& z) const {
    const std::set<std::string>& cl = closure_of(z);
    return cl.find(w) != cl.end();
}

ConstructibleFunction::ConstructibleFunction(const Stratification& s,
                                             std::map<std::string, Int> values)
    : values_(std::move(values)) {
    for (const Stratum& st : s.strata()) {
        if (values_.find(st.id) == values_.end()) {
            throw std::invalid_argument("ConstructibleFunction: missing value on stratum " + st.id);
        }
    }
    if (values_.size() != s.strata().size()) {
        throw std::invalid_argument("ConstructibleFunction: value on unknown stratum");
    }
}

const Int& ConstructibleFunction::at(const std::string& id) const {
    auto it = values_.find(id);
    if (it == values_.end()) {
        throw std::invalid_argument("ConstructibleFunction: no value on stratum " + id);
    }
    return it->second;
}

void EuTable::set(const std::string& z, const std::string& w, const Int& value) {
    entries_[{z, w}] = value;
}

Int EuTable::value(const Stratification& s, const std::string& z, const std::string& w) const {
    if (!s.in_closure(w, z)) {
        return 0;
    }
    auto it = entries_.find({z, w});
    if (it != entries_.end()) {
        return it->second;
    }
    return 1;
}

void EuTable::validate(const Stratification& s) const {
    for (const auto& [key, value] : entries_) {
        const auto& [z, w] = key;
        if (!s.contains(z) || !s.contains(w)) {
            throw std::invalid_argument("EuTable: entry on unknown stratum");
        }
        if (!s.in_closure(w, z)) {
            throw std::invalid_argument("EuTable: entry (" + z + ", " + w + ") outside the closure");
        }
        if (z == w && value != 1) {
            throw std::invalid_argument("EuTable: diagonal entry at " + z + " must be 1");
        }
    }
}

bool LagrangianCycle::has_negative_coefficient() const {
    return std::any_of(coefficients.begin(), coefficients.end(),
                       [](const auto& kv) { return kv.second < 0; });
}

void LagrangianCycle::normalize() {
    for (auto it = coefficients.begin(); it != coefficients.end();) {
        it = it->second == 0 ? coefficients.erase(it) : std::next(it);
    }
}

Int euler_integral(const Stratification& s, const ConstructibleFunction& f) {
    Int total = 0;
    for (const Stratum& st : s.strata()) {
        total += st.chi * f.at(st.id);
    }
    return total;
}

ConstructibleFunction pushforward(const Stratification& target,
                                  const std::map<std::string, FiberData>& fibers) {
    for (const auto& [id, fiber] : fibers) {
        (void)fiber;
        if (!target.contains(id)) {
            throw std::invalid_argument("pushforward: fiber over unknown stratum " + id);
        }
    }
    std::map<std::string, Int> values;
    for (const Stratum& st : target.strata()) {
        auto it = fibers.find(st.id);
        if (it == fibers.end()) {
            throw std::invalid_argument("pushforward: no fiber data over stratum " + st.id);
        }
        values[st.id] = euler_integral(it->second.stratification, it->second.function);
    }
    return ConstructibleFunction(target, std::move(values));
}

ConstructibleFunction chi_from_cc(const Stratification& s, const EuTable& eu,
                                  const LagrangianCycle& cc) {
    eu.validate(s);
    for (const auto& [z, m] : cc.coefficients) {
        (void)m;
        if (!s.contains(z)) {
            throw std::invalid_argument("chi_from_cc: cycle component on unknown stratum " + z);
        }
    }
    std::map<std::string, Int> values;
    for (const Stratum& w : s.strata()) {
        Int chi = 0;
        for (const auto& [z, m] : cc.coefficients) {
            chi += parity_sign(s.stratum(z).codim) * m * eu.value(s, z, w.id);
        }
        values[w.id] = chi;
    }
    return ConstructibleFunction(s, std::move(values));
}

LagrangianCycle cc_from_chi(const Stratification& s, const EuTable& eu,
                            const ConstructibleFunction& f) {
    eu.validate(s);
    LagrangianCycle cc;
    // The system is triangular in closure order with unit diagonal, since
    // Eu_w(w) = 1 and Eu_z(w) = 0 unless w lies in the closure of z.
    for (const std::string& w : s.closure_order()) {
        Int acc = f.at(w);
        for (const auto& [z, m] : cc.coefficients) {
            if (s.in_closure(w, z)) {
                acc -= parity_sign(s.stratum(z).codim) * m * eu.value(s, z, w);
            }
        }
        cc.coefficients[w] = parity_sign(s.stratum(w).codim) * acc;
    }
    cc.normalize();
    return cc;
}

Int eu_plane_curve_point(const Int& multiplicity) {
    if (multiplicity < 1) {
        throw std::invalid_argument("eu_plane_curve_point: multiplicity must be positive");
    }
    return multiplicity;
}

}  // namespace excc
