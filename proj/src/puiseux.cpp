#include "excc/puiseux.hpp"

#include <stdexcept>

namespace excc {

void BivariatePolynomial::add_term(long a, long b, const Rat& coeff) {
    if (a < 0 || b < 0) {
        throw std::invalid_argument("BivariatePolynomial: negative exponent");
    }
    if (coeff == 0) {
        return;
    }
    const auto key = std::make_pair(a, b);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) {
        terms_.erase(it);
    }
}

long BivariatePolynomial::max_y_degree() const {
    if (terms_.empty()) {
        throw std::invalid_argument("max_y_degree: zero polynomial");
    }
    return terms_.rbegin()->first.first;
}

std::vector<NewtonEdge> lower_hull(const BivariatePolynomial& p) {
    if (p.is_zero()) {
        throw std::invalid_argument("lower_hull: zero polynomial");
    }

    // One candidate point per y-degree: the minimal t-exponent. The term
    // map is ordered lexicographically, so the first key seen for each a
    // already carries the minimal b.
    std::vector<std::pair<long, long>> pts;
    for (const auto& [key, coeff] : p.terms()) {
        (void)coeff;
        if (pts.empty() || pts.back().first != key.first) {
            pts.push_back(key);
        }
    }

    // Monotone chain over points sorted by a; popping on a non-left turn
    // merges collinear points into one edge.
    auto cross = [](const std::pair<long, long>& o, const std::pair<long, long>& u,
                    const std::pair<long, long>& v) {
        return Int(u.first - o.first) * Int(v.second - o.second) -
               Int(u.second - o.second) * Int(v.first - o.first);
    };
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) {
            hull.pop_back();
        }
        hull.push_back(pt);
    }

    std::vector<NewtonEdge> edges;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        NewtonEdge e;
        e.a1 = hull[i].first;
        e.b1 = hull[i].second;
        e.a2 = hull[i + 1].first;
        e.b2 = hull[i + 1].second;
        e.mu = Rat(Int(e.b1 - e.b2), Int(e.a2 - e.a1));
        e.length = Int(e.a2 - e.a1);
        edges.push_back(e);
    }
    return edges;
}

Int count_vanishing_branches(const BivariatePolynomial& p) {
    Int count = 0;
    for (const NewtonEdge& e : lower_hull(p)) {
        if (e.mu > 0) {
            count += e.length;
        }
    }
    return count;
}

Int count_quartic_family_branches(const Rat& alpha, const Rat& beta) {
    const Rat a2 = alpha * alpha;
    const Rat b2 = beta * beta;
    struct Term {
        long a;
        long b;
        Rat coeff;
    };
    const std::vector<Term> terms{
        {6, 0, a2 * a2},          {5, 0, Rat(-2) * a2 * b2}, {4, 0, b2 * b2},
        {0, 1, -b2 * beta},       {4, 1, a2 * beta},         {3, 1, -b2 * beta},
    };
    BivariatePolynomial p;
    for (const Term& t : terms) {
        if (t.coeff == 0) {
            throw GenericityError("count_quartic_family_branches: parameter choice kills a support coefficient");
        }
        p.add_term(t.a, t.b, t.coeff);
    }
    return count_vanishing_branches(p);
}

}  // namespace excc
