#pragma once

#include "excc/constructible.hpp"
#include "excc/exactla.hpp"
#include "excc/numeric.hpp"
#include "excc/stalkcalc.hpp"

#include <map>
#include <set>
#include <vector>

namespace excc {

// One exponential factor of the twist: pole orders keyed by pole branch
// index (missing branches have order 0) and a positive multiplicity.
struct IrregularFactor {
    std::map<std::size_t, Rat> orders;
    Int multiplicity;
};

// Input of the irregular Ginsburg limit: an exponential part with poles
// along the branches of pole_branches, a regular part whose conormal cycle
// is supported on intersections of regular_branches, and the pole orders of
// the defining function g. Branches listed on both sides are re-partitioned
// into the pole side, since t dlog g_1 + t dlog g_2 = t dlog(g_1 g_2).
class IrregularCCData {
  public:
    IrregularCCData(std::set<std::size_t> pole_branches, std::set<std::size_t> regular_branches,
                    std::vector<IrregularFactor> factors, LagrangianCycle regular_cycle,
                    std::map<std::size_t, Int> ramification, std::map<std::size_t, Int> g_orders);

    const std::set<std::size_t>& pole_branches() const { return pole_branches_; }
    const std::set<std::size_t>& regular_branches() const { return regular_branches_; }
    const std::vector<IrregularFactor>& factors() const { return factors_; }
    const LagrangianCycle& regular_cycle() const { return regular_cycle_; }
    Int ramification_of(std::size_t branch) const;
    Int g_order_of(std::size_t branch) const;

  private:
    std::set<std::size_t> pole_branches_;
    std::set<std::size_t> regular_branches_;
    std::vector<IrregularFactor> factors_;
    LagrangianCycle regular_cycle_;
    std::map<std::size_t, Int> ramification_;
    std::map<std::size_t, Int> g_orders_;
};

// Covering-degree witness for the monomial torus endomorphism attached to
// the pole orders k: a with entries -k_j - delta_ij, the explicit integer
// partner c with a*c = c*a = (sum k + 1)*identity, and the Smith form of a
// with diagonal (1, ..., 1, sum k + 1).
struct ToricDegreeWitness {
    IntMatrix a;
    IntMatrix c;
    SnfResult snf;
};

// Characteristic cycle of a quasi-normal form: the conormal to the S-fold
// intersection carries sum_{i in S} irr_i + rank.
LagrangianCycle cc_quasinormal(const QuasiNormalData& q);

// Coefficient of the conormal to the S-fold intersection in the Ginsburg
// limit: sum over factors of multiplicity * (sum of pole orders over
// S inside the pole branches + 1). Exact in rationals; each factor term is
// cross-checked by the ramified covering determinant and the total must be
// an integer.
Int limit_multiplicity(const IrregularCCData& data, const std::set<std::size_t>& s);

// Full Ginsburg limit: every regular-cycle term spreads over the subsets of
// the pole branches with the limit multiplicities as weights. The g pole
// orders never enter the coefficients; only the unit shift of dlog g does.
LagrangianCycle ginsburg_limit(const IrregularCCData& data);

// Builds and verifies the covering-degree witness. Orders k_i >= 0.
ToricDegreeWitness toric_degree_witness(const std::vector<Int>& k);

}  // namespace excc
