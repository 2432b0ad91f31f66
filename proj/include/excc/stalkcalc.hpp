#pragma once

#include "excc/constructible.hpp"
#include "excc/numeric.hpp"

#include <set>
#include <string>
#include <vector>

namespace excc {

// Pole orders of one exponential factor along the l local branches.
class PoleVector {
  public:
    explicit PoleVector(std::vector<Rat> orders);

    const std::vector<Rat>& orders() const { return orders_; }
    std::size_t size() const { return orders_.size(); }

  private:
    std::vector<Rat> orders_;
};

struct WeightedFactor {
    PoleVector orders;
    Int multiplicity;
};

// Local model of a holonomic module on a normal crossing chart: a rank-r
// connection with exponential factors f of multiplicity N(f) and declared
// ramification degrees along the branches.
class QuasiNormalData {
  public:
    QuasiNormalData(std::size_t l, std::size_t ambient_dim, std::vector<WeightedFactor> factors,
                    Int rank, std::vector<Int> ramification);

    std::size_t l() const { return l_; }
    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<WeightedFactor>& factors() const { return factors_; }
    const Int& rank() const { return rank_; }
    const std::vector<Int>& ramification() const { return ramification_; }

  private:
    std::size_t l_;
    std::size_t ambient_dim_;
    std::vector<WeightedFactor> factors_;
    Int rank_;
    std::vector<Int> ramification_;
};

// Solution-stalk dimensions at the deepest point of the chart.
struct StalkTable {
    std::map<long, Int> dims;
    Int euler;

    bool operator==(const StalkTable&) const = default;
};

// Canonical id of a branch subset: "{}", "{1}", "{1,3}".
std::string subset_id(const std::set<std::size_t>& s);

// Inverse of subset_id. Accepts only the canonical form: strictly
// increasing positive indices inside braces.
std::set<std::size_t> parse_subset_id(const std::string& id);

// Stalk dimensions for a single exponential factor with integer pole
// orders k: {1: k_1} when l = 1; gcd(k) * C(l-1, j-1) in degrees 1..l when
// l >= 2, where the gcd is taken as 0 once any order vanishes.
StalkTable exponential_stalk_dims(const PoleVector& k);

// Irregularity along one branch (1-based): sum over factors of
// multiplicity times pole order. Throws IntegralityViolation when the sum
// is not an integer.
Int irregularity(const QuasiNormalData& q, std::size_t branch);

// chi(Sol) at a point of the stratum indexed by S: the rank on the open
// stratum, minus the irregularity on a smooth divisor stratum, zero on
// deeper strata.
Int local_euler_index(const QuasiNormalData& q, const std::set<std::size_t>& stratum);

// chi(Sol) as a constructible function on the 2^l coordinate strata of a
// polydisc chart. Internally cross-checked against the signed
// inclusion-exclusion expansion over closed coordinate subspaces.
ConstructibleFunction chi_sol_function(const QuasiNormalData& q);

// The 2^l coordinate strata of a polydisc chart, with the chart Euler
// characteristics: 1 on the deepest stratum, 0 elsewhere.
Stratification nc_chart_stratification(std::size_t l);

}  // namespace excc
