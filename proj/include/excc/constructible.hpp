#pragma once

#include "excc/numeric.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace excc {

// Locally closed stratum of a complex variety. codim is the complex
// codimension inside the ambient variety, chi the compactly supported Euler
// characteristic of the open stratum.
struct Stratum {
    std::string id;
    Int codim;
    Int chi;
};

// Finite stratification with its closure relation. The closure edges map a
// stratum to the strata contained in its closure boundary; codimension
// weakly increases along edges and the relation must be acyclic.
class Stratification {
  public:
    Stratification(std::vector<Stratum> strata,
                   const std::map<std::string, std::vector<std::string>>& closure_edges);

    const std::vector<Stratum>& strata() const { return strata_; }
    bool contains(const std::string& id) const;
    const Stratum& stratum(const std::string& id) const;

    // Ids of strata inside the closure of z, z itself included.
    const std::set<std::string>& closure_of(const std::string& z) const;
    bool in_closure(const std::string& w, const std::string& z) const;

    // Every stratum appears after all strata whose closure contains it.
    const std::vector<std::string>& closure_order() const { return order_; }

  private:
    std::vector<Stratum> strata_;
    std::map<std::string, std::size_t> index_;
    std::map<std::string, std::set<std::string>> closure_;
    std::vector<std::string> order_;
};

// Integer-valued constructible function given by one value per stratum.
class ConstructibleFunction {
  public:
    ConstructibleFunction(const Stratification& s, std::map<std::string, Int> values);

    const std::map<std::string, Int>& values() const { return values_; }
    const Int& at(const std::string& id) const;
    bool operator==(const ConstructibleFunction&) const = default;

  private:
    std::map<std::string, Int> values_;
};

// Local Euler obstruction values Eu_Z(w) for closure pairs w in cl(Z).
// Unstored pairs inside a closure default to 1, the smooth case; pairs
// outside the closure are 0 and the diagonal is always 1.
class EuTable {
  public:
    EuTable() = default;

    void set(const std::string& z, const std::string& w, const Int& value);
    Int value(const Stratification& s, const std::string& z, const std::string& w) const;

    // Rejects entries outside the closure relation and diagonal entries
    // different from 1.
    void validate(const Stratification& s) const;

  private:
    std::map<std::pair<std::string, std::string>, Int> entries_;
};

// Conormal cycle: multiplicity of the conormal component to the closure of
// each stratum. Zero coefficients are dropped by normalize; negative
// coefficients are representable on purpose.
struct LagrangianCycle {
    std::map<std::string, Int> coefficients;

    bool has_negative_coefficient() const;
    void normalize();
    bool operator==(const LagrangianCycle&) const = default;
};

// Integral with respect to the Euler characteristic.
Int euler_integral(const Stratification& s, const ConstructibleFunction& f);

// Stratified fiber of a proper map over one target stratum, together with
// the restriction of the function being pushed forward.
struct FiberData {
    Stratification stratification;
    ConstructibleFunction function;
};

// Proper pushforward: the value on a target stratum is the Euler integral
// over its fiber. Every target stratum needs fiber data and every fiber key
// must name a target stratum.
ConstructibleFunction pushforward(const Stratification& target,
                                  const std::map<std::string, FiberData>& fibers);

// chi(w) = sum_Z (-1)^{codim Z} m_Z Eu_Z(w).
ConstructibleFunction chi_from_cc(const Stratification& s, const EuTable& eu,
                                  const LagrangianCycle& cc);

// Inverse of chi_from_cc: the unique cycle with the given local Euler
// characteristics, solved in closure order.
LagrangianCycle cc_from_chi(const Stratification& s, const EuTable& eu,
                            const ConstructibleFunction& f);

// Local Euler obstruction of a plane curve germ at a point: equals the
// multiplicity of the germ.
Int eu_plane_curve_point(const Int& multiplicity);

}  // namespace excc
