#pragma once

// Random input builders shared by the unit tests and the acceptance runs.

#include "excc/constructible.hpp"
#include "excc/numeric.hpp"

#include <map>
#include <random>
#include <string>

namespace generators {

// Stratification on up to max_strata strata with strictly increasing
// codimension and random closure edges.
excc::Stratification random_stratification(std::mt19937& rng, std::size_t max_strata);

// Euler obstruction table with random small values on proper closure pairs.
excc::EuTable random_eu_table(std::mt19937& rng, const excc::Stratification& s);

excc::LagrangianCycle random_cycle(std::mt19937& rng, const excc::Stratification& s);

std::map<std::string, excc::Int> random_values(std::mt19937& rng, const excc::Stratification& s,
                                               int lo, int hi);

}  // namespace generators
