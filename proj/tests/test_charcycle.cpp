#include <doctest.h>

#include "excc/charcycle.hpp"
#include "excc/constructible.hpp"
#include "excc/stalkcalc.hpp"

#include <random>
#include <vector>

using excc::Int;
using excc::IrregularCCData;
using excc::IrregularFactor;
using excc::LagrangianCycle;
using excc::PoleVector;
using excc::QuasiNormalData;
using excc::Rat;

namespace {

QuasiNormalData quasinormal(const std::vector<Rat>& orders, const Int& rank) {
    const std::size_t l = orders.size();
    std::vector<excc::WeightedFactor> factors;
    factors.push_back({PoleVector(orders), Int(1)});
    if (rank > 1) {
        factors.push_back({PoleVector(std::vector<Rat>(l, Rat(0))), rank - 1});
    }
    return QuasiNormalData(l, l, std::move(factors), rank, std::vector<Int>(l, Int(1)));
}

LagrangianCycle cycle_of(std::map<std::string, Int> coeffs) {
    LagrangianCycle cc;
    cc.coefficients = std::move(coeffs);
    return cc;
}

}  // namespace

TEST_CASE("quasi normal characteristic cycle") {
    CHECK(excc::cc_quasinormal(quasinormal({Rat(3)}, Int(1))) ==
          cycle_of({{"{}", Int(1)}, {"{1}", Int(4)}}));

    CHECK(excc::cc_quasinormal(quasinormal({Rat(2), Rat(5)}, Int(1))) ==
          cycle_of({{"{}", Int(1)}, {"{1}", Int(3)}, {"{2}", Int(6)}, {"{1,2}", Int(8)}}));

    const QuasiNormalData zero(2, 2, {}, Int(0), {Int(1), Int(1)});
    CHECK(excc::cc_quasinormal(zero) == LagrangianCycle{});
}

TEST_CASE("quasi normal cycle inverts the stalk euler characteristics") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> irr_dist(0, 9);
    std::uniform_int_distribution<int> rank_dist(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t l = 1 + static_cast<std::size_t>(trial % 4);
        std::vector<Rat> orders;
        for (std::size_t i = 0; i < l; ++i) {
            orders.emplace_back(irr_dist(rng));
        }
        const QuasiNormalData q = quasinormal(orders, Int(rank_dist(rng)));

        const excc::Stratification chart = excc::nc_chart_stratification(l);
        const LagrangianCycle via_chi =
            excc::cc_from_chi(chart, excc::EuTable(), excc::chi_sol_function(q));
        CHECK(excc::cc_quasinormal(q) == via_chi);
    }
}

TEST_CASE("limit multiplicities") {
    SUBCASE("full intersection gives the covering degree") {
        const IrregularCCData data(
            {1, 2, 3}, {},
            {{{{1, Rat(2)}, {2, Rat(3)}, {3, Rat(4)}}, Int(1)}},
            cycle_of({{"{}", Int(1)}}), {}, {});
        CHECK(excc::limit_multiplicity(data, {1, 2, 3}) == 10);
        CHECK(excc::limit_multiplicity(data, {1}) == 3);
        CHECK(excc::limit_multiplicity(data, {2, 3}) == 8);
        CHECK_THROWS_AS(excc::limit_multiplicity(data, {}), std::invalid_argument);
        CHECK_THROWS_AS(excc::limit_multiplicity(data, {4}), std::invalid_argument);
    }
    SUBCASE("zero orders leave the unit contribution") {
        const IrregularCCData data({1}, {}, {{{}, Int(1)}}, cycle_of({{"{}", Int(1)}}), {}, {});
        CHECK(excc::limit_multiplicity(data, {1}) == 1);
    }
    SUBCASE("conjugate ramified pair") {
        const IrregularCCData data(
            {1}, {},
            {{{{1, Rat(3, 2)}}, Int(1)}, {{{1, Rat(3, 2)}}, Int(1)}},
            cycle_of({{"{}", Int(1)}}), {{1, Int(2)}}, {});
        CHECK(excc::limit_multiplicity(data, {1}) == 5);
    }
    SUBCASE("lone half-integral factor is rejected as non-integral") {
        const IrregularCCData data({1}, {}, {{{{1, Rat(3, 2)}}, Int(1)}},
                                   cycle_of({{"{}", Int(1)}}), {{1, Int(2)}}, {});
        CHECK_THROWS_AS(excc::limit_multiplicity(data, {1}), excc::IntegralityViolation);
    }
    SUBCASE("regular branches contribute nothing to the exponential part") {
        const IrregularCCData data({1}, {2}, {{{{1, Rat(4)}}, Int(1)}},
                                   cycle_of({{"{2}", Int(1)}}), {}, {});
        CHECK(excc::limit_multiplicity(data, {1, 2}) == excc::limit_multiplicity(data, {1}));
        CHECK(excc::limit_multiplicity(data, {2}) == 1);
    }
    SUBCASE("invariant under ramification refinement") {
        for (int refine = 1; refine <= 4; ++refine) {
            const IrregularCCData data(
                {1, 2}, {},
                {{{{1, Rat(3, 2)}, {2, Rat(1)}}, Int(2)}},
                cycle_of({{"{}", Int(1)}}), {{1, Int(2 * refine)}, {2, Int(refine)}}, {});
            CHECK(excc::limit_multiplicity(data, {1, 2}) == 7);
        }
    }
}

TEST_CASE("ginsburg limit") {
    SUBCASE("one pole branch against one regular branch") {
        for (int k = 1; k <= 4; ++k) {
            const IrregularCCData data({1}, {2}, {{{{1, Rat(k)}}, Int(1)}},
                                       cycle_of({{"{}", Int(1)}, {"{2}", Int(1)}}), {}, {});
            CHECK(excc::ginsburg_limit(data) ==
                  cycle_of({{"{}", Int(1)},
                            {"{1}", Int(k + 1)},
                            {"{2}", Int(1)},
                            {"{1,2}", Int(k + 1)}}));
        }
    }
    SUBCASE("empty pole set reproduces the classical pattern") {
        const LagrangianCycle regular =
            cycle_of({{"{}", Int(1)}, {"{2}", Int(3)}, {"{2,5}", Int(2)}});
        const IrregularCCData data({}, {2, 5}, {{{}, Int(1)}}, regular, {}, {});
        CHECK(excc::ginsburg_limit(data) == regular);
    }
    SUBCASE("matches the quasi normal cycle on shared instances") {
        std::mt19937 rng(555);
        std::uniform_int_distribution<int> irr_dist(0, 6);
        std::uniform_int_distribution<int> rank_dist(1, 4);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t l = 1 + static_cast<std::size_t>(trial % 3);
            std::vector<Rat> orders;
            std::set<std::size_t> poles;
            std::map<std::size_t, Rat> order_map;
            for (std::size_t i = 0; i < l; ++i) {
                orders.emplace_back(irr_dist(rng));
                poles.insert(i + 1);
                order_map[i + 1] = orders.back();
            }
            const Int rank(rank_dist(rng));

            std::vector<IrregularFactor> factors{{order_map, Int(1)}};
            if (rank > 1) {
                factors.push_back({{}, rank - 1});
            }
            const IrregularCCData data(poles, {}, std::move(factors),
                                       cycle_of({{"{}", Int(1)}}), {}, {});
            CHECK(excc::ginsburg_limit(data) == excc::cc_quasinormal(quasinormal(orders, rank)));
        }
    }
    SUBCASE("g pole orders never change the output") {
        const IrregularCCData plain({1}, {2}, {{{{1, Rat(5)}}, Int(2)}},
                                    cycle_of({{"{2}", Int(1)}}), {}, {});
        const IrregularCCData twisted({1}, {2}, {{{{1, Rat(5)}}, Int(2)}},
                                      cycle_of({{"{2}", Int(1)}}), {},
                                      {{1, Int(7)}, {2, Int(3)}});
        CHECK(excc::ginsburg_limit(plain) == excc::ginsburg_limit(twisted));
        CHECK(twisted.g_order_of(1) == 7);
        CHECK(plain.g_order_of(1) == 1);
    }
}

TEST_CASE("irregular data validation and re-partition") {
    // A branch on both sides moves to the pole side.
    const IrregularCCData shared({1}, {1, 2}, {{{{1, Rat(2)}}, Int(1)}},
                                 cycle_of({{"{2}", Int(1)}}), {}, {});
    CHECK(shared.regular_branches() == std::set<std::size_t>{2});
    CHECK(shared.pole_branches() == std::set<std::size_t>{1});

    CHECK_THROWS_AS(IrregularCCData({1}, {1, 2}, {}, cycle_of({{"{1}", Int(1)}}), {}, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(IrregularCCData({1}, {}, {{{{2, Rat(1)}}, Int(1)}},
                                    cycle_of({{"{}", Int(1)}}), {}, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(IrregularCCData({1}, {}, {{{{1, Rat(1)}}, Int(0)}},
                                    cycle_of({{"{}", Int(1)}}), {}, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(IrregularCCData({1}, {}, {{{{1, Rat(-1)}}, Int(1)}},
                                    cycle_of({{"{}", Int(1)}}), {}, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(IrregularCCData({1}, {}, {{{{1, Rat(1, 3)}}, Int(1)}},
                                    cycle_of({{"{}", Int(1)}}), {{1, Int(2)}}, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(IrregularCCData({1}, {}, {}, {}, {{3, Int(1)}}, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(IrregularCCData({1}, {}, {}, {}, {}, {{1, Int(0)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(IrregularCCData({0}, {}, {}, {}, {}, {}), std::invalid_argument);
}

TEST_CASE("toric degree witness") {
    SUBCASE("fixed instances") {
        const excc::ToricDegreeWitness w = excc::toric_degree_witness({Int(1), Int(1)});
        CHECK(w.snf.diag == std::vector<Int>{Int(1), Int(3)});
        CHECK(w.a == excc::IntMatrix(2, 2, {Int(-2), Int(-1), Int(-1), Int(-2)}));

        const excc::ToricDegreeWitness w1 = excc::toric_degree_witness({Int(5)});
        CHECK(w1.a == excc::IntMatrix(1, 1, {Int(-6)}));
        CHECK(w1.snf.diag == std::vector<Int>{Int(6)});

        const excc::ToricDegreeWitness w0 =
            excc::toric_degree_witness({Int(0), Int(0), Int(0)});
        CHECK(w0.snf.diag == std::vector<Int>{Int(1), Int(1), Int(1)});
        CHECK(w0.a == excc::IntMatrix(3, 3, {Int(-1), Int(0), Int(0), Int(0), Int(-1), Int(0),
                                             Int(0), Int(0), Int(-1)}));

        CHECK_THROWS_AS(excc::toric_degree_witness({}), std::invalid_argument);
        CHECK_THROWS_AS(excc::toric_degree_witness({Int(-1)}), std::invalid_argument);
    }
    SUBCASE("products verified externally on random orders") {
        std::mt19937 rng(31415);
        std::uniform_int_distribution<int> kdist(0, 9);
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t l = 1 + static_cast<std::size_t>(trial % 5);
            std::vector<Int> k;
            Int total = 0;
            for (std::size_t i = 0; i < l; ++i) {
                k.emplace_back(kdist(rng));
                total += k.back();
            }
            const excc::ToricDegreeWitness w = excc::toric_degree_witness(k);
            excc::IntMatrix expected(l, l);
            for (std::size_t i = 0; i < l; ++i) {
                expected(i, i) = total + 1;
            }
            CHECK(excc::mul(w.a, w.c) == expected);
            CHECK(excc::mul(w.c, w.a) == expected);
            const Int expected_det = l % 2 == 0 ? Int(total + 1) : Int(-(total + 1));
            CHECK(excc::determinant(w.a) == expected_det);
        }
    }
}
