#include <doctest.h>

#include "excc/exactla.hpp"
#include "excc/toruscoh.hpp"
#include "oracles.hpp"

#include <random>
#include <vector>

using excc::CohomologyTable;
using excc::Int;
using excc::IntMatrix;
using excc::TorusProblem;

namespace {

std::vector<Int> to_weights(const std::vector<int>& raw) {
    return std::vector<Int>(raw.begin(), raw.end());
}

}  // namespace

TEST_CASE("torus problem validation") {
    CHECK_THROWS_AS(TorusProblem({Int(3)}), std::invalid_argument);
    CHECK_THROWS_AS(TorusProblem({Int(2), Int(0)}), std::invalid_argument);
    CHECK_THROWS_AS(TorusProblem({Int(2), Int(-1)}), std::invalid_argument);
}

TEST_CASE("closed form dimensions on fixed problems") {
    CHECK(excc::closed_form_dims(TorusProblem(to_weights({2, 3}))).dims ==
          std::map<long, Int>{{1, Int(1)}, {2, Int(1)}});
    CHECK(excc::closed_form_dims(TorusProblem(to_weights({2, 4, 6}))).dims ==
          std::map<long, Int>{{1, Int(2)}, {2, Int(4)}, {3, Int(2)}});
    CHECK(excc::closed_form_dims(TorusProblem(to_weights({1, 1}))).dims ==
          std::map<long, Int>{{1, Int(1)}, {2, Int(1)}});
}

TEST_CASE("straightening oracle on fixed problems") {
    CHECK(excc::oracle_dims(TorusProblem(to_weights({2, 2}))).dims ==
          std::map<long, Int>{{1, Int(2)}, {2, Int(2)}});
    CHECK(excc::oracle_dims(TorusProblem(to_weights({1, 1, 1}))).dims ==
          std::map<long, Int>{{1, Int(1)}, {2, Int(2)}, {3, Int(1)}});
    CHECK(excc::oracle_dims(TorusProblem(to_weights({2, 3}))).dims ==
          std::map<long, Int>{{1, Int(1)}, {2, Int(1)}});
}

TEST_CASE("closed form equals the oracle over the small weight box") {
    for (std::size_t l = 2; l <= 4; ++l) {
        std::vector<int> k(l, 1);
        while (true) {
            const TorusProblem p(to_weights(k));
            const CohomologyTable closed = excc::closed_form_dims(p);
            CHECK(closed == excc::oracle_dims(p));
            CHECK(closed.alternating_sum() == 0);

            std::size_t i = l;
            while (i > 0) {
                --i;
                if (++k[i] <= 5) break;
                k[i] = 1;
                if (i == 0) goto next_size;
            }
        }
    next_size:;
    }
}

TEST_CASE("restriction ranks") {
    CHECK(excc::restriction_rank(TorusProblem(to_weights({2, 3})), 1) == 1);
    CHECK(excc::restriction_rank(TorusProblem(to_weights({1, 2, 3, 4})), 0) == 1);
    CHECK(excc::restriction_rank(TorusProblem(to_weights({2, 3, 4})), 2) == 1);
    CHECK(excc::restriction_rank(TorusProblem(to_weights({2, 3, 4})), 5) == 0);
    CHECK_THROWS_AS(excc::restriction_rank(TorusProblem(to_weights({2, 3})), -1),
                    std::invalid_argument);

    std::mt19937 rng(31);
    std::uniform_int_distribution<int> kdist(1, 7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t l = 2 + static_cast<std::size_t>(trial % 3);
        std::vector<Int> k;
        for (std::size_t i = 0; i < l; ++i) {
            k.emplace_back(kdist(rng));
        }
        const TorusProblem p(k);
        for (long j = 0; j <= static_cast<long>(l); ++j) {
            CHECK(excc::restriction_rank(p, j) ==
                  excc::binomial(Int(l - 1), Int(j)));
        }
    }
}

TEST_CASE("long exact sequence bookkeeping matches the closed form") {
    // dims[j] splits as the alpha_j kernel on the ambient torus plus the
    // alpha_{j-1} cokernel on the d parallel subtori.
    std::mt19937 rng(67);
    std::uniform_int_distribution<int> kdist(1, 6);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t l = 2 + static_cast<std::size_t>(trial % 3);
        std::vector<Int> k;
        for (std::size_t i = 0; i < l; ++i) {
            k.emplace_back(kdist(rng));
        }
        const TorusProblem p(k);
        const Int d = excc::gcd_many(k);
        const CohomologyTable table = excc::closed_form_dims(p);
        for (long j = 1; j <= static_cast<long>(l); ++j) {
            const Int kernel_part =
                excc::binomial(Int(l), Int(j)) - excc::restriction_rank(p, j);
            const Int cokernel_part =
                d * excc::binomial(Int(l - 1), Int(j - 1)) - excc::restriction_rank(p, j - 1);
            CHECK(kernel_part + cokernel_part == table.dim(j));
        }
    }
}

TEST_CASE("parametrization matrix on fixed problems") {
    const IntMatrix phi23 = excc::phi_parametrization(TorusProblem(to_weights({2, 3})));
    CHECK(phi23 == IntMatrix(2, 1, {Int(3), Int(-2)}));

    const IntMatrix phi11 = excc::phi_parametrization(TorusProblem(to_weights({1, 1})));
    CHECK(phi11 == IntMatrix(2, 1, {Int(1), Int(-1)}));

    const IntMatrix phi234 = excc::phi_parametrization(TorusProblem(to_weights({2, 3, 4})));
    REQUIRE(phi234.rows() == 3);
    REQUIRE(phi234.cols() == 2);
    CHECK(phi234 == IntMatrix(3, 2, {Int(3), Int(-4), Int(-2), Int(4), Int(0), Int(-1)}));

    CHECK_THROWS_AS(excc::phi_parametrization(TorusProblem(to_weights({2, 4}))),
                    std::invalid_argument);
}

TEST_CASE("parametrization columns are orthogonal and span a saturated lattice") {
    std::mt19937 rng(271);
    std::uniform_int_distribution<int> kdist(1, 12);
    int done = 0;
    while (done < 40) {
        const std::size_t l = 2 + static_cast<std::size_t>(done % 4);
        std::vector<Int> k;
        for (std::size_t i = 0; i < l; ++i) {
            k.emplace_back(kdist(rng));
        }
        const Int d = excc::gcd_many(k);
        for (Int& v : k) {
            v /= d;
        }
        ++done;

        const IntMatrix phi = excc::phi_parametrization(TorusProblem(k));
        for (std::size_t j = 0; j + 1 < l; ++j) {
            Int dot = 0;
            for (std::size_t i = 0; i < l; ++i) {
                dot += k[i] * phi(i, j);
            }
            CHECK(dot == 0);
        }
        CHECK(excc::smith_normal_form(phi).diag == std::vector<Int>(l - 1, Int(1)));
    }
}

TEST_CASE("grid counter confirms the component count") {
    for (int k1 = 1; k1 <= 5; ++k1) {
        for (int k2 = 1; k2 <= 5; ++k2) {
            const std::vector<Int> k{Int(k1), Int(k2)};
            CHECK(oracles::grid_component_count(k) == excc::gcd_many(k));
        }
    }
    for (const auto& raw : std::vector<std::vector<int>>{
             {1, 1, 1}, {2, 2, 2}, {2, 4, 6}, {3, 3, 5}, {2, 3, 4}, {4, 4, 4}}) {
        const std::vector<Int> k = to_weights(raw);
        CHECK(oracles::grid_component_count(k) == excc::gcd_many(k));
    }
}
