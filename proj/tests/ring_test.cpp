#include "doctest.h"

#include "psigma/planted_forest.hpp"
#include "psigma/ring.hpp"
#include "psigma/spectral.hpp"
#include "psigma/smith.hpp"

#include <algorithm>
#include <set>

using namespace psigma;

namespace {

Hypertree ht(int n, std::vector<std::vector<int>> edges) { return validate_hypertree(n, edges); }

RingElement a(int i, int j) { return RingElement::generator(i, j); }

} // namespace

TEST_SUITE("forest_ring")
{
    TEST_CASE("planted forests")
    {
        CHECK(enumerate_planted_forests(4, 1).size() == 12);
        for (int n = 2; n <= 6; ++n)
            CHECK(enumerate_planted_forests(n, 0).size() == 1);
        CHECK(enumerate_planted_forests(5, 4).size() == 625);

        const auto f = PlantedForest::from_edges(5, {{2, 3}, {3, 4}});
        CHECK(f.edge_count() == 2);
        CHECK(f.component_count() == 3);
        CHECK(f.root_of(2) == 4);
        CHECK(f.roots() == VertexSet{1, 4, 5});
        CHECK(f.to_string() == "2<-3, 3<-4");
        CHECK_THROWS_AS(PlantedForest::from_edges(3, {{1, 2}, {2, 1}}), ForestError);
        CHECK_THROWS_AS(PlantedForest::from_edges(3, {{1, 2}, {1, 3}}), ForestError);
    }

    TEST_CASE("gathering roots")
    {
        CHECK(gather_roots(PlantedForest::from_edges(4, {})) == Hypertree::nuclear(4));
        // vertex 3 hangs below root 2; roots 1, 2, 4 share the fat edge
        CHECK(gather_roots(PlantedForest::from_edges(4, {{3, 2}})) == ht(4, {{1, 2, 4}, {2, 3}}));
        const auto f = PlantedForest::from_edges(6, {{1, 3}, {5, 4}});
        CHECK(gather_roots(f) == ht(6, {{2, 3, 4, 6}, {1, 3}, {4, 5}}));
    }

    TEST_CASE("essential counts")
    {
        CHECK(count_essential_by_definition(4, 1) == 8);
        CHECK(count_essential_by_definition(4, 2) == 16);
        CHECK(count_essential_by_definition(5, 2) == 75);
        for (int n = 2; n <= 5; ++n)
            for (int q = 0; q <= n - 2; ++q) {
                CHECK(count_essential_by_definition(n, q) == count_essential_by_gathering(n, q));
                Integer nq = 1;
                for (int k = 0; k < q; ++k)
                    nq *= n;
                CHECK(Integer(static_cast<unsigned long long>(count_essential_by_definition(n, q))) == binomial(n - 2, q) * nq);
            }
    }

    TEST_CASE("parsing and printing")
    {
        CHECK(parse_ring_element("a(2,1)^a(2,3)", 3) == RingElement::monomial({{2, 1}, {2, 3}}));
        CHECK(parse_ring_element("-3*a(1,2) + 2", 3) == a(1, 2) * Integer(-3) + RingElement::one() * Integer(2));
        CHECK(parse_ring_element("0", 3).is_zero());
        CHECK(a(2, 3).to_string() == "a(2,3)");
        CHECK(RingElement().to_string() == "0");
        CHECK_THROWS_AS(parse_ring_element("", 3), RingError);
        CHECK_THROWS_AS(parse_ring_element("a(1,2", 3), RingError);
        CHECK_THROWS_AS(parse_ring_element("a(1,1)", 3), RingError);
        CHECK_THROWS_AS(parse_ring_element("a(4,1)", 3), RingError);
    }

    TEST_CASE("monomials anticommute")
    {
        CHECK(RingElement::monomial({{1, 2}, {2, 3}}) == RingElement::monomial({{2, 3}, {1, 2}}) * Integer(-1));
        CHECK(RingElement::monomial({{1, 2}, {1, 2}}).is_zero());
    }

    TEST_CASE("normal forms")
    {
        CHECK(normal_form(RingElement::monomial({{1, 2}, {2, 1}}), 3).is_zero());
        CHECK(normal_form(RingElement::monomial({{2, 1}, {2, 3}}), 3).to_string() == "a(2,1)^a(1,3) + a(3,1)^a(2,3)");
        CHECK(normal_form(RingElement::monomial({{1, 2}, {2, 3}, {3, 1}}), 3).is_zero());
        CHECK(normal_form(a(1, 2), 3) == a(1, 2));

        NormalFormStats stats;
        normal_form(RingElement::monomial({{3, 1}, {3, 2}, {3, 4}}), 4, kDefaultRewriteBudget, &stats);
        CHECK(stats.rewrites > 0);
        CHECK_FALSE(stats.budget_exhausted);

        // a starved budget falls back to the oracle and still gives the right answer
        NormalFormStats starved;
        const auto x = RingElement::monomial({{3, 1}, {3, 2}, {3, 4}});
        CHECK(normal_form(x, 4, 1, &starved) == normal_form(x, 4));
        CHECK(starved.budget_exhausted);
    }

    TEST_CASE("relations of the cohomology ring")
    {
        for (int n = 3; n <= 4; ++n)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k) {
                        if (i == j || j == k || i == k)
                            continue;
                        CHECK(multiply(a(k, j), a(j, i), n) == multiply(a(k, j) - a(i, j), a(k, i), n));
                        CHECK(multiply(a(i, j), a(j, i), n).is_zero());
                    }
        // past degree n-1 everything vanishes
        CHECK(multiply(multiply(a(1, 2), a(2, 3), 3), a(3, 1), 3).is_zero());
        CHECK_FALSE(multiply(RingElement::monomial({{1, 2}, {3, 2}}), RingElement::monomial({{4, 2}}), 4).is_zero());
        CHECK(multiply(RingElement::monomial({{1, 2}, {3, 2}, {4, 2}}), a(2, 1), 4).is_zero());
    }

    TEST_CASE("forest monomials")
    {
        const auto f = PlantedForest::from_edges(4, {{2, 1}, {3, 1}});
        const auto m = forest_to_monomial(f);
        CHECK(monomial_to_forest(4, m) == f);
        const auto two_cycle = RingElement::monomial({{1, 2}, {2, 1}}).terms().begin()->first;
        CHECK_FALSE(monomial_to_forest(3, two_cycle).has_value());
        const auto repeated_head = RingElement::monomial({{1, 2}, {1, 3}}).terms().begin()->first;
        CHECK_FALSE(monomial_to_forest(3, repeated_head).has_value());
    }

    TEST_CASE("relation oracle agrees with rewriting")
    {
        for (int n = 2; n <= 4; ++n)
            for (int d = 0; d <= n; ++d) {
                RelationOracle oracle(n, d);
                CHECK(oracle.forests_form_basis());
                for (const auto& m : oracle.monomials()) {
                    RingElement x;
                    x.add(m, 1);
                    CHECK(normal_form(x, n) == oracle.reduce(x));
                }
            }
    }

    TEST_CASE("ranks, torsion and Euler characteristic")
    {
        CHECK(poincare_psigma(3) == std::vector<std::size_t>{1, 6, 9});
        CHECK(poincare_psigma(4) == std::vector<std::size_t>{1, 12, 48, 64});
        CHECK(euler_psigma(4) == -27);
        for (int d = 2; d <= 3; ++d) {
            RelationOracle oracle(4, d);
            CHECK(smith_normal_form(oracle.relation_matrix()).torsion().empty());
        }
    }

    TEST_CASE("Leray-Hirsch rank identity")
    {
        const auto rows4 = lh_rank_check(4, {1, 8, 16});
        REQUIRE(rows4.size() == 4);
        CHECK(rows4[0].lhs == 1);
        CHECK(rows4[0].rhs == 1);
        CHECK(rows4[2].lhs == 48);
        CHECK(rows4[2].rhs == 48);
        for (const auto& r : rows4)
            CHECK(r.holds());
        const auto rows5 = lh_rank_check(5, {1, 15, 75, 125});
        CHECK(rows5[3].lhs == 500);
        CHECK(rows5[3].holds());
        CHECK_FALSE(lh_rank_check(4, {1, 8, 15})[2].holds());
    }

    TEST_CASE("generators of H*(OPSigma_n)")
    {
        auto g3 = opsigma_generator_set(3);
        std::sort(g3.begin(), g3.end());
        CHECK(g3 == std::vector<std::pair<int, int>>{{2, 3}, {3, 1}, {3, 2}});
        CHECK(opsigma_generator_set(2).empty());
        CHECK(opsigma_generator_set(4).size() == 8);
        CHECK(ring_generators(3).size() == 6);
    }
}
