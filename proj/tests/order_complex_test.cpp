#include "doctest.h"

#include "psigma/order_complex.hpp"
#include "psigma/smith.hpp"

using namespace psigma;

TEST_SUITE("order_complex")
{
    TEST_CASE("Smith normal form")
    {
        CHECK(smith_normal_form(IntegerMatrix::identity(3)).invariant_factors == std::vector<Integer>{1, 1, 1});
        const auto m = IntegerMatrix::from_dense(std::vector<std::vector<long long>>{{2, 4}, {6, 8}});
        CHECK(smith_normal_form(m).invariant_factors == std::vector<Integer>{2, 4});
        CHECK(smith_normal_form(m).torsion() == std::vector<Integer>{2, 4});
        const auto zero = smith_normal_form(IntegerMatrix(3, 4));
        CHECK(zero.invariant_factors.empty());
        CHECK(zero.rank() == 0);
        CHECK(smith_normal_form(IntegerMatrix(0, 0)).rank() == 0);
    }

    TEST_CASE("Smith decomposition certifies U M V = D")
    {
        const auto m = IntegerMatrix::from_dense(std::vector<std::vector<long long>>{{4, 6, 2}, {2, 0, 8}, {6, 6, 10}, {0, 2, -4}});
        const auto d = smith_decomposition(m);
        CHECK(dense_multiply(dense_multiply(d.U, m.to_dense()), d.V) == d.D);
        for (std::size_t k = 0; k + 1 < d.invariant_factors.size(); ++k)
            CHECK(d.invariant_factors[k + 1] % d.invariant_factors[k] == 0);
        CHECK(d.invariant_factors == smith_normal_form(m).invariant_factors);
    }

    TEST_CASE("sparse path survives entries beyond 64 bits")
    {
        const Integer big = Integer(1) << 80;
        const auto m = IntegerMatrix::from_dense(std::vector<std::vector<Integer>>{{big, big + 1}, {big - 1, big}});
        // det = big^2 - (big^2 - 1) = 1
        CHECK(smith_normal_form(m).invariant_factors == std::vector<Integer>{1, 1});
    }

    TEST_CASE("chains of HT_n")
    {
        const HypertreePoset P4(4);
        const auto c1 = enumerate_chains(P4, 1);
        CHECK(c1.size() == 64);
        std::size_t from_minimum = 0;
        for (const auto& c : c1)
            from_minimum += c.front() == 0;
        CHECK(from_minimum == 28);
        CHECK(enumerate_chains(P4, 2).size() == 36);
        CHECK(enumerate_chains(P4, 3).empty());

        const HypertreePoset P2(2);
        CHECK(enumerate_chains(P2, 0).size() == 1);
        CHECK(enumerate_chains(P2, 1).empty());

        const auto s = to_simplex(P4, c1.front());
        CHECK(s.dimension() == 1);
        CHECK(leq(s.min(), s.vertices.back()));
    }

    TEST_CASE("simplicial complexes are checked for closure")
    {
        CHECK_THROWS_AS(SimplicialComplex::from_simplices({{0, 1}}), ComplexError);
        const auto K = SimplicialComplex::from_facets({{0, 1, 2}});
        CHECK(K.count(0) == 3);
        CHECK(K.count(1) == 3);
        CHECK(K.count(2) == 1);
        CHECK(K.index_of({0, 2}).has_value());
    }

    TEST_CASE("boundary matrices compose to zero")
    {
        const auto K = SimplicialComplex::from_facets({{0, 1, 2, 3}, {2, 3, 4}});
        for (int k = 1; k <= K.dimension(); ++k)
            CHECK((boundary_matrix(K, k - 1, true) * boundary_matrix(K, k, true)).is_zero());
        const auto delta = coboundary_matrices(K);
        for (std::size_t k = 0; k + 1 < delta.size(); ++k)
            CHECK((delta[k + 1] * delta[k]).is_zero());
    }

    TEST_CASE("reduced (co)homology of small complexes")
    {
        const auto point = SimplicialComplex::from_facets({{0}});
        CHECK(reduced_cohomology(point).trivial());
        for (const auto& d : coboundary_matrices(point))
            CHECK(d.is_zero());

        const auto circle = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}});
        CHECK(reduced_cohomology(circle).degree(1).rank == 1);
        CHECK(reduced_cohomology(circle).degree(0).trivial());
        CHECK(reduced_homology(circle).degree(1).rank == 1);

        const auto two_points = SimplicialComplex::from_facets({{0}, {1}});
        CHECK(reduced_homology(two_points).degree(0).rank == 1);

        // projective plane: H_1 = Z/2, H^2 = Z/2
        const auto rp2 = SimplicialComplex::from_facets(
            {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
        CHECK(reduced_homology(rp2).degree(1).torsion == std::vector<Integer>{2});
        CHECK(reduced_cohomology(rp2).degree(2).torsion == std::vector<Integer>{2});
    }

    TEST_CASE("order complexes of HT_n")
    {
        for (int n = 3; n <= 4; ++n)
            CHECK(reduced_cohomology(order_complex(HypertreePoset(n))).trivial());

        const HypertreePoset P(4);
        boost::dynamic_bitset<> upper(P.size());
        upper.set();
        upper.reset(0);
        const auto K = order_complex(P, &upper);
        CHECK(K.count(0) == 28);
        CHECK(K.count(1) == 36);
        const auto h = reduced_homology(K);
        CHECK(h.degree(0).trivial());
        CHECK(h.degree(1).rank == 9);
        CHECK(h.degree(1).torsion.empty());
    }
}
