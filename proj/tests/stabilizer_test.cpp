#include "doctest.h"

#include "psigma/free_group.hpp"
#include "psigma/order_complex.hpp"
#include "psigma/reference.hpp"
#include "psigma/stabilizer.hpp"

#include <algorithm>

using namespace psigma;

namespace {

Hypertree ht(int n, std::vector<std::vector<int>> edges) { return validate_hypertree(n, edges); }

Generator g(std::initializer_list<int> I, int j) { return Generator{VertexSet(I), j}; }

const Hypertree rooted11() { return ht(11, {{1, 2, 3}, {1, 4, 5}, {2, 6, 7}, {4, 8, 9}, {5, 10, 11}}); }
const Hypertree tree6() { return ht(6, {{1, 2}, {1, 3}, {3, 5}, {4, 5}, {5, 6}}); }
// rank one and rank three hypertrees on [7] both fixed by a_{567,4}
const Hypertree fat7() { return ht(7, {{1, 2, 3, 4}, {4, 5, 6, 7}}); }
const Hypertree split7() { return ht(7, {{1, 2, 3, 4}, {4, 5}, {4, 6}, {6, 7}}); }

} // namespace

TEST_SUITE("stabilizer")
{
    TEST_CASE("one-two bases")
    {
        CHECK(one_two_basis(rooted11()) == GeneratorSet{g({4, 5, 8, 9, 10, 11}, 1), g({6, 7}, 2), g({8, 9}, 4), g({10, 11}, 5)});
        CHECK(one_two_basis(tree6()) == GeneratorSet{g({3, 4, 5, 6}, 1), g({4, 5, 6}, 3), g({4}, 5), g({6}, 5)});
        CHECK(one_two_basis(Hypertree::nuclear(5)).empty());
        CHECK(one_two_basis(fat7()) == GeneratorSet{g({5, 6, 7}, 4)});
        CHECK(one_two_basis(split7()) == GeneratorSet{g({5}, 4), g({6, 7}, 4), g({7}, 6)});
    }

    TEST_CASE("one-two generators never conjugate x1, nor x2 by x1")
    {
        CHECK(hat(1) == 2);
        CHECK(hat(5) == 1);
        CHECK(make_one_two(4, VertexSet{2, 4}, 3) == g({2, 4}, 3));
        CHECK(make_one_two(4, VertexSet{3}, 1) == g({3}, 1));
        CHECK_THROWS_AS(make_one_two(4, VertexSet{1, 2}, 3), StabilizerError);
        CHECK_THROWS_AS(make_one_two(4, VertexSet{2, 4}, 1), StabilizerError);
        CHECK_THROWS_AS(make_one_two(4, VertexSet{1, 3}, 3), StabilizerError);
        CHECK_THROWS_AS(make_one_two(4, VertexSet{2}, 5), StabilizerError);
        CHECK_THROWS_AS(make_one_two(4, VertexSet{}, 3), StabilizerError);
    }

    TEST_CASE("stabilizer membership")
    {
        CHECK(stabilizer_contains(split7(), g({5, 6, 7}, 4)));
        const auto B = one_two_basis(split7());
        CHECK(std::find(B.begin(), B.end(), g({5, 6, 7}, 4)) == B.end());
        CHECK_FALSE(stabilizer_contains(Hypertree::nuclear(4), g({2}, 3)));
        for (const auto& t : enumerate_hypertrees(5))
            for (const auto& b : one_two_basis(t))
                CHECK(stabilizer_contains(t, b));
    }

    TEST_CASE("coordinates in the basis")
    {
        CHECK(express_in_basis(tree6(), g({1, 2, 3}, 5)) == std::vector<int>{0, 0, -1, -1});
        CHECK(express_in_basis(split7(), g({5, 6, 7}, 4)) == std::vector<int>{1, 1, 0});
        const auto B = one_two_basis(rooted11());
        for (std::size_t k = 0; k < B.size(); ++k) {
            std::vector<int> unit(B.size(), 0);
            unit[k] = 1;
            CHECK(express_in_basis(rooted11(), B[k]) == unit);
        }
        CHECK_THROWS_AS(express_in_basis(Hypertree::nuclear(4), g({2}, 3)), StabilizerError);
    }

    TEST_CASE("word-level check of the coordinates: a_45 a_65 a_{123,5} is inner")
    {
        const auto product = compose({SymmetricAut::alpha(6, 4, 5), SymmetricAut::alpha(6, 6, 5), alpha_I_j(6, VertexSet{1, 2, 3}, 5)});
        CHECK(equal(product, SymmetricAut::conjugation(6, FreeWord::generator(5))));
    }

    TEST_CASE("cone points")
    {
        CHECK(cone_point(5, {g({3, 4, 5}, 2)}) == ht(5, {{1, 2}, {2, 3, 4, 5}}));
        CHECK(cone_point(5, {}) == Hypertree::nuclear(5));
        for (const auto& t : enumerate_hypertrees(5))
            CHECK(cone_point(5, one_two_basis(t)) == t);

        const HypertreePoset P(4);
        for (const auto& A : compatible_collections(P, 2)) {
            CHECK(one_two_basis(cone_point(4, A)) == A);
            CHECK(reference::brute_force_cone_point(P.elements(), A) == cone_point(4, A));
        }
        // a_{3,2} and a_{2,3} cannot share a basis: 2 and 3 would each have to be a leaf off the other
        CHECK_FALSE(is_compatible(4, normalize({g({3}, 2), g({2}, 3)})));
        CHECK_THROWS_AS(cone_point(4, normalize({g({3}, 2), g({2}, 3)})), StabilizerError);
    }

    TEST_CASE("essential collections")
    {
        CHECK(is_essential(7, {g({5}, 4), g({6, 7}, 4), g({7}, 6)}));
        CHECK_FALSE(is_essential(5, {g({3, 4, 5}, 2)}));
        for (const auto& t : enumerate_hypertrees(5)) {
            if (t.rank() == 3)
                CHECK(is_essential(5, one_two_basis(t)));
            CHECK(is_essential_hypertree(t) == reference::essential_by_conditions(t));
        }
    }

    TEST_CASE("core and peripheral hypertrees")
    {
        const GeneratorSet A{g({3, 4, 5}, 2)};
        const auto split = classify_support(5, A);
        CHECK(split.peripheral.size() == 10);
        CHECK(std::find(split.core.begin(), split.core.end(), cone_point(5, A)) != split.core.end());
        CHECK(std::find(split.peripheral.begin(), split.peripheral.end(), ht(5, {{1, 2}, {2, 3}, {2, 4, 5}})) != split.peripheral.end());
        for (const auto& t : split.peripheral) {
            CHECK(stabilizes(t, A));
            CHECK_FALSE(supports(t, A));
        }

        const auto none = classify_support(4, {});
        CHECK(none.core.size() == 29);
        CHECK(none.peripheral.empty());

        const HypertreePoset P(5);
        for (const auto& B : compatible_collections(P, 2))
            CHECK(is_essential(5, B) == classify_support(P, B).peripheral.empty());
    }

    TEST_CASE("the peripheral complex of a_{345,2} is a tree with 10 vertices")
    {
        const HypertreePoset P(5);
        boost::dynamic_bitset<> mask(P.size());
        for (const auto& t : classify_support(P, {g({3, 4, 5}, 2)}).peripheral)
            mask.set(*P.index_of(t));
        const auto K = order_complex(P, &mask);
        CHECK(K.dimension() == 1);
        CHECK(K.count(0) == 10);
        CHECK(K.count(1) == 9);
        CHECK(reduced_homology(K).trivial());
    }

    TEST_CASE("worrisome edges")
    {
        const auto w = worrisome_edges(rooted11());
        REQUIRE(w.size() == 4);
        CHECK(w[0].L == VertexSet{4, 5});
        CHECK(w[1].L == VertexSet{6, 7});
        CHECK(w[2].L == VertexSet{8, 9});
        CHECK(w[3].L == VertexSet{10, 11});
        CHECK(w[0].c == 1);
        CHECK(worrisome_edges(tree6()).empty());

        const auto cone = worrisome_edges(ht(5, {{1, 2}, {2, 3, 4, 5}}));
        REQUIRE(cone.size() == 1);
        CHECK(cone[0] == WorrisomeEdge{VertexSet{2, 3, 4, 5}, 2, VertexSet{3, 4, 5}});
    }

    TEST_CASE("splitting worrisome edges")
    {
        const auto split = split_edges(rooted11(), {{VertexSet{1, 4, 5}, {VertexSet{4}, VertexSet{5}}},
                                                        {VertexSet{2, 6, 7}, {VertexSet{6, 7}}},
                                                        {VertexSet{4, 8, 9}, {VertexSet{8, 9}}},
                                                        {VertexSet{5, 10, 11}, {VertexSet{10}, VertexSet{11}}}});
        CHECK(split == ht(11, {{1, 2, 3}, {1, 4}, {1, 5}, {2, 6, 7}, {4, 8, 9}, {5, 10}, {5, 11}}));
        CHECK(leq(rooted11(), split));

        const auto cone = ht(5, {{1, 2}, {2, 3, 4, 5}});
        CHECK(split_edge(cone, VertexSet{2, 3, 4, 5}, {VertexSet{3, 4, 5}}) == cone);
        const auto s = split_edge(cone, VertexSet{2, 3, 4, 5}, {VertexSet{3}, VertexSet{4, 5}});
        CHECK(s == ht(5, {{1, 2}, {2, 3}, {2, 4, 5}}));
        CHECK(leq(cone, s));
        CHECK_THROWS_AS(split_edge(cone, VertexSet{2, 3, 4, 5}, {VertexSet{3}, VertexSet{4}}), StabilizerError);
        CHECK_THROWS_AS(split_edge(cone, VertexSet{1, 2}, {VertexSet{2}}), StabilizerError);
    }
}
