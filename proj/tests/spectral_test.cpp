#include "doctest.h"

#include "psigma/spectral.hpp"

#include <map>

using namespace psigma;

namespace {

Hypertree ht(int n, std::vector<std::vector<int>> edges) { return validate_hypertree(n, edges); }

std::map<std::pair<int, int>, std::size_t> nonzero(const E1Page& page)
{
    std::map<std::pair<int, int>, std::size_t> out;
    for (int p = 0; p <= page.max_p(); ++p)
        for (int q = 0; q <= page.max_q(); ++q)
            if (auto r = page.rank(p, q))
                out[{p, q}] = r;
    return out;
}

} // namespace

TEST_SUITE("spectral")
{
    TEST_CASE("E1 pages")
    {
        CHECK(nonzero(E1Page(2)) == std::map<std::pair<int, int>, std::size_t>{{{0, 0}, 1}});
        CHECK(nonzero(E1Page(3)) == std::map<std::pair<int, int>, std::size_t>{{{0, 0}, 4}, {{0, 1}, 3}, {{1, 0}, 3}});
        CHECK(nonzero(E1Page(4))
            == std::map<std::pair<int, int>, std::size_t>{
                {{0, 0}, 29}, {{0, 1}, 44}, {{0, 2}, 16}, {{1, 0}, 64}, {{1, 1}, 36}, {{2, 0}, 36}});
        const E1Page page5(5);
        CHECK(page5.rank(0, 0) == 311);
        CHECK(page5.rank(3, 0) == 990);
        CHECK(page5.rank(0, 3) == 125);
        CHECK_THROWS_AS(E1Page(kMaxSpectralN + 1), SpectralError);
    }

    TEST_CASE("E1 generators are indexed consistently")
    {
        const E1Page page(4);
        const auto gens = page.generators(0, 1);
        REQUIRE(gens.size() == page.rank(0, 1));
        CHECK(page.offset(0, 1, gens.back().chain) <= gens.size() - 1);
        CHECK_FALSE(page.describe(0, 1, gens.front()).empty());
    }

    TEST_CASE("restriction matrices")
    {
        const auto star = ht(4, {{1, 2}, {2, 3}, {2, 4}});
        const auto path = ht(4, {{1, 2}, {2, 3}, {3, 4}});
        const auto low = ht(4, {{1, 2}, {2, 3, 4}});
        CHECK(restriction_matrix(star, star) == IntegerMatrix::identity(2));
        CHECK(restriction_matrix(star, low).to_dense() == std::vector<std::vector<Integer>>{{1, 1}});
        CHECK(restriction_matrix(path, low).to_dense() == std::vector<std::vector<Integer>>{{1, 0}});
        CHECK_THROWS_AS(restriction_matrix(star, path), SpectralError);
    }

    TEST_CASE("exterior powers")
    {
        const auto m = IntegerMatrix::from_dense(std::vector<std::vector<long long>>{{1, 2}, {3, 4}});
        CHECK(exterior_power(m, 2).to_dense() == std::vector<std::vector<Integer>>{{-2}});
        CHECK(exterior_power(m, 0) == IntegerMatrix::identity(1));
        CHECK(exterior_power(m, 1) == m);
        CHECK(exterior_power(m, 3).rows() == 0);
    }

    TEST_CASE("d1 squares to zero and is independent of thread count")
    {
        for (int n = 3; n <= 5; ++n) {
            const E1Page page(n);
            for (int q = 0; q <= page.max_q(); ++q)
                for (int p = 0; p + 1 <= page.max_p(); ++p)
                    CHECK((d1_matrix(page, p + 1, q) * d1_matrix(page, p, q)).is_zero());
        }
        const E1Page page(5);
        CHECK(d1_matrix(page, 1, 1, 1) == d1_matrix(page, 1, 1, 3));
        const auto empty = d1_matrix(E1Page(4), 0, 3);
        CHECK(empty.rows() == 0);
        CHECK(empty.cols() == 0);
    }

    TEST_CASE("E2 collapses onto the first column")
    {
        CHECK(e2_page(3).column() == std::vector<std::size_t>{1, 3});
        CHECK(e2_page(4).column() == std::vector<std::size_t>{1, 8, 16});
        const auto p5 = e2_page(5);
        CHECK(p5.concentrated_in_first_column());
        CHECK(p5.column() == std::vector<std::size_t>{1, 15, 75, 125});
        CHECK(p5.at(1, 0).rank == 0);
        CHECK(p5.at(40, 40).rank == 0);
    }

    TEST_CASE("Poincare series of OPSigma_n")
    {
        CHECK(poincare_opsigma(2) == std::vector<std::size_t>{1});
        CHECK(poincare_opsigma(4) == std::vector<std::size_t>{1, 8, 16});
        long long alt = 0;
        int sign = 1;
        for (auto r : poincare_opsigma(5)) {
            alt += sign * static_cast<long long>(r);
            sign = -sign;
        }
        CHECK(alt == -64);
    }

    TEST_CASE("binomial helpers")
    {
        CHECK(binomial(5, 2) == 10);
        CHECK(binomial(3, 4) == 0);
        CHECK(binomial_series(4, 2) == std::vector<Integer>{1, 8, 16});
    }

    TEST_CASE("d1 in the label basis coarsens labels triangularly")
    {
        const E1Page page(4);
        CHECK(d1_label_diagnostic(page, 0, 1) != LabelBehaviour::Neither);
        CHECK_FALSE(to_string(d1_label_diagnostic(page, 0, 1)).empty());
    }
}
