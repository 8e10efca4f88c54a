#include "doctest.h"

#include "psigma/io.hpp"
#include "psigma/verify.hpp"

using namespace psigma;

TEST_SUITE("io")
{
    TEST_CASE("hypertree JSON round trip")
    {
        for (const auto& t : enumerate_hypertrees(4))
            CHECK(hypertree_from_json(to_json(t)) == t);
        CHECK(to_json(Hypertree::nuclear(3)).dump() == R"({"n":3,"edges":[[1,2,3]]})");
        CHECK_THROWS_AS(hypertree_from_json(Json::parse(R"({"n":3})")), std::invalid_argument);
        CHECK_THROWS_AS(hypertree_from_json(Json::parse(R"({"n":3,"edges":[[1,2],[2,3],[1,3]]})")), HypertreeError);
    }

    TEST_CASE("generator and matrix JSON round trips")
    {
        const Generator g{VertexSet{3, 4}, 2};
        CHECK(generator_from_json(to_json(g)) == g);
        const auto m = IntegerMatrix::from_dense(std::vector<std::vector<Integer>>{{0, Integer(1) << 70}, {-3, 0}});
        CHECK(matrix_from_json(to_json(m)) == m);
        CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":1})")), std::invalid_argument);
    }

    TEST_CASE("ring elements carry text and terms")
    {
        const auto j = to_json(normal_form(parse_ring_element("a(2,1)^a(2,3)", 3), 3));
        CHECK(j["text"] == "a(2,1)^a(1,3) + a(3,1)^a(2,3)");
        CHECK(j["terms"].size() == 2);
        CHECK(j["terms"][0]["coefficient"] == "1");
    }

    TEST_CASE("page tables")
    {
        const E1Page e1(4);
        const auto j = e1_to_json(e1);
        CHECK(j["entries"].size() == 6);
        CHECK(j["entries"][0] == Json::parse(R"({"p":0,"q":0,"rank":29,"torsion":[]})"));
        const auto grid = e1_grid(e1);
        CHECK(grid.find("q=2 |  16   0   0") != std::string::npos);
        CHECK(grid.find("q=0 |  29  64  36") != std::string::npos);

        const auto e2 = compute_e2(e1);
        CHECK(to_json(e2)["entries"].size() == 3);
        CHECK(e2_grid(e2).find("q=1 |   8   0   0") != std::string::npos);
    }
}

TEST_SUITE("verify")
{
    TEST_CASE("the suite passes for n = 2..4")
    {
        VerifyOptions opt;
        opt.ns = {2, 3, 4};
        const auto results = run_verification(opt);
        CHECK(results.size() > 50);
        for (const auto& r : results) {
            INFO(r.family << "/" << r.name << " n=" << r.n << ": " << r.detail);
            CHECK(r.passed);
            CHECK_FALSE(r.claim.empty());
        }
    }

    TEST_CASE("reports are deterministic across thread counts")
    {
        VerifyOptions opt;
        opt.ns = {3, 4};
        const auto one = verification_report(run_verification(opt), false).dump();
        opt.threads = 3;
        CHECK(verification_report(run_verification(opt), false).dump() == one);
    }

    TEST_CASE("family filter")
    {
        VerifyOptions opt;
        opt.ns = {4};
        opt.only = {"poincare"};
        const auto r = run_verification(opt);
        REQUIRE(r.size() == 1);
        CHECK(r[0].detail == "[1,8,16] vs (1+4z)^2");
        opt.only = {"nonsense"};
        CHECK_THROWS_AS(run_verification(opt), std::invalid_argument);
        CHECK(verify_families().size() == 12);
    }
}
