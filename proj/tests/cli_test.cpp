#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run psigma(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + (env.empty() ? "" : " ") + PSIGMA_EXE + std::string(" ") + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t k = std::fread(buf.data(), 1, buf.size(), p))
        out.append(buf.data(), k);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("enumerate")
    {
        auto r = psigma("enumerate --n 4 --format json");
        REQUIRE(r.code == 0);
        CHECK(json_of(r)["histogram"] == nlohmann::json::parse(R"({"0":1,"1":12,"2":16})"));
        CHECK(json_of(r)["hypertrees"].size() == 29);

        r = psigma("enumerate --n 2 --format json --summary");
        CHECK(json_of(r)["histogram"] == nlohmann::json::parse(R"({"0":1})"));

        r = psigma("enumerate --n 5 --format json --summary");
        CHECK(json_of(r)["total"] == 311);

        CHECK(psigma("enumerate --n 6 --summary").code == 2);
        CHECK(psigma("enumerate --n 6 --summary --allow-large").code == 0);
        CHECK(psigma("enumerate --n 6 --summary", "PSIGMA_MAX_N=6").code == 0);
        CHECK(psigma("enumerate --n 1").code == 1);
    }

    TEST_CASE("pages")
    {
        auto r = psigma("e1 --n 4");
        REQUIRE(r.code == 0);
        CHECK(r.out
            == "q=2 |  16   0   0\n"
               "q=1 |  44  36   0\n"
               "q=0 |  29  64  36\n"
               "     ------------\n"
               "      p=0 p=1 p=2\n");

        r = psigma("e2 --n 4 --format json");
        REQUIRE(r.code == 0);
        CHECK(json_of(r)["column"] == nlohmann::json::array({1, 8, 16}));
        r = psigma("e2 --n 3 --format json");
        CHECK(json_of(r)["column"] == nlohmann::json::array({1, 3}));

        r = psigma("e1 --n 3 --format csv");
        CHECK(r.out.rfind("p,q,rank\n0,0,4\n", 0) == 0);
    }

    TEST_CASE("ring")
    {
        CHECK(psigma("ring --n 3 \"a(1,2)^a(2,1)\"").out == "0\n");
        CHECK(psigma("ring --n 3 \"a(2,1)^a(2,3)\"").out == "a(2,1)^a(1,3) + a(3,1)^a(2,3)\n");
        CHECK(psigma("ring --n 3 \"\"").code == 4);
        CHECK(psigma("ring --n 3 \"a(4,1)\"").code == 4);
        CHECK(psigma("ring --n 3").code == 4);
        const auto j = json_of(psigma("ring --n 3 --format json \"a(2,1)^a(2,3)\""));
        CHECK(j["terms"].size() == 2);
    }

    TEST_CASE("verify")
    {
        auto r = psigma("verify --n 2..4 --format json --no-timing");
        CHECK(r.code == 0);
        CHECK(json_of(r)["passed"] == true);

        r = psigma("verify --n 4 --only poincare");
        CHECK(r.code == 0);
        CHECK(r.out.find("[1,8,16] vs (1+4z)^2") != std::string::npos);
        CHECK(r.out.find("PASS poincare") != std::string::npos);

        CHECK(psigma("verify --n 7 --max-n 6").code == 2);
        CHECK(psigma("verify --n 7", "PSIGMA_MAX_N=6").code == 2);
        CHECK(psigma("verify --n 3 --only bogus").code == 1);
    }

    TEST_CASE("output is independent of the thread count")
    {
        const auto a = psigma("verify --n 3..4 --format json --no-timing --threads 1");
        const auto b = psigma("verify --n 3..4 --format json --no-timing --threads 4");
        CHECK(a.out == b.out);
        CHECK(psigma("e2 --n 4 --threads 1").out == psigma("e2 --n 4", "PSIGMA_THREADS=3").out);
    }

    TEST_CASE("poset export")
    {
        const auto r = psigma("poset --n 4 --drop-minimum");
        REQUIRE(r.code == 0);
        std::size_t nodes = 0;
        std::size_t edges = 0;
        for (std::size_t at = 0; (at = r.out.find("label=", at)) != std::string::npos; ++at)
            ++nodes;
        for (std::size_t at = 0; (at = r.out.find(" -- ", at)) != std::string::npos; ++at)
            ++edges;
        CHECK(nodes == 28);
        CHECK(edges == 36);
        CHECK(r.out.rfind("graph HT4 {", 0) == 0);
        CHECK(json_of(psigma("poset --n 3 --format json"))["edges"].size() == 3);
    }

    TEST_CASE("counts and apply")
    {
        const auto j = json_of(psigma("counts --n 4 --format json"));
        CHECK(j["hypertrees_by_rank"] == nlohmann::json::array({1, 12, 16}));
        CHECK(j["essential_by_rank"] == nlohmann::json::array({1, 8, 16}));
        CHECK(j["psigma_ranks"] == nlohmann::json::array({1, 12, 48, 64}));
        CHECK(psigma("apply --n 3 --alpha 1,2 x1").out == "x2 x1 x2^-1\n");
        CHECK(psigma("apply --n 3 --alpha 1,2 --alpha 1,2,-1 \"x1 x3\"").out == "x1 x3\n");
        CHECK(psigma("apply --n 3 --alpha 1,1 x1").code == 4);
    }

    TEST_CASE("usage errors")
    {
        CHECK(psigma("").code != 0);
        CHECK(psigma("e1").code != 0);
        CHECK(psigma("e1 --n 4 --format dot").code == 1);
    }
}
