#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "pedpod/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "pedpod");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = pedpod::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("count as csv")
{
    auto r = run({"count", "--class", "ped", "--to", "5", "--backend", "dp", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,count\n0,1\n1,1\n2,2\n3,3\n4,4\n5,6\n");
}

TEST_CASE("count as json")
{
    auto r = run({"count", "--class", "pod", "--to", "5", "--backend", "series", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["class"] == "pod");
    CHECK(j["backend"] == "series");
    CHECK(j["n_max"] == 5);
    CHECK(j["counts"] == nlohmann::json::array({"1", "1", "1", "2", "3", "4"}));
}

TEST_CASE("list")
{
    auto r = run({"list", "--class", "d1", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "(3,1)\n(1,1,1,1)\n");

    r = run({"list", "--class", "d1", "--n", "4", "--format", "json"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == 2);
    CHECK(j["members"][0] == nlohmann::json::array({3, 1}));
}

TEST_CASE("apply")
{
    auto r = run({"apply", "--bijection", "thm1.add", "--partition", "(3,3,2)"});
    CHECK(r.code == 0);
    CHECK(r.out == "(4,3,2)\n");

    r = run({"apply", "--bijection", "thm1.add", "--partition", "( 4, 3 ,2 )", "--inverse"});
    CHECK(r.out == "(3,3,2)\n");

    r = run({"apply", "--bijection", "thm2.total", "--partition", "(3,2)"});
    CHECK(r.out == "D2(n-3) (1,1)\n");

    r = run({"apply", "--bijection", "thm2.total", "--partition", "(1,1)", "--inverse", "--tag", "minus3"});
    CHECK(r.out == "(3,2)\n");

    r = run({"apply", "--bijection", "thm4.add", "--partition", "(4,3)", "--format", "json"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["reconstructed"] == true);
    CHECK(j["output"] == nlohmann::json::array({5, 3}));
}

TEST_CASE("verify and audit exit codes")
{
    CHECK(run({"verify", "--identity", "T1", "--to", "35", "--backend", "enum"}).code == 0);
    CHECK(run({"verify", "--identity", "all", "--to", "100"}).code == 0);
    CHECK(run({"audit", "--bijection", "all", "--to", "12"}).code == 0);
    CHECK(run({"audit", "--structure", "--to", "12"}).code == 0);
    CHECK(run({"crosscheck", "--to", "40"}).code == 0);
}

TEST_CASE("audit report json")
{
    auto r = run({"audit", "--bijection", "thm6.sub", "--from", "2", "--to", "6", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    for (const char *key : {"subject", "n_range", "backend", "reconstructed", "overall_pass", "records",
                            "counterexamples", "counterexamples_dropped"})
        CHECK_MESSAGE(j.contains(key), key);
    CHECK(j["reconstructed"] == true);
    CHECK(j["overall_pass"] == true);
    CHECK(j["records"].size() == 5);
}

TEST_CASE("table output ends with the verdict")
{
    auto r = run({"verify", "--identity", "T2", "--to", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.ends_with("overall: PASS\n"));
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({"count", "--class", "zz", "--to", "3"}).code == 2);
    CHECK(run({"count", "--class", "d1", "--to", "3", "--backend", "series"}).code == 2);
    CHECK(run({"count", "--class", "ped", "--to", "-1"}).code == 2);
    CHECK(run({"apply", "--bijection", "thm1.add", "--partition", "(2,3)"}).code == 2);
    CHECK(run({"apply", "--bijection", "thm1.add", "--partition", "(4,1)"}).code == 2);
    CHECK(run({"apply", "--bijection", "nope", "--partition", "(1)"}).code == 2);
    CHECK(run({"verify", "--identity", "T9", "--to", "3"}).code == 2);
    CHECK(run({"verify", "--identity", "T1", "--from", "5", "--to", "3"}).code == 2);
    CHECK(run({"audit", "--bijection", "thm1.add", "--to", "500"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    auto r = run({"list", "--class", "ped", "--n", "x"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("output is deterministic")
{
    const std::vector<std::string> count{"count", "--class", "all", "--to", "200"};
    CHECK(run(count).out == run(count).out);
    const std::vector<std::string> list{"list", "--class", "o2", "--n", "25", "--format", "json"};
    CHECK(run(list).out == run(list).out);
    const std::vector<std::string> audit{"audit", "--bijection", "all", "--to", "15", "--format", "json"};
    CHECK(run(audit).out == run(audit).out);
}
