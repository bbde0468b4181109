#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "apostol/cli.hpp"
#include "apostol/family.hpp"

using namespace apostol;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen prints Bernoulli polynomials as csv") {
    const auto r = run({"gen", "--k", "1", "--m", "1", "--r", "1", "--alphas", "1", "--log-a", "0", "--log-b", "1",
                        "--log-c", "1", "--order", "2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "0,1\n1,-1/2,1\n2,1/6,-1,1\n");
}

TEST_CASE("gen numbers") {
    const auto r = run({"gen", "--order", "2", "--numbers", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,-1/2,1/6\n");
}

TEST_CASE("gen evaluates at a point") {
    const auto r = run({"gen", "--order", "2", "--at", "1/2", "--format", "csv"});
    CHECK(r.out == "1,0,-1/12\n");
}

TEST_CASE("gen reports poles and bad flags") {
    const auto pole = run({"gen", "--k", "0", "--m", "1", "--alphas", "1"});
    CHECK(pole.code == 2);
    CHECK(pole.err.find("pole of order 1") != std::string::npos);
    CHECK(run({"gen", "--bogus"}).code == 64);
    CHECK(run({"gen", "--alphas", "1/0"}).code == 64);
    CHECK(run({"gen", "--m", "0"}).code == 64);
    CHECK(run({"gen", "--r", "2", "--alphas", "1,2,3"}).code == 64);
    CHECK(run({"gen", "--format", "xml"}).code == 64);
    CHECK(run({}).code == 64);
    CHECK(run({"gen", "--log-a", "1", "--log-b", "1", "--alphas", "1"}).code == 2);
}

TEST_CASE("negative rationals are accepted as values") {
    const auto r = run({"gen", "--k", "0", "--alphas", "-1", "--order", "1", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "0,-1\n1,1/2,-1\n");
}

TEST_CASE("json polynomials round trip exactly") {
    const auto r = run({"gen", "--k", "2", "--m", "2", "--alphas", "3/7,-2", "--log-a", "1/3", "--log-b", "-5/4",
                        "--log-c", "9/2", "--order", "6", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    FamilyParams p;
    p.k = 2;
    p.m = 2;
    p.alphas = {Rational(3, 7), Rational(-2)};
    p.log_a = Rational(1, 3);
    p.log_b = Rational(-5, 4);
    p.log_c = Rational(9, 2);
    const auto expect = family_polynomials(p, 6).polys;
    REQUIRE(doc["polynomials"].size() == expect.size());
    for (std::size_t n = 0; n < expect.size(); ++n) CHECK(poly_from_json(doc["polynomials"][n]) == expect[n]);
    CHECK(doc["params"]["alphas"][0] == "3/7");
    CHECK(doc["order"] == 6);
}

TEST_CASE("basis triangles and coefficients") {
    const auto s = run({"basis", "--family", "stirling2", "--n", "4", "--format", "csv"});
    CHECK(s.code == 0);
    CHECK(s.out.find("4,0,1,7,6,1\n") != std::string::npos);
    const auto h = run({"basis", "--family", "hermite", "--n", "2", "--format", "csv"});
    CHECK(h.out.find("2,-2,0,4\n") != std::string::npos);
    CHECK(run({"basis", "--family", "gen-stirling2", "--n", "3", "--nodes", "1,2"}).code == 64);
    CHECK(run({"basis", "--family", "gen-stirling1", "--n", "2", "--nodes", "1,2"}).code == 0);
    CHECK(run({"basis", "--family", "lah", "--n", "3", "--alphas", "2", "--betas", "1,2,3"}).code == 0);
    CHECK(run({"basis", "--family", "jacobi", "--alpha", "-1", "--beta", "-1", "--n", "3"}).code == 2);
    CHECK(run({"basis", "--family", "chebyshev"}).code == 64);
}

TEST_CASE("bbh values") {
    const auto r = run({"bbh", "--x", "1", "--a", "1", "--b", "2", "--k", "1", "--m", "1", "--order", "2", "--format",
                        "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "0,1/2,3/2\n");
    CHECK(run({"bbh", "--x", "1", "--a", "-1"}).code == 2);
    CHECK(run({"bbh", "--factorial-mode", "other"}).code == 64);
    const auto mk = run({"bbh", "--k", "2", "--m", "2", "--order", "4", "--factorial-mode", "mk-fact", "--format",
                         "csv"});
    const auto mt = run({"bbh", "--k", "2", "--m", "2", "--order", "4", "--factorial-mode", "m-times-kfact",
                         "--format", "csv"});
    CHECK(mk.out != mt.out);
}

TEST_CASE("verify") {
    const auto empty = run({"verify", "--samples", "0", "--report", "json"});
    CHECK(empty.code == 0);
    CHECK(nlohmann::ordered_json::parse(empty.out)["reports"].empty());

    const auto t1 = run({"verify", "--suite", "table1", "--samples", "1", "--report", "json"});
    CHECK(t1.code == 0);
    const auto doc = nlohmann::ordered_json::parse(t1.out);
    bool row13 = false;
    for (const auto& rep : doc["reports"]) {
        CHECK(rep.contains("equation"));
        CHECK(rep.contains("residual"));
        if (rep["id"] == "TABLE1_ROW_13") {
            row13 = true;
            bool printed = false;
            for (const auto& n : rep["notes"]) printed |= n.get<std::string>().find("as printed") != std::string::npos;
            CHECK(printed);
        }
    }
    CHECK(row13);
    CHECK(run({"verify", "--suite", "nope"}).code == 64);
}

TEST_CASE("verify output is byte-identical across runs and worker counts") {
    const auto a = run({"verify", "--suite", "all", "--seed", "7", "--report", "json"});
    const auto b = run({"verify", "--suite", "all", "--seed", "7", "--report", "json"});
    const auto c = run({"verify", "--suite", "all", "--seed", "7", "--report", "json", "--jobs", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}
