#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "rcg/cli.hpp"
#include "rcg/error.hpp"
#include "rcg/json_io.hpp"
#include "rcg/perm.hpp"
#include "rcg/poly.hpp"
#include "rcg/rcgraph.hpp"
#include "rcg/tableau.hpp"

using namespace rcg;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

// trace permutation of the three-crossing graph used throughout: n=2,
// (2,1,0,-1,-2) -> (2,-2,1,0,-1)
const std::string kWitnessPerm =
    R"({"n":2,"images":{"2":2,"1":-2,"0":1,"-1":0,"-2":-1}})";
const std::string kWitnessGraph =
    R"({"n":2,"crossings":[[2,1],[1,1],[-1,2]]})";

const std::string kInsertStart =
    R"({"n":4,"crossings":[[4,1],[4,2],[3,2],[2,2],[1,4]]})";
const std::string kInsertResult =
    R"({"n":4,"crossings":[[4,1],[3,1],[4,2],[3,2],[2,2],[3,4]]})";

}  // namespace

TEST_CASE("help and empty invocations succeed") {
    const CliRun help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("Subcommands") != std::string::npos);
    const CliRun bare = run({});
    CHECK(bare.code == 0);
    CHECK(bare.out.find("enumerate") != std::string::npos);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"top"}).code == 2);  // missing required --perm
}

TEST_CASE("enumerate lists the full fiber of a permutation") {
    const CliRun res = run({"enumerate", "--perm", kWitnessPerm});
    REQUIRE(res.code == 0);
    const Json j = Json::parse(res.out);
    CHECK(j.at("count").get<int>() == 4);
    REQUIRE(j.at("items").size() == 4);
    bool found = false;
    for (const Json& item : j.at("items")) {
        if (item == Json::parse(kWitnessGraph)) found = true;
    }
    CHECK(found);
}

TEST_CASE("enumerate lists tableaux of a shape") {
    const CliRun res = run({"enumerate", "--partition", "[1]", "--n", "3"});
    REQUIRE(res.code == 0);
    const Json j = Json::parse(res.out);
    CHECK(j.at("count").get<int>() == 3);
    CHECK(j.at("items")[0] == Json::parse(R"({"n":3,"rows":[[1]]})"));
}

TEST_CASE("enumerate argument validation") {
    CHECK(run({"enumerate"}).code == 2);
    CHECK(run({"enumerate", "--perm", kWitnessPerm, "--partition", "[1]"})
              .code == 2);
    CHECK(run({"enumerate", "--partition", "[1]"}).code == 2);  // needs --n
    const CliRun bad = run({"enumerate", "--perm", "oops"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("input error") != std::string::npos);
}

TEST_CASE("top returns the left-justified graph") {
    const CliRun res = run({"top", "--perm", kWitnessPerm});
    REQUIRE(res.code == 0);
    const RcGraph top = rcgraph_from_json(Json::parse(res.out));
    CHECK(is_left_justified(top));
    CHECK(trace(top) == permutation_from_json(Json::parse(kWitnessPerm)));
}

TEST_CASE("insert reproduces the reference single-letter example") {
    const CliRun res = run({"insert", "--rcgraph", kInsertStart, "--word", "[1]"});
    REQUIRE(res.code == 0);
    const Json j = Json::parse(res.out);
    CHECK(j.at("result") == Json::parse(kInsertResult));
    REQUIRE(j.at("traces").size() == 1);
    const Json& tr = j.at("traces")[0];
    CHECK(tr.at("final_c").get<int>() == 3);
    CHECK(tr.at("final_d").get<int>() == 0);
    REQUIRE(tr.at("steps").size() == 2);
    CHECK(tr.at("steps")[0].at("removed").is_null());
    CHECK(tr.at("steps")[0].at("inserted") == Json::parse("[3,1]"));
    CHECK(tr.at("steps")[1].at("removed") == Json::parse("[1,4]"));
    CHECK(tr.at("steps")[1].at("inserted") == Json::parse("[3,4]"));
}

TEST_CASE("insert with an empty word echoes the input") {
    const CliRun res = run({"insert", "--rcgraph", kInsertStart, "--word", "[]"});
    REQUIRE(res.code == 0);
    const Json j = Json::parse(res.out);
    CHECK(j.at("result") == Json::parse(kInsertStart));
    CHECK(j.at("traces").empty());
}

TEST_CASE("insert rejects out-of-range letters") {
    CHECK(run({"insert", "--rcgraph", kInsertStart, "--word", "[5]"}).code == 2);
    CHECK(run({"insert", "--rcgraph", kInsertStart, "--word", "[0]"}).code == 2);
    CHECK(run({"insert", "--rcgraph", kInsertStart, "--word", "[1.5]"}).code ==
          2);
}

TEST_CASE("inverse-insert undoes the reference insertion") {
    const CliRun res =
        run({"inverse-insert", "--rcgraph", kInsertResult, "--c", "3", "--d", "0"});
    REQUIRE(res.code == 0);
    const Json j = Json::parse(res.out);
    CHECK(j.at("source") == Json::parse(kInsertStart));
    CHECK(j.at("row").get<int>() == 1);
}

TEST_CASE("inverse-insert rejects label pairs that never cross") {
    const CliRun res =
        run({"inverse-insert", "--rcgraph", kInsertResult, "--c", "4", "--d", "0"});
    CHECK(res.code == 2);
}

TEST_CASE("word reports reading word and trace") {
    const CliRun res = run({"word", "--rcgraph", kWitnessGraph});
    REQUIRE(res.code == 0);
    const Json j = Json::parse(res.out);
    CHECK(j.at("word") == Json::parse("[-2,-1,0]"));
    CHECK(permutation_from_json(j.at("trace")) ==
          permutation_from_json(Json::parse(kWitnessPerm)));
}

TEST_CASE("render emits a picture and parses it back") {
    const CliRun pic = run({"render", "--rcgraph", kWitnessGraph});
    REQUIRE(pic.code == 0);
    const std::string text = Json::parse(pic.out).at("render").get<std::string>();
    CHECK(text.find('+') != std::string::npos);
    const CliRun back = run({"render", "--parse"}, text);
    REQUIRE(back.code == 0);
    CHECK(Json::parse(back.out) == Json::parse(kWitnessGraph));
}

TEST_CASE("render argument validation") {
    CHECK(run({"render"}).code == 2);
    CHECK(run({"render", "--rcgraph", kWitnessGraph, "--parse"}).code == 2);
    CHECK(run({"render", "--parse"}, "not a picture").code == 2);
}

TEST_CASE("schubert and schur polynomials") {
    const CliRun id = run({"schubert", "--perm", R"({"n":2,"images":{}})"});
    REQUIRE(id.code == 0);
    CHECK(Json::parse(id.out) == Json::parse(R"([{"c":1,"e":[0,0]}])"));

    const CliRun s = run({"schur", "--partition", "[1]", "--n", "2"});
    REQUIRE(s.code == 0);
    CHECK(Json::parse(s.out) ==
          Json::parse(R"([{"c":1,"e":[1,0]},{"c":1,"e":[0,1]}])"));

    CHECK(run({"schur", "--partition", "[1]"}).code == 2);  // --n required
}

TEST_CASE("schubert outside the class exits with code 3") {
    const CliRun res =
        run({"schubert", "--perm",
             R"({"n":2,"images":{"-1":1,"0":-1,"1":0,"2":2}})"});
    CHECK(res.code == 3);
    CHECK(res.err.find("class violation") != std::string::npos);
}

TEST_CASE("lr reports coefficients, witnesses, and check status") {
    const std::string s0 = R"({"n":2,"images":{"0":1,"1":0,"2":2}})";
    const CliRun res = run({"lr", "--perm", s0, "--partition", "[1]"});
    REQUIRE(res.code == 0);
    const Json j = Json::parse(res.out);
    REQUIRE(j.at("coefficients").size() == 2);
    for (const Json& entry : j.at("coefficients")) {
        CHECK(entry.at("c").get<long long>() == 1);
    }
    CHECK(j.at("checks").at("u_independence").get<bool>());
    CHECK(j.at("checks").at("counting_identity").get<bool>());
    CHECK_FALSE(j.at("witnesses").empty());

    const CliRun lean =
        run({"lr", "--perm", s0, "--partition", "[1]", "--no-checks"});
    REQUIRE(lean.code == 0);
    const Json k = Json::parse(lean.out);
    CHECK_FALSE(k.at("checks").at("u_independence").get<bool>());
    CHECK(k.at("coefficients") == j.at("coefficients"));
}

TEST_CASE("pieri chain ends") {
    const CliRun zero =
        run({"pieri", "--perm", kWitnessPerm, "--m", "0"});
    REQUIRE(zero.code == 0);
    const Json j = Json::parse(zero.out);
    REQUIRE(j.at("ends").size() == 1);
    CHECK(permutation_from_json(j.at("ends")[0].at("u")) ==
          permutation_from_json(Json::parse(kWitnessPerm)));
    CHECK(j.at("ends")[0].at("c").get<long long>() == 1);

    const CliRun two =
        run({"pieri", "--perm", R"({"n":2,"images":{}})", "--m", "2"});
    REQUIRE(two.code == 0);
    CHECK(Json::parse(two.out).at("ends").size() == 1);
}

TEST_CASE("jacobi-trudi expansion of a hook") {
    const CliRun res = run({"jacobi-trudi", "--partition", "[1,1]"});
    REQUIRE(res.code == 0);
    const Json j = Json::parse(res.out);
    REQUIRE(j.at("plus").size() == 1);
    CHECK(j.at("plus")[0].at("h") == Json::parse("[1,1]"));
    CHECK(j.at("plus")[0].at("count").get<long long>() == 1);
    REQUIRE(j.at("minus").size() == 1);
    CHECK(j.at("minus")[0].at("h") == Json::parse("[2]"));
}

TEST_CASE("verify passes and exits zero on a true identity") {
    const std::string s0 = R"({"n":2,"images":{"0":1,"1":0,"2":2}})";
    const CliRun res = run({"verify", "--perm", s0, "--partition", "[1]"});
    REQUIRE(res.code == 0);
    const Json j = Json::parse(res.out);
    CHECK(j.at("pass").get<bool>());
    CHECK(j.at("polynomial_match").get<bool>());
    CHECK(j.at("expansion_match").get<bool>());
    CHECK(j.at("product") == j.at("reconstruction"));
    CHECK(j.at("coefficients").size() == 2);
}

TEST_CASE("text format renders human-readable output") {
    const CliRun count =
        run({"--format", "text", "enumerate", "--partition", "[1]", "--n", "2"});
    REQUIRE(count.code == 0);
    CHECK(count.out.find("count 2") == 0);

    const CliRun schub =
        run({"schubert", "--perm", R"({"n":2,"images":{"0":1,"1":0,"2":2}})",
             "--format", "text"});
    REQUIRE(schub.code == 0);
    CHECK(schub.out == "1*x^(1,0) + 1*x^(0,1)\n");

    const CliRun ver = run({"--format", "text", "verify", "--perm",
                            R"({"n":2,"images":{}})", "--partition", "[1]"});
    REQUIRE(ver.code == 0);
    CHECK(ver.out.find("PASS") == 0);
}

TEST_CASE("identical invocations produce byte-identical output") {
    const std::vector<std::string> args = {"lr", "--perm", kWitnessPerm,
                                           "--partition", "[2]"};
    const CliRun a = run(args);
    const CliRun b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("json round trip for every value kind") {
    const Permutation id = Permutation::identity(3);
    CHECK(permutation_from_json(to_json(id)) == id);
    const Permutation w = permutation_from_json(Json::parse(kWitnessPerm));
    CHECK(permutation_from_json(to_json(w)) == w);

    const RcGraph r = rcgraph_from_json(Json::parse(kWitnessGraph));
    CHECK(rcgraph_from_json(to_json(r)) == r);
    const RcGraph empty = RcGraph::empty(2);
    CHECK(rcgraph_from_json(to_json(empty)) == empty);

    const Tableau y(3, {{1, 1, 2}, {2, 3}});
    CHECK(tableau_from_json(to_json(y)) == y);
    CHECK(tableau_from_json(to_json(Tableau::empty(2))) == Tableau::empty(2));

    const Partition mu({3, 1});
    CHECK(partition_from_json(to_json(mu)) == mu);
    CHECK(partition_from_json(to_json(Partition())) == Partition());

    const SparsePolynomial p = schubert(w, 2);
    CHECK(polynomial_from_json(to_json(p), 2) == p);
    const SparsePolynomial zero(2);
    CHECK(polynomial_from_json(to_json(zero), 2) == zero);
}

TEST_CASE("json parsers reject malformed payloads") {
    CHECK_THROWS_AS(permutation_from_json(Json::parse(R"({"n":2})")),
                    InputError);
    CHECK_THROWS_AS(
        permutation_from_json(Json::parse(R"({"n":2,"images":{"x":1}})")),
        InputError);
    CHECK_THROWS_AS(rcgraph_from_json(Json::parse(R"({"n":2,"crossings":1})")),
                    InputError);
    CHECK_THROWS_AS(
        rcgraph_from_json(Json::parse(R"({"n":2,"crossings":[[1]]})")),
        InputError);
    CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"rows":[[1]]})")),
                    InputError);
    CHECK_THROWS_AS(partition_from_json(Json::parse("[1,2]")), InputError);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"([{"e":[1]}])"), 2),
                    InputError);
}
