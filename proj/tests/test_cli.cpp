#include "f1zeta/cli.hpp"
#include "f1zeta/polynomial.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace f1zeta;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(const std::vector<std::string>& args, const std::string& stdinText = "") {
    std::istringstream in(stdinText);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen piped into class") {
    const Result gen = run({"gen", "complete", "5"});
    REQUIRE(gen.code == 0);
    const Result cls = run({"class"}, gen.out);
    CHECK(cls.code == 0);
    CHECK(cls.out == "L^4 + L^3 + L^2 + L + 1\n");
    CHECK(run({"class", "-"}, gen.out).out == cls.out);
    CHECK(run({"class", "@complete:5"}).out == cls.out);
}

TEST_CASE("compare") {
    const Result r = run({"compare", "@hexahedron"});
    CHECK(r.code == 0);
    CHECK(r.out.find("8L^3 - 12L + 12") != std::string::npos);
    CHECK(r.out.find("t^12*(t-3)^8/(t-1)^12") != std::string::npos);
    CHECK(r.out.find("256u^24 - 768u^22") != std::string::npos);
    const Result tree = run({"compare", "@path:3"});
    CHECK(tree.code == 0);
    CHECK(tree.out.find("undefined") != std::string::npos);
}

TEST_CASE("exit codes") {
    const Result ih = run({"ihara", "@path:2"});
    CHECK(ih.code == kExitDomain);
    CHECK(ih.err.find("tree") != std::string::npos);
    CHECK(run({"ihara", "-"}, "edge a b\nedge b c\nedge c a\nedge c d\n").code == kExitDomain);
    CHECK(run({"class"}, "edge a a\n").code == kExitUsage);
    CHECK(run({"class", "--strict"}, "vertex a\nedge a b\n").code == kExitUsage);
    CHECK(run({"class"}, "vertex a\nedge a b\n").code == 0);
    CHECK(run({"bogus"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"count", "@complete:3"}).code == kExitUsage);
    CHECK(run({"count", "@complete:3", "--q", "4"}).code == kExitUsage);
    CHECK(run({"count", "@complete:3", "--q", "17"}).code == kExitDomain);
    CHECK(run({"count", "@complete:5", "--q", "3", "--budget", "10"}).code == kExitDomain);
    CHECK(run({"verify", "@complete:3", "--primes", "2,x"}).code == kExitUsage);
    CHECK(run({"class", "/nonexistent/file.lg"}).code == kExitUsage);
    CHECK(run({"class", "@nosuch:3"}).code == kExitUsage);
    CHECK(run({"gen", "star", "2", "3"}).code == kExitDomain);
    CHECK(run({"trace", "-"}, "vertex a\nvertex b\n").code == kExitDomain);
}

TEST_CASE("count and verify") {
    CHECK(run({"count", "@complete:5", "--q", "3"}).out == "121\n");
    const Result v = run({"verify", "@complete:5", "--primes", "2,3,5"});
    CHECK(v.code == 0);
    CHECK(v.out.find("PASS") != std::string::npos);
    const Result vj = run({"verify", "@johnson:4,2", "--json"});
    CHECK(vj.code == 0);
    CHECK(nlohmann::json::parse(vj.out)["ok"] == true);
}

TEST_CASE("text and json carry the same data") {
    for (const std::string g : {"@complete:5", "@johnson:4,2", "@hexahedron", "@star:4,2", "@affine:3"}) {
        const Result t = run({"class", g});
        const Result j = run({"class", g, "--json"});
        const auto coeffs = nlohmann::json::parse(j.out)["polynomial"].get<std::vector<std::string>>();
        CHECK(from_coefficient_strings(coeffs).to_string("L") + "\n" == t.out);
    }
    for (const std::string g : {"@complete:4", "@cycle:5"}) {
        const Result t = run({"ihara", g});
        const Result j = run({"ihara", g, "--json"});
        const auto coeffs = nlohmann::json::parse(j.out)["polynomial"].get<std::vector<std::string>>();
        CHECK(from_coefficient_strings(coeffs).to_string("u") + "\n" == t.out);
    }
    const Result zt = run({"zeta", "@hexahedron"});
    const Result zj = run({"zeta", "@hexahedron", "--json"});
    CHECK(zt.out == "t^12*(t-3)^8/(t-1)^12\n");
    CHECK(nlohmann::json::parse(zj.out)["factors"] == nlohmann::json::parse("[[0,12],[1,-12],[3,8]]"));
}

TEST_CASE("trace output") {
    const Result t = run({"trace", "@complete:5"});
    CHECK(t.code == 0);
    CHECK(t.out.find("5L^4 - 4L + 4") != std::string::npos);
    CHECK(t.out.find("3L^4 - L^3 + L^2 + 2") != std::string::npos);
    const Result j = run({"trace", "@complete:5", "--json"});
    const auto rows = nlohmann::json::parse(j.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0]["resolvedEdge"].is_null());
    CHECK(rows[0]["delta"].is_null());
    CHECK(rows[1]["resolvedEdge"] == nlohmann::json::parse(R"(["1","2"])"));
    CHECK(rows[6]["running"] == nlohmann::json::parse(R"(["1","1","1","1","1"])"));
    CHECK(rows[6]["delta"] == nlohmann::json::parse(R"(["1","-1","0","-2","2"])"));
}

TEST_CASE("gen output parses back") {
    const Result g = run({"gen", "star", "4", "2"});
    CHECK(g.out == "vertex 0\nvertex 1\nvertex 2\nedge 0 1\nedge 0 2\nloose 0\nloose 0\n");
    CHECK(run({"class"}, g.out).out == "L^4 + 2\n");
    const Result gj = run({"gen", "hexahedron", "--json"});
    CHECK(nlohmann::json::parse(gj.out)["graph"].get<std::string>().rfind("vertex 0\n", 0) == 0);
}
