#include "support.hpp"

#include "f1zeta/grothendieck.hpp"
#include "f1zeta/pointcount.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace f1zeta;
using namespace f1zeta::testing;

TEST_CASE("prime fields") {
    const PrimeField f(7);
    for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inverse(a)) == 1);
    CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(17), std::invalid_argument);
    CHECK_NOTHROW(PrimeField(17, 17));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
}

TEST_CASE("point counts") {
    CHECK(count_points(generate("path", {2}), 5) == 6);
    const LooseGraph k4minus = graph_from_edges({{"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
    CHECK(count_points(k4minus, 2) == 14);
    CHECK(count_points(parse("edge x y\nedge x z"), 3) == 11);
    CHECK(count_points(generate("affine", {3}), 3) == 27);
    CHECK(count_points(parse("free"), 5) == 4);
    CHECK(count_points(LooseGraph(), 3) == 0);
    CHECK(count_points(parse("vertex a"), 3) == 1);
}

TEST_CASE("budget") {
    const LooseGraph k5 = generate("complete", {5});
    CHECK(count_work(k5, 3) == 5 * 81);
    CHECK_THROWS_AS(count_points(k5, 3, 100), BudgetExceeded);
    CHECK_NOTHROW(count_points(k5, 3, 405));
}

TEST_CASE("verify reports") {
    const VerifyReport k5 = verify(generate("complete", {5}), {2, 3, 5});
    CHECK(k5.ok);
    REQUIRE(k5.checks.size() == 3);
    CHECK(k5.checks[0].counted == 31);
    CHECK(k5.checks[1].counted == 121);
    CHECK(k5.checks[2].counted == 781);
    CHECK(k5.eulerGot == 5);

    const VerifyReport cube = verify(generate("hexahedron", {}), {2, 3});
    CHECK(cube.ok);
    CHECK(cube.checks[0].expected == 52);
    CHECK(cube.checks[1].expected == 192);

    const VerifyReport f = verify(parse("free"), {5});
    CHECK(f.ok);
    CHECK(f.checks[0].counted == 4);

    const auto j = nlohmann::json::parse(k5.to_json());
    CHECK(j["ok"] == true);
    CHECK(j["checks"][2]["prime"] == 5);
    CHECK(j["checks"][2]["counted"] == "781");
    CHECK(j["euler"]["expected"] == "5");
}

TEST_CASE("oracle equality on random loose graphs") {
    std::mt19937_64 rng(61);
    RandomGraphLimits lim;
    lim.allowFree = true;
    for (int i = 0; i < 60; ++i) {
        const LooseGraph g = random_loose_graph(rng, lim);
        const Polynomial p = class_polynomial(g);
        for (std::uint32_t q : {2U, 3U, 5U}) CHECK(count_points(g, q) == p.eval(q));
    }
}

TEST_CASE("counts add over disjoint unions") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 30; ++i) {
        const LooseGraph a = random_loose_graph(rng).relabeled("a");
        const LooseGraph b = random_loose_graph(rng).relabeled("b");
        LooseGraph u = a;
        for (std::size_t v = 0; v < b.num_vertices(); ++v) u.add_loose(u.add_vertex(b.label(v)), b.loose(v));
        for (const auto& [x, y] : b.edges()) u.add_edge(x, y);
        for (std::uint32_t q : {2U, 3U}) CHECK(count_points(u, q) == count_points(a, q) + count_points(b, q));
    }
}
