#include "support.hpp"

#include "f1zeta/ihara.hpp"

#include <doctest.h>

using namespace f1zeta;
using namespace f1zeta::testing;

namespace {

Polynomial from_terms(std::initializer_list<std::pair<unsigned, long>> terms) {
    Polynomial p;
    for (auto [k, c] : terms) p += Polynomial::monomial(k, c);
    return p;
}

}  // namespace

TEST_CASE("K4") {
    const Polynomial expected =
        from_terms({{12, 16}, {10, -24}, {9, -16}, {8, -3}, {7, 24}, {6, 16}, {4, -6}, {3, -8}, {0, 1}});
    const LooseGraph k4 = generate("complete", {4});
    CHECK(ihara_inverse(k4) == expected);
    CHECK(edge_matrix_inverse(k4) == expected);
}

TEST_CASE("hexahedron") {
    const Polynomial expected = from_terms({{24, 256}, {22, -768}, {20, 480}, {18, 400}, {16, -183}, {14, -384},
                                            {12, 68}, {10, 144}, {8, 30}, {6, -32}, {4, -12}, {0, 1}});
    CHECK(ihara_inverse(generate("hexahedron", {})) == expected);
}

TEST_CASE("K5 and J(4,2)") {
    const Polynomial k5 = from_terms({{20, -243}, {18, 1080}, {17, 180}, {16, -1710}, {15, -776}, {14, 870},
                                      {13, 1200}, {12, 505}, {11, -660}, {10, -708}, {9, -140}, {8, 165},
                                      {7, 240}, {6, 70}, {5, -24}, {4, -30}, {3, -20}, {0, 1}});
    CHECK(ihara_inverse(generate("complete", {5})) == k5);
    const Polynomial j42 = from_terms({{24, 729}, {22, -3888}, {21, -432}, {20, 7938}, {19, 2160}, {18, -6912},
                                       {17, -4032}, {16, 639}, {15, 3008}, {14, 2976}, {13, 96}, {12, -1412},
                                       {11, -1248}, {10, -384}, {9, 320}, {8, 327}, {7, 192}, {6, 16},
                                       {5, -48}, {4, -30}, {3, -16}, {0, 1}});
    CHECK(edge_matrix_inverse(generate("johnson", {4, 2})) == j42);
}

TEST_CASE("cycles") {
    for (long n = 3; n <= 8; ++n) {
        const Polynomial expected = (Polynomial(1) - Polynomial::monomial(static_cast<std::size_t>(n))).pow(2);
        const LooseGraph c = generate("cycle", {n});
        CHECK(ihara_inverse(c) == expected);
        CHECK(edge_matrix_inverse(c) == expected);
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(ihara_inverse(generate("path", {2})), IharaDomainError);
    CHECK_THROWS_AS(ihara_inverse(parse("edge a b\nedge b c\nedge c a\nedge c d")), IharaDomainError);
    CHECK_THROWS_AS(ihara_inverse(parse("edge a b\nedge b c\nedge c a\nloose a")), IharaDomainError);
    CHECK_THROWS_AS(edge_matrix_inverse(parse("edge a b\nedge b c\nedge c a\nfree")), IharaDomainError);
    CHECK_THROWS_AS(ihara_inverse(parse("edge a b\nedge b c\nedge c a\nedge x y\nedge y z\nedge z x")),
                    IharaDomainError);
    CHECK_THROWS_AS(ihara_inverse(LooseGraph()), IharaDomainError);
}

TEST_CASE("two formulas agree; degree and constant term") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 25; ++i) {
        const LooseGraph g = random_ihara_graph(rng, 8);
        const Polynomial p = ihara_inverse(g);
        CHECK(p == edge_matrix_inverse(g));
        CHECK(p.degree() == static_cast<long>(2 * g.num_edges()));
        CHECK(p.coeff(0) == 1);
    }
}
