#pragma once

// Independent oracles and random generators shared by the test binaries.

#include "f1zeta/loose_graph.hpp"
#include "f1zeta/poly_matrix.hpp"
#include "f1zeta/polynomial.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace f1zeta::testing {

/// Class polynomial by direct enumeration of point supports: a set S of
/// coordinates contributes (L-1)^(|S|-1) when some vertex v in S sees all of
/// S from its chart. Exponential in the degrees; fine for small graphs.
inline Polynomial support_class(const LooseGraph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> start(n);
    std::size_t next = n;
    for (std::size_t v = 0; v < n; ++v) {
        start[v] = next;
        next += g.loose(v);
    }
    std::set<std::vector<std::size_t>> good;
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::size_t> dirs(g.neighbors(v).begin(), g.neighbors(v).end());
        for (unsigned i = 0; i < g.loose(v); ++i) dirs.push_back(start[v] + i);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dirs.size()); ++mask) {
            std::vector<std::size_t> s{v};
            for (std::size_t i = 0; i < dirs.size(); ++i)
                if (mask >> i & 1U) s.push_back(dirs[i]);
            std::sort(s.begin(), s.end());
            good.insert(std::move(s));
        }
    }
    const Polynomial Lm1 = indeterminate() - 1;
    Polynomial out = Polynomial(static_cast<long>(g.free_count())) * Lm1;
    for (const auto& s : good) out += Lm1.pow(static_cast<unsigned>(s.size() - 1));
    return out;
}

struct RandomGraphLimits {
    std::size_t maxVertices = 8;
    std::size_t maxEdges = 12;
    unsigned maxLoose = 3;
    std::size_t maxDegree = 6;
    bool allowFree = false;
};

inline LooseGraph random_loose_graph(std::mt19937_64& rng, const RandomGraphLimits& lim = {}) {
    std::uniform_int_distribution<std::size_t> nd(1, lim.maxVertices);
    const std::size_t n = nd(rng);
    LooseGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    const double density = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
    for (auto [a, b] : pairs) {
        if (g.num_edges() >= lim.maxEdges) break;
        if (std::uniform_real_distribution<double>(0, 1)(rng) > density) continue;
        if (g.degree(a) >= lim.maxDegree || g.degree(b) >= lim.maxDegree) continue;
        g.add_edge(a, b);
    }
    const unsigned loose = std::uniform_int_distribution<unsigned>(0, lim.maxLoose)(rng);
    for (unsigned i = 0; i < loose; ++i) {
        const std::size_t v = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
        if (g.degree(v) < lim.maxDegree) g.add_loose(v);
    }
    if (lim.allowFree && std::uniform_int_distribution<int>(0, 4)(rng) == 0) g.add_free();
    return g;
}

/// Random connected loose tree: each new vertex attaches to an earlier one.
inline LooseGraph random_loose_tree(std::mt19937_64& rng, std::size_t maxVertices, unsigned maxLoose) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, maxVertices)(rng);
    LooseGraph t;
    t.add_vertex("t0");
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t parent = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
        t.add_edge(parent, t.add_vertex("t" + std::to_string(i)));
    }
    const unsigned loose = std::uniform_int_distribution<unsigned>(0, maxLoose)(rng);
    for (unsigned i = 0; i < loose; ++i) t.add_loose(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    return t;
}

/// Random pure graph with minimum degree 2, connected, rank >= 1.
inline LooseGraph random_ihara_graph(std::mt19937_64& rng, std::size_t maxVertices) {
    while (true) {
        RandomGraphLimits lim;
        lim.maxVertices = maxVertices;
        lim.maxLoose = 0;
        lim.maxEdges = 20;
        lim.maxDegree = maxVertices;
        LooseGraph g = random_loose_graph(rng, lim);
        if (g.num_vertices() < 3 || !is_connected(g)) continue;
        bool ok = true;
        for (std::size_t v = 0; v < g.num_vertices(); ++v) ok = ok && g.degree(v) >= 2;
        if (ok) return g;
    }
}

/// Integer determinant by fraction-free elimination on mpz values.
inline Integer integer_det(std::vector<std::vector<Integer>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline std::vector<std::vector<Integer>> evaluate_entries(const PolyMatrix& m, const Integer& x) {
    std::vector<std::vector<Integer>> out(m.size(), std::vector<Integer>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m(i, j).eval(x);
    return out;
}

/// Determinant by evaluation at deg-bound + 1 points and exact Newton
/// interpolation over the rationals.
inline Polynomial det_by_interpolation(const PolyMatrix& m) {
    const std::size_t bound = m.size() * static_cast<std::size_t>(std::max(0L, m.max_entry_degree()));
    std::vector<mpq_class> xs, coef;
    for (std::size_t i = 0; i <= bound; ++i) {
        const long x = static_cast<long>(i) - static_cast<long>(bound / 2);
        xs.emplace_back(x);
        coef.emplace_back(integer_det(evaluate_entries(m, Integer(x))));
    }
    for (std::size_t j = 1; j < xs.size(); ++j)
        for (std::size_t i = xs.size() - 1; i >= j; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    // Expand the Newton form into monomials.
    std::vector<mpq_class> poly{coef.back()};
    for (std::size_t k = xs.size() - 1; k-- > 0;) {
        std::vector<mpq_class> next(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * xs[k];
        }
        next[0] += coef[k];
        poly = std::move(next);
    }
    std::vector<Integer> out;
    for (auto& c : poly) {
        c.canonicalize();
        if (c.get_den() != 1) throw std::logic_error("interpolated determinant is not integral");
        out.push_back(c.get_num());
    }
    return Polynomial(std::move(out));
}

inline LooseGraph graph_from_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
    LooseGraph g;
    for (const auto& [a, b] : edges) g.add_edge(a, b);
    return g;
}

inline const Polynomial& Lvar() {
    static const Polynomial L = indeterminate();
    return L;
}

inline Polynomial Lp(unsigned k) { return Lvar().pow(k); }

}  // namespace f1zeta::testing
