#include "f1zeta/ihara.hpp"

namespace f1zeta {

IharaInput IharaInput::from(const LooseGraph& g) {
    if (g.total_loose() || g.free_count()) throw IharaDomainError("Ihara zeta needs a graph without loose or free edges");
    if (g.num_vertices() == 0 || !is_connected(g)) throw IharaDomainError("Ihara zeta needs a connected graph");
    IharaInput in;
    in.graph = g;
    const std::size_t n = g.num_vertices();
    in.rank = static_cast<long>(g.num_edges()) - static_cast<long>(n) + 1;
    if (in.rank < 1) throw IharaDomainError("the graph is a tree; its Ihara zeta function is trivial");
    in.adjacency.assign(n, std::vector<long>(n, 0));
    for (std::size_t v = 0; v < n; ++v) {
        if (g.degree(v) == 1)
            throw IharaDomainError("vertex '" + g.label(v) + "' has degree 1; Ihara zeta needs minimum degree 2");
        for (std::size_t w : g.neighbors(v)) in.adjacency[v][w] = 1;
        in.q.push_back(static_cast<long>(g.degree(v)) - 1);
    }
    return in;
}

PolyMatrix bass_hashimoto_matrix(const IharaInput& in) {
    const std::size_t n = in.graph.num_vertices();
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Polynomial{i == j ? 1L : 0L, -in.adjacency[i][j], i == j ? in.q[i] : 0L};
    return m;
}

PolyMatrix edge_adjacency_matrix(const IharaInput& in) {
    // Orientation i runs a -> b, orientation i + |E| runs b -> a.
    const auto es = in.graph.edge_indices();
    const std::size_t m = es.size();
    std::vector<std::size_t> tail(2 * m), head(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        tail[i] = head[i + m] = es[i].first;
        head[i] = tail[i + m] = es[i].second;
    }
    PolyMatrix t(2 * m);
    for (std::size_t i = 0; i < 2 * m; ++i)
        for (std::size_t j = 0; j < 2 * m; ++j)
            if (head[i] == tail[j] && j != (i + m) % (2 * m)) t(i, j) = Polynomial(1);
    return t;
}

Polynomial ihara_inverse(const LooseGraph& g) {
    const IharaInput in = IharaInput::from(g);
    return Polynomial{1, 0, -1}.pow(static_cast<unsigned>(in.rank - 1)) * det(bass_hashimoto_matrix(in));
}

Polynomial edge_matrix_inverse(const LooseGraph& g) {
    const IharaInput in = IharaInput::from(g);
    PolyMatrix t = edge_adjacency_matrix(in);
    PolyMatrix m(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) m(i, j) = Polynomial(i == j ? 1L : 0L) - t(i, j) * indeterminate();
    return det(std::move(m));
}

}  // namespace f1zeta
