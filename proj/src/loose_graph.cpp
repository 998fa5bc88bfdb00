#include "f1zeta/loose_graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>

namespace f1zeta {

std::size_t LooseGraph::add_vertex(const std::string& label) {
    if (auto it = index_.find(label); it != index_.end()) return it->second;
    if (!is_valid_label(label)) throw GraphError("invalid vertex label '" + label + "'");
    const std::size_t i = labels_.size();
    labels_.push_back(label);
    index_.emplace(label, i);
    adj_.emplace_back();
    loose_.push_back(0);
    return i;
}

void LooseGraph::add_edge(const std::string& a, const std::string& b) {
    if (a == b) throw GraphError("loop at vertex '" + a + "'");
    add_edge(add_vertex(a), add_vertex(b));
}

void LooseGraph::add_edge(std::size_t a, std::size_t b) {
    if (a == b) throw GraphError("loop at vertex '" + labels_[a] + "'");
    if (has_edge(a, b)) throw GraphError("duplicate edge " + labels_[a] + " " + labels_[b]);
    adj_[a].insert(std::upper_bound(adj_[a].begin(), adj_[a].end(), b), b);
    adj_[b].insert(std::upper_bound(adj_[b].begin(), adj_[b].end(), a), a);
    ++num_edges_;
}

void LooseGraph::add_loose(const std::string& v, unsigned count) { loose_[add_vertex(v)] += count; }

unsigned LooseGraph::total_loose() const { return std::accumulate(loose_.begin(), loose_.end(), 0U); }

std::optional<std::size_t> LooseGraph::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t LooseGraph::index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw GraphError("unknown vertex '" + label + "'");
    return it->second;
}

bool LooseGraph::has_edge(std::size_t a, std::size_t b) const {
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::size_t LooseGraph::max_degree() const {
    std::size_t d = 0;
    for (std::size_t v = 0; v < num_vertices(); ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<std::size_t, std::size_t>> LooseGraph::edge_indices() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(num_edges_);
    for (std::size_t a = 0; a < adj_.size(); ++a)
        for (std::size_t b : adj_[a])
            if (a < b) out.emplace_back(a, b);
    return out;
}

std::vector<Edge> LooseGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (auto [a, b] : edge_indices()) {
        const auto& la = labels_[a];
        const auto& lb = labels_[b];
        out.emplace_back(std::min(la, lb), std::max(la, lb));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> LooseGraph::label_order() const {
    std::vector<std::size_t> order(num_vertices());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels_[a] < labels_[b]; });
    return order;
}

LooseGraph LooseGraph::induced(const std::vector<std::size_t>& vertices) const {
    LooseGraph h;
    std::vector<std::size_t> map(num_vertices(), SIZE_MAX);
    for (std::size_t v : vertices) {
        map[v] = h.add_vertex(labels_[v]);
        h.loose_[map[v]] = loose_[v];
    }
    for (std::size_t v : vertices)
        for (std::size_t w : adj_[v])
            if (map[w] != SIZE_MAX && v < w) h.add_edge(map[v], map[w]);
    return h;
}

LooseGraph LooseGraph::without_vertex(std::size_t v) const {
    std::vector<std::size_t> keep;
    for (std::size_t w = 0; w < num_vertices(); ++w)
        if (w != v) keep.push_back(w);
    LooseGraph h = induced(keep);
    h.free_ = free_;
    return h;
}

LooseGraph LooseGraph::relabeled(std::string_view prefix) const {
    LooseGraph h;
    for (std::size_t v = 0; v < num_vertices(); ++v) h.add_loose(h.add_vertex(std::string(prefix) + labels_[v]), loose_[v]);
    for (auto [a, b] : edge_indices()) h.add_edge(a, b);
    h.free_ = free_;
    return h;
}

bool operator==(const LooseGraph& a, const LooseGraph& b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_ && a.loose_ == b.loose_ && a.free_ == b.free_;
}

bool is_valid_label(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

LooseGraph parse(std::string_view text, bool strict) {
    LooseGraph g;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    auto vertex_ref = [&](const std::string& name) -> std::size_t {
        if (!is_valid_label(name)) throw ParseError(lineno, "invalid vertex name '" + name + "'");
        if (strict && !g.find(name)) throw ParseError(lineno, "undeclared vertex '" + name + "'");
        return g.add_vertex(name);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        if (kw == "vertex") {
            if (tok.size() != 2) throw ParseError(lineno, "expected 'vertex NAME'");
            if (!is_valid_label(tok[1])) throw ParseError(lineno, "invalid vertex name '" + tok[1] + "'");
            g.add_vertex(tok[1]);
        } else if (kw == "edge") {
            if (tok.size() != 3) throw ParseError(lineno, "expected 'edge A B'");
            if (tok[1] == tok[2]) throw ParseError(lineno, "loop at vertex '" + tok[1] + "'");
            std::size_t a = vertex_ref(tok[1]);
            std::size_t b = vertex_ref(tok[2]);
            if (g.has_edge(a, b)) throw ParseError(lineno, "duplicate edge " + tok[1] + " " + tok[2]);
            g.add_edge(a, b);
        } else if (kw == "loose") {
            if (tok.size() != 2) throw ParseError(lineno, "expected 'loose A'");
            g.add_loose(vertex_ref(tok[1]));
        } else if (kw == "free") {
            if (tok.size() != 1) throw ParseError(lineno, "expected 'free'");
            g.add_free();
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
    }
    return g;
}

std::string serialize(const LooseGraph& g) {
    std::string out;
    const auto order = g.label_order();
    for (std::size_t v : order) out += "vertex " + g.label(v) + "\n";
    for (const auto& [a, b] : g.edges()) out += "edge " + a + " " + b + "\n";
    for (std::size_t v : order)
        for (unsigned i = 0; i < g.loose(v); ++i) out += "loose " + g.label(v) + "\n";
    for (unsigned i = 0; i < g.free_count(); ++i) out += "free\n";
    return out;
}

namespace {

std::string padded(long i, long n) {
    std::string s = std::to_string(i);
    const std::size_t width = std::to_string(std::max(0L, n - 1)).size();
    return std::string(width - std::min(width, s.size()), '0') + s;
}

LooseGraph complete_graph(long n) {
    LooseGraph g;
    for (long i = 0; i < n; ++i) g.add_vertex(padded(i, n));
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) g.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return g;
}

void need(bool ok, const std::string& msg) {
    if (!ok) throw GraphError(msg);
}

}  // namespace

LooseGraph generate(std::string_view family, const std::vector<long>& params) {
    auto arity = [&](std::size_t n) {
        need(params.size() == n, std::string(family) + " takes " + std::to_string(n) + " parameter(s)");
    };
    if (family == "complete") {
        arity(1);
        need(params[0] >= 1, "complete n needs n >= 1");
        return complete_graph(params[0]);
    }
    if (family == "projective") {
        arity(1);
        need(params[0] >= 0, "projective n needs n >= 0");
        return complete_graph(params[0] + 1);
    }
    if (family == "star") {
        arity(2);
        const long n = params[0], k = params[1];
        need(n >= 1 && k >= 0 && k <= n, "star n k needs 0 <= k <= n and n >= 1");
        LooseGraph g;
        g.add_vertex(padded(0, k + 1));
        for (long i = 1; i <= k; ++i) g.add_edge(0, g.add_vertex(padded(i, k + 1)));
        g.add_loose(std::size_t{0}, static_cast<unsigned>(n - k));
        return g;
    }
    if (family == "path") {
        arity(1);
        need(params[0] >= 1, "path n needs n >= 1");
        LooseGraph g;
        for (long i = 0; i < params[0]; ++i) g.add_vertex(padded(i, params[0]));
        for (long i = 0; i + 1 < params[0]; ++i) g.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1));
        return g;
    }
    if (family == "cycle") {
        arity(1);
        need(params[0] >= 3, "cycle n needs n >= 3");
        LooseGraph g = generate("path", params);
        g.add_edge(0, static_cast<std::size_t>(params[0] - 1));
        return g;
    }
    if (family == "affine") {
        arity(1);
        need(params[0] >= 0, "affine n needs n >= 0");
        LooseGraph g;
        g.add_loose(g.add_vertex("0"), static_cast<unsigned>(params[0]));
        return g;
    }
    if (family == "johnson") {
        arity(2);
        const long n = params[0], k = params[1];
        need(n >= 1 && n <= 20 && k >= 1 && k < n, "johnson n k needs 1 <= k < n <= 20");
        std::vector<std::vector<long>> subsets;
        std::vector<bool> pick(static_cast<std::size_t>(n), false);
        std::fill(pick.begin(), pick.begin() + k, true);
        do {
            std::vector<long> s;
            for (long i = 0; i < n; ++i)
                if (pick[static_cast<std::size_t>(i)]) s.push_back(i);
            subsets.push_back(s);
        } while (std::prev_permutation(pick.begin(), pick.end()));
        std::sort(subsets.begin(), subsets.end());
        LooseGraph g;
        for (const auto& s : subsets) {
            std::string label;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i && n > 10) label += "_";
                label += n > 10 ? padded(s[i], n) : std::to_string(s[i]);
            }
            g.add_vertex(label);
        }
        for (std::size_t a = 0; a < subsets.size(); ++a)
            for (std::size_t b = a + 1; b < subsets.size(); ++b) {
                std::vector<long> common;
                std::set_intersection(subsets[a].begin(), subsets[a].end(), subsets[b].begin(), subsets[b].end(),
                                      std::back_inserter(common));
                if (static_cast<long>(common.size()) == k - 1) g.add_edge(a, b);
            }
        return g;
    }
    if (family == "hexahedron") {
        arity(0);
        LooseGraph g;
        for (int i = 0; i < 8; ++i) g.add_vertex(std::to_string(i));
        for (std::size_t a = 0; a < 8; ++a)
            for (std::size_t b = a + 1; b < 8; ++b)
                if (std::has_single_bit(a ^ b)) g.add_edge(a, b);
        return g;
    }
    throw GraphError("unknown family '" + std::string(family) + "'");
}

Reduction reduce(const LooseGraph& g) {
    Reduction r;
    const Polynomial L = indeterminate();
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (g.loose(v))
            r.correction += L.pow(static_cast<unsigned>(g.degree(v))) - L.pow(static_cast<unsigned>(g.neighbors(v).size()));
    }
    r.correction += Polynomial(static_cast<long>(g.free_count())) * (L - 1);
    for (const auto& l : g.labels()) r.reduced.add_vertex(l);
    for (auto [a, b] : g.edge_indices()) r.reduced.add_edge(a, b);
    return r;
}

LooseGraph resolve(const LooseGraph& g, std::size_t a, std::size_t b) {
    if (a >= g.num_vertices() || b >= g.num_vertices() || !g.has_edge(a, b))
        throw GraphError("cannot resolve: not a two-vertex edge of the graph");
    LooseGraph h;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) h.add_loose(h.add_vertex(g.label(v)), g.loose(v));
    for (auto [p, q] : g.edge_indices())
        if (!((p == a && q == b) || (p == b && q == a))) h.add_edge(p, q);
    h.add_loose(a);
    h.add_loose(b);
    h.add_free(g.free_count());
    return h;
}

LooseGraph resolve(const LooseGraph& g, const Edge& e) {
    auto a = g.find(e.first);
    auto b = g.find(e.second);
    if (!a || !b) throw GraphError("cannot resolve: edge " + e.first + " " + e.second + " is not in the graph");
    return resolve(g, *a, *b);
}

std::vector<std::vector<std::size_t>> component_vertices(const LooseGraph& g) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(g.num_vertices(), false);
    for (std::size_t s = 0; s < g.num_vertices(); ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t w : g.neighbors(comp[i]))
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<LooseGraph> components(const LooseGraph& g) {
    std::vector<LooseGraph> out;
    for (const auto& comp : component_vertices(g)) out.push_back(g.induced(comp));
    for (unsigned i = 0; i < g.free_count(); ++i) {
        LooseGraph f;
        f.add_free();
        out.push_back(f);
    }
    return out;
}

bool is_connected(const LooseGraph& g) {
    if (g.num_vertices() == 0) return g.free_count() == 1;
    return g.free_count() == 0 && component_vertices(g).size() == 1;
}

bool is_loose_tree(const LooseGraph& g) {
    return g.num_vertices() > 0 && is_connected(g) && g.num_edges() + 1 == g.num_vertices();
}

SpanningTree spanning_tree(const LooseGraph& g, std::optional<std::uint64_t> seed) {
    if (g.num_vertices() == 0) throw GraphError("spanning tree of an empty graph");
    if (!is_connected(g)) throw GraphError("spanning tree of a disconnected graph");
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> order = g.label_order();
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;
    std::optional<std::mt19937_64> rng;
    if (seed) rng.emplace(*seed);

    std::size_t root = order.front();
    if (rng) root = std::uniform_int_distribution<std::size_t>(0, n - 1)(*rng);
    std::vector<bool> seen(n, false);
    std::vector<std::pair<std::size_t, std::size_t>> tree_edges;
    std::vector<std::size_t> queue{root};
    seen[root] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        std::vector<std::size_t> nb = g.neighbors(queue[i]);
        std::sort(nb.begin(), nb.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
        if (rng) std::shuffle(nb.begin(), nb.end(), *rng);
        for (std::size_t w : nb)
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
                tree_edges.emplace_back(std::min(queue[i], w), std::max(queue[i], w));
            }
    }
    std::sort(tree_edges.begin(), tree_edges.end());

    SpanningTree st;
    for (std::size_t v = 0; v < n; ++v) st.tree.add_loose(st.tree.add_vertex(g.label(v)), g.loose(v));
    for (auto [a, b] : tree_edges) st.tree.add_edge(a, b);

    std::vector<std::pair<std::size_t, std::size_t>> fundamental;  // (earlier, later) by rank
    for (auto [a, b] : g.edge_indices()) {
        if (std::binary_search(tree_edges.begin(), tree_edges.end(), std::make_pair(a, b))) continue;
        fundamental.emplace_back(rank[a] < rank[b] ? a : b, rank[a] < rank[b] ? b : a);
    }
    std::sort(fundamental.begin(), fundamental.end(), [&](const auto& e, const auto& f) {
        return std::pair(rank[e.second], rank[e.first]) < std::pair(rank[f.second], rank[f.first]);
    });
    if (rng) std::shuffle(fundamental.begin(), fundamental.end(), *rng);
    for (auto [a, b] : fundamental) st.fundamental.emplace_back(g.label(a), g.label(b));
    return st;
}

LooseGraph cone(const LooseGraph& base, const LooseGraph& apex) {
    LooseGraph h;
    for (std::size_t v = 0; v < base.num_vertices(); ++v) h.add_loose(h.add_vertex(base.label(v)), base.loose(v));
    for (std::size_t v = 0; v < apex.num_vertices(); ++v) {
        if (h.find(apex.label(v))) throw GraphError("cone parts share vertex '" + apex.label(v) + "'");
        h.add_loose(h.add_vertex(apex.label(v)), apex.loose(v));
    }
    const std::size_t off = base.num_vertices();
    for (auto [a, b] : base.edge_indices()) h.add_edge(a, b);
    for (auto [a, b] : apex.edge_indices()) h.add_edge(off + a, off + b);
    for (std::size_t a = 0; a < base.num_vertices(); ++a)
        for (std::size_t b = 0; b < apex.num_vertices(); ++b) h.add_edge(a, off + b);
    h.add_free(base.free_count() + apex.free_count());
    return h;
}

LooseGraph AnchoredLooseGraph::as_loose_graph() const {
    LooseGraph h = base;
    for (const auto& att : attach)
        for (std::size_t w : att) h.add_loose(w);
    return h;
}

namespace {

struct Ball {
    std::size_t x, y;
    std::vector<bool> inX, inY, common, inD;
};

Ball make_ball(const LooseGraph& g, const Edge& e) {
    auto x = g.find(e.first);
    auto y = g.find(e.second);
    if (!x || !y || !g.has_edge(*x, *y)) throw GraphError("not a two-vertex edge: " + e.first + " " + e.second);
    const std::size_t n = g.num_vertices();
    Ball b{*x, *y, std::vector<bool>(n), std::vector<bool>(n), std::vector<bool>(n), std::vector<bool>(n)};
    for (std::size_t w : g.neighbors(b.x))
        if (w != b.y) b.inX[w] = true;
    for (std::size_t w : g.neighbors(b.y))
        if (w != b.x) b.inY[w] = true;
    for (std::size_t v = 0; v < n; ++v) {
        b.common[v] = b.inX[v] && b.inY[v];
        b.inD[v] = b.inX[v] || b.inY[v];
    }
    return b;
}

std::vector<std::size_t> where(const std::vector<bool>& mask) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < mask.size(); ++v)
        if (mask[v]) out.push_back(v);
    return out;
}

// Common neighbours as real vertices; every neighbour of a common vertex in
// `target` outside the common set becomes an anchor.
AnchoredLooseGraph embedded_piece(const LooseGraph& g, const std::vector<std::size_t>& common,
                                  const std::vector<bool>& isCommon, const std::vector<bool>& target) {
    AnchoredLooseGraph a;
    a.base = g.induced(common);
    for (std::size_t z = 0; z < g.num_vertices(); ++z) {
        if (!target[z] || isCommon[z]) continue;
        std::vector<std::size_t> att;
        for (std::size_t i = 0; i < common.size(); ++i)
            if (g.has_edge(common[i], z)) att.push_back(i);
        if (att.empty()) continue;
        a.anchors.push_back(g.label(z));
        a.attach.push_back(std::move(att));
    }
    return a;
}

AnchoredLooseGraph cone_over(const AnchoredLooseGraph& h, const std::vector<std::string>& apex) {
    AnchoredLooseGraph c = h;
    const std::size_t m = h.base.num_vertices();
    std::vector<std::size_t> idx;
    for (const auto& a : apex) idx.push_back(c.base.add_vertex(a));
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t w = 0; w < m; ++w) c.base.add_edge(idx[i], w);
        for (std::size_t j = i + 1; j < idx.size(); ++j) c.base.add_edge(idx[i], idx[j]);
    }
    return c;
}

}  // namespace

LooseGraph local_ball(const LooseGraph& g, const Edge& e) {
    Ball b = make_ball(g, e);
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (b.inD[v] || v == b.x || v == b.y) keep.push_back(v);
    return reduce(g.induced(keep)).reduced;
}

NeighborhoodData neighborhood(const LooseGraph& g, const Edge& e) {
    if (!g.is_reduced()) throw GraphError("neighborhood needs a reduced graph");
    Ball b = make_ball(g, e);
    NeighborhoodData nd;
    nd.x = g.label(b.x);
    nd.y = g.label(b.y);
    nd.delta = g.induced(where(b.inD));
    const auto common = where(b.common);
    nd.g = g.induced(common);
    nd.gL = embedded_piece(g, common, b.common, b.inD);
    nd.gLx = embedded_piece(g, common, b.common, b.inX);
    nd.gLy = embedded_piece(g, common, b.common, b.inY);
    nd.coneGLxy = cone_over(nd.gL, {nd.x, nd.y});
    nd.coneGLxXy = cone_over(nd.gLx, {nd.x, nd.y});
    nd.coneGLxY = cone_over(nd.gLx, {nd.y});
    nd.coneGLyXy = cone_over(nd.gLy, {nd.x, nd.y});
    nd.coneGLyX = cone_over(nd.gLy, {nd.x});
    for (const auto& comp : component_vertices(nd.g)) {
        std::vector<std::string> labels;
        for (std::size_t v : comp) labels.push_back(nd.g.label(v));
        nd.components.push_back(std::move(labels));
    }
    return nd;
}

}  // namespace f1zeta
