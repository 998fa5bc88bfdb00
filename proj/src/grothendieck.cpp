#include "f1zeta/grothendieck.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace f1zeta {

namespace {

const Polynomial L = indeterminate();

Polynomial Lpow(std::size_t k) { return L.pow(static_cast<unsigned>(k)); }

constexpr std::size_t kInf = static_cast<std::size_t>(-1);

}  // namespace

TreeProfile tree_profile(const LooseGraph& t) {
    if (!is_loose_tree(t)) throw GraphError("not a loose tree");
    TreeProfile p;
    long inner = 0;
    for (std::size_t v = 0; v < t.num_vertices(); ++v) {
        const std::size_t d = t.degree(v);
        if (d == 1) {
            ++p.E;
        } else if (d > 1) {
            ++p.degreeCounts[static_cast<unsigned>(d)];
            ++inner;
        }
    }
    p.I = inner - 1;
    return p;
}

Polynomial tree_class(const LooseGraph& t) {
    TreeProfile p = tree_profile(t);
    if (t.num_vertices() == 1 && t.degree(0) == 0) return Polynomial(1);
    Polynomial out;
    for (auto [d, n] : p.degreeCounts) out += Polynomial::monomial(d, n);
    out += Polynomial{p.I + p.E, -p.I};
    return out;
}

Polynomial star_class(long n, long k) {
    if (n < 1 || k < 0 || k > n) throw GraphError("star class needs 0 <= k <= n and n >= 1");
    return Polynomial::monomial(static_cast<std::size_t>(n)) + Polynomial(k);
}

std::string canonical_key(const LooseGraph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> color(n);
    for (std::size_t v = 0; v < n; ++v) color[v] = g.neighbors(v).size() * 1024 + g.loose(v);
    for (int round = 0; round < 3; ++round) {
        std::vector<std::vector<std::size_t>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<std::size_t> nb;
            for (std::size_t w : g.neighbors(v)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<std::size_t>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (std::size_t v = 0; v < n; ++v)
            color[v] = static_cast<std::size_t>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    std::string key = std::to_string(n) + "/" + std::to_string(g.free_count()) + "/";
    for (std::size_t i = 0; i < n; ++i) key += std::to_string(g.loose(order[i])) + ",";
    std::vector<std::pair<std::size_t, std::size_t>> es;
    for (auto [a, b] : g.edge_indices()) es.emplace_back(std::min(pos[a], pos[b]), std::max(pos[a], pos[b]));
    std::sort(es.begin(), es.end());
    key += "/";
    for (auto [a, b] : es) key += std::to_string(a) + "-" + std::to_string(b) + ",";
    return key;
}

std::size_t ClassEngine::memo_size() const {
    std::shared_lock lock(mu_);
    return memo_.size();
}

Polynomial ClassEngine::class_polynomial(const LooseGraph& g) { return compute(g, {kInf, kInf, kInf}); }

Polynomial ClassEngine::compute(const LooseGraph& g, const Measure& bound) {
    const Measure m{g.num_vertices(), g.num_edges(), g.total_loose() + g.free_count()};
    if (!(m < bound)) throw std::logic_error("class recursion did not decrease its measure");
    if (g.empty()) return {};

    const std::string key = canonical_key(g);
    {
        std::shared_lock lock(mu_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    Polynomial result;
    auto comps = components(g);
    if (comps.size() > 1) {
        for (const auto& c : comps) result += compute(c, m);
    } else if (g.num_vertices() == 0) {
        result = L - 1;
    } else if (is_loose_tree(g)) {
        result = tree_class(g);
    } else if (!g.is_reduced()) {
        Reduction r = reduce(g);
        result = r.correction + compute(r.reduced, m);
    } else {
        std::optional<std::size_t> apex;
        for (std::size_t v : g.label_order())
            if (g.neighbors(v).size() + 1 == g.num_vertices()) {
                apex = v;
                break;
            }
        if (apex) {
            result = Lpow(g.degree(*apex)) + compute(g.without_vertex(*apex), m);
        } else {
            std::optional<std::uint64_t> s;
            if (seed_) s = *seed_ ^ std::hash<std::string>{}(key);
            const SpanningTree st = spanning_tree(g, s);
            const Edge& e = st.fundamental.front();
            result = compute(resolve(g, e), m) - difference(g, e, m);
        }
    }

    std::unique_lock lock(mu_);
    memo_.emplace(key, result);
    return result;
}

Polynomial ClassEngine::embedded_class(const AnchoredLooseGraph& h) { return embedded(h, {kInf, kInf, kInf}); }

// Anchors are made into real vertices joined only to their attachments; the
// points that only the new charts see are then subtracted. Anchors whose
// attachment set is independent behave exactly like private loose edges.
Polynomial ClassEngine::embedded(const AnchoredLooseGraph& h, const Measure& bound) {
    const LooseGraph& base = h.base;
    LooseGraph solid = base;
    Polynomial correction;
    for (std::size_t z = 0; z < h.anchors.size(); ++z) {
        const auto& att = h.attach[z];
        bool independent = true;
        for (std::size_t i = 0; i < att.size() && independent; ++i)
            for (std::size_t j = i + 1; j < att.size(); ++j)
                if (base.has_edge(att[i], att[j])) {
                    independent = false;
                    break;
                }
        if (independent) {
            for (std::size_t w : att) solid.add_loose(w);
            continue;
        }
        const std::size_t zi = solid.add_vertex(h.anchors[z]);
        for (std::size_t w : att) solid.add_edge(zi, w);
        correction += Lpow(att.size()) - (L - 1) * compute(reduce(base.induced(att)).reduced, bound);
    }
    return compute(solid, bound) - correction;
}

Polynomial ClassEngine::difference(const LooseGraph& g, const Edge& e, const Measure& bound) {
    const NeighborhoodData nd = neighborhood(g, e);
    auto E = [&](const AnchoredLooseGraph& h) { return embedded(h, bound); };
    // The cone-free terms split over the connected components of G.
    auto split = [&](const AnchoredLooseGraph& h) {
        Polynomial sum;
        for (const auto& comp : nd.components) {
            std::vector<std::size_t> idx;
            for (const auto& l : comp) idx.push_back(h.base.index(l));
            AnchoredLooseGraph part;
            part.base = h.base.induced(idx);
            for (std::size_t z = 0; z < h.anchors.size(); ++z) {
                std::vector<std::size_t> att;
                for (std::size_t w : h.attach[z])
                    if (auto it = std::find(idx.begin(), idx.end(), w); it != idx.end())
                        att.push_back(static_cast<std::size_t>(it - idx.begin()));
                if (att.empty()) continue;
                std::sort(att.begin(), att.end());
                part.anchors.push_back(h.anchors[z]);
                part.attach.push_back(std::move(att));
            }
            sum += E(part);
        }
        return sum;
    };
    return L * L * split(nd.gL) - (L - 1) * split(nd.gLx) - (L - 1) * split(nd.gLy) - E(nd.coneGLxy) +
           E(nd.coneGLxXy) - E(nd.coneGLxY) + E(nd.coneGLyXy) - E(nd.coneGLyX);
}

Polynomial ClassEngine::resolution_difference(const LooseGraph& g, const Edge& e) {
    return difference(reduce(g).reduced, e, {kInf, kInf, kInf});
}

namespace {

// Points of the ball whose support meets both private sides of the edge and
// is seen from a vertex on one side only: they are counted neither by the
// vertex terms nor by the common-neighbour terms.
Polynomial crossing_term(const LooseGraph& ball, std::size_t x, std::size_t y) {
    const std::size_t n = ball.num_vertices();
    std::vector<bool> nx(n), ny(n), common(n);
    for (std::size_t w : ball.neighbors(x)) nx[w] = w != y;
    for (std::size_t w : ball.neighbors(y)) ny[w] = w != x;
    for (std::size_t v = 0; v < n; ++v) common[v] = nx[v] && ny[v];

    Polynomial total;
    for (int side = 0; side < 2; ++side) {
        const std::size_t a = side ? y : x;
        const std::size_t b = side ? x : y;
        const auto& mine = side ? ny : nx;
        const auto& other = side ? nx : ny;
        std::set<std::vector<std::size_t>> seen;
        for (std::size_t w = 0; w < n; ++w) {
            if (!mine[w] || common[w]) continue;
            std::vector<std::size_t> nb;
            for (std::size_t u : ball.neighbors(w))
                if (u != a) nb.push_back(u);
            if (nb.size() > 24) throw std::length_error("crossing term: neighbourhood too large");
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nb.size()); ++mask) {
                std::vector<std::size_t> s{a, w};
                for (std::size_t i = 0; i < nb.size(); ++i)
                    if (mask >> i & 1U) s.push_back(nb[i]);
                std::sort(s.begin(), s.end());
                if (std::binary_search(s.begin(), s.end(), b)) continue;
                bool meets = false;
                for (std::size_t v : s) meets = meets || (other[v] && !common[v]);
                if (!meets) continue;
                bool covered = false;
                for (std::size_t c : s) {
                    if (!common[c]) continue;
                    bool inside = true;
                    for (std::size_t v : s) inside = inside && (v == c || ball.has_edge(c, v));
                    if (inside) {
                        covered = true;
                        break;
                    }
                }
                if (!covered && seen.insert(s).second) total += (L - 1).pow(static_cast<unsigned>(s.size() - 1));
            }
        }
    }
    return total;
}

}  // namespace

Polynomial ClassEngine::local_common(const LooseGraph& g, const Edge& e, bool after) {
    const LooseGraph ball = local_ball(reduce(g).reduced, e);
    const NeighborhoodData nd = neighborhood(ball, e);
    const std::size_t x = ball.index(nd.x);
    const std::size_t y = ball.index(nd.y);
    const Measure inf{kInf, kInf, kInf};
    auto E = [&](const AnchoredLooseGraph& h) { return embedded(h, inf); };

    Polynomial p = Lpow(ball.degree(x)) + Lpow(ball.degree(y)) + class_polynomial(nd.delta) + crossing_term(ball, x, y);
    if (after) {
        p += (L * L - 1) * E(nd.gL) - (L - 1) * E(nd.gLx) - (L - 1) * E(nd.gLy);
    } else {
        p += E(nd.coneGLxy) - E(nd.gL) - (E(nd.coneGLxXy) - E(nd.coneGLxY)) - (E(nd.coneGLyXy) - E(nd.coneGLyX));
    }
    return p;
}

Polynomial ClassEngine::local_before(const LooseGraph& g, const Edge& e) { return local_common(g, e, false); }

Polynomial ClassEngine::local_after(const LooseGraph& g, const Edge& e) { return local_common(g, e, true); }

Polynomial ClassEngine::cone_class(const LooseGraph& base, const LooseGraph& apex) {
    if (base.free_count() || apex.free_count()) throw GraphError("cone parts must not have free edges");
    for (const auto& l : apex.labels())
        if (base.find(l)) throw GraphError("cone parts share vertex '" + l + "'");
    const Reduction r1 = reduce(base);
    const Reduction r2 = reduce(apex);
    const Polynomial p1 = class_polynomial(r1.reduced);
    const Polynomial p2 = class_polynomial(r2.reduced);
    const Polynomial lm1 = Lpow(base.num_vertices());
    const Polynomial lm2 = Lpow(apex.num_vertices());
    return p1 * lm2 + p2 * lm1 - p1 * p2 * (L - 1) + lm2 * r1.correction + lm1 * r2.correction;
}

SurgeryTrace ClassEngine::surgery_trace(const LooseGraph& g) {
    if (g.num_vertices() == 0 || !is_connected(g)) throw GraphError("surgery trace needs a connected graph");
    const SpanningTree st = spanning_tree(g);
    const auto& fund = st.fundamental;
    auto partially_resolved = [&](std::size_t restored) {
        LooseGraph h = g;
        for (std::size_t j = restored; j < fund.size(); ++j) h = resolve(h, fund[j]);
        return h;
    };
    SurgeryTrace tr;
    tr.finalTree = partially_resolved(0);
    tr.finalTreeClass = tree_class(tr.finalTree);
    Polynomial running = tr.finalTreeClass;
    for (std::size_t i = 0; i < fund.size(); ++i) {
        SurgeryStep step;
        step.graphBefore = partially_resolved(i + 1);
        step.resolvedEdge = fund[i];
        step.delta = resolution_difference(step.graphBefore, fund[i]);
        running -= step.delta;
        step.running = running;
        tr.steps.push_back(std::move(step));
    }
    return tr;
}

namespace {

ClassEngine& shared_engine() {
    static ClassEngine engine;
    return engine;
}

}  // namespace

Polynomial class_polynomial(const LooseGraph& g) { return shared_engine().class_polynomial(g); }
Polynomial resolution_difference(const LooseGraph& g, const Edge& e) {
    return shared_engine().resolution_difference(g, e);
}
Polynomial local_before(const LooseGraph& g, const Edge& e) { return shared_engine().local_before(g, e); }
Polynomial local_after(const LooseGraph& g, const Edge& e) { return shared_engine().local_after(g, e); }
Polynomial cone_class(const LooseGraph& base, const LooseGraph& apex) { return shared_engine().cone_class(base, apex); }
SurgeryTrace surgery_trace(const LooseGraph& g) { return shared_engine().surgery_trace(g); }

}  // namespace f1zeta
