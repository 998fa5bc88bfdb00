#pragma once

// Loose graphs: simple graphs whose edges may also have one endpoint
// (loose edges) or none (free edges).

#include "f1zeta/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace f1zeta {

/// Thrown for malformed .lg input. Carries the 1-based line number (0 when
/// the error is not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Thrown when an operation's precondition on the graph does not hold.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Unordered pair of vertex labels.
using Edge = std::pair<std::string, std::string>;

class LooseGraph {
public:
    LooseGraph() = default;

    /// Returns the index of the vertex, creating it if needed.
    std::size_t add_vertex(const std::string& label);
    void add_edge(const std::string& a, const std::string& b);
    void add_edge(std::size_t a, std::size_t b);
    void add_loose(const std::string& v, unsigned count = 1);
    void add_loose(std::size_t v, unsigned count = 1) { loose_[v] += count; }
    void add_free(unsigned count = 1) { free_ += count; }

    std::size_t num_vertices() const { return labels_.size(); }
    std::size_t num_edges() const { return num_edges_; }
    unsigned loose(std::size_t v) const { return loose_[v]; }
    unsigned total_loose() const;
    unsigned free_count() const { return free_; }
    bool empty() const { return labels_.empty() && free_ == 0; }
    bool is_reduced() const { return free_ == 0 && total_loose() == 0; }

    const std::string& label(std::size_t v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> find(const std::string& label) const;
    std::size_t index(const std::string& label) const;

    /// Neighbours by index, ascending.
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
    bool has_edge(std::size_t a, std::size_t b) const;
    /// Two-vertex edges plus loose edges at v.
    std::size_t degree(std::size_t v) const { return adj_[v].size() + loose_[v]; }
    std::size_t max_degree() const;
    /// Edges as index pairs (a < b), sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edge_indices() const;
    /// Edges as label pairs, each pair and the list sorted by label.
    std::vector<Edge> edges() const;

    /// Vertex indices in label order.
    std::vector<std::size_t> label_order() const;

    /// Subgraph induced on the given vertices (kept in the given order), with
    /// their loose edges. Free edges are dropped.
    LooseGraph induced(const std::vector<std::size_t>& vertices) const;
    /// Removes v and its incident edges; loose edges elsewhere are kept.
    LooseGraph without_vertex(std::size_t v) const;
    /// Same graph with every vertex relabelled "prefix + label".
    LooseGraph relabeled(std::string_view prefix) const;

    friend bool operator==(const LooseGraph& a, const LooseGraph& b);

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<unsigned> loose_;
    std::size_t num_edges_ = 0;
    unsigned free_ = 0;
};

bool is_valid_label(std::string_view s);

/// Parses the .lg format. In strict mode every vertex must be declared by a
/// `vertex` line before it is used.
LooseGraph parse(std::string_view text, bool strict = false);
/// Canonical .lg text: vertices sorted, then edges sorted, then loose and
/// free lines.
std::string serialize(const LooseGraph& g);

/// Builds a named family. Families: complete n, star n k, path n, cycle n,
/// affine n, projective n, johnson n k, hexahedron.
LooseGraph generate(std::string_view family, const std::vector<long>& params);

struct Reduction {
    LooseGraph reduced;
    Polynomial correction;
};
/// Drops loose and free edges. class(g) = class(reduced) + correction.
Reduction reduce(const LooseGraph& g);

/// Replaces the edge ab by one loose edge at a and one at b.
LooseGraph resolve(const LooseGraph& g, const Edge& e);
LooseGraph resolve(const LooseGraph& g, std::size_t a, std::size_t b);

/// Connected pieces. Each free edge is its own component.
std::vector<LooseGraph> components(const LooseGraph& g);
/// Vertex sets of the connected pieces, ignoring free edges.
std::vector<std::vector<std::size_t>> component_vertices(const LooseGraph& g);
bool is_connected(const LooseGraph& g);
/// Connected, no free edges, and the reduced graph is acyclic.
bool is_loose_tree(const LooseGraph& g);

struct SpanningTree {
    LooseGraph tree;
    /// Edges outside the tree, in resolution order.
    std::vector<Edge> fundamental;
};

/// Deterministic spanning tree: breadth-first from the smallest label,
/// neighbours visited in label order. Fundamental edges are ordered by the
/// label rank of their later endpoint, then of their earlier endpoint. With a
/// seed, the root, visiting order and fundamental order are randomized.
SpanningTree spanning_tree(const LooseGraph& g, std::optional<std::uint64_t> seed = std::nullopt);

/// Union of both graphs plus every edge between a base vertex and an apex
/// vertex.
LooseGraph cone(const LooseGraph& base, const LooseGraph& apex);

/// Real vertices carrying an embedding record: every anchor is a point of
/// the surrounding graph that some real vertices see as a direction, but that
/// has no chart of its own. Anchors are shared between the vertices they are
/// attached to, unlike loose edges, which are private.
struct AnchoredLooseGraph {
    LooseGraph base;
    std::vector<std::string> anchors;
    /// For each anchor, the attached base vertices (ascending).
    std::vector<std::vector<std::size_t>> attach;

    /// Reading in which every anchor attachment becomes a private loose edge.
    LooseGraph as_loose_graph() const;
};

/// Auxiliary graphs around an edge xy of a reduced graph.
struct NeighborhoodData {
    std::string x, y;
    LooseGraph delta;  // induced on the closed balls of x and y, minus x and y
    LooseGraph g;      // induced on the common neighbours
    AnchoredLooseGraph gL, gLx, gLy;
    AnchoredLooseGraph coneGLxy, coneGLxXy, coneGLxY, coneGLyXy, coneGLyX;
    /// Vertex labels of the connected components of gL. The same partition
    /// splits gLx and gLy, which share gL's vertex set.
    std::vector<std::vector<std::string>> components;
};

NeighborhoodData neighborhood(const LooseGraph& g, const Edge& e);

/// Ball of radius one around x and y, induced, loose edges dropped.
LooseGraph local_ball(const LooseGraph& g, const Edge& e);

}  // namespace f1zeta
