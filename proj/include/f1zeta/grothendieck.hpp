#pragma once

// Class polynomials [Γ] in Z[L] of loose graphs.

#include "f1zeta/loose_graph.hpp"
#include "f1zeta/polynomial.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace f1zeta {

struct TreeProfile {
    std::map<unsigned, long> degreeCounts;  // degree d > 1 -> number of vertices
    long I = -1;
    long E = 0;
};

/// Degree statistics of a loose tree (loose edges count toward degrees).
TreeProfile tree_profile(const LooseGraph& t);
/// Closed formula for loose trees; an isolated vertex gives 1.
Polynomial tree_class(const LooseGraph& t);
Polynomial star_class(long n, long k);

struct SurgeryStep {
    LooseGraph graphBefore;  // the graph with resolvedEdge still present
    Edge resolvedEdge;
    Polynomial delta;    // class after resolving minus class before
    Polynomial running;  // class of graphBefore
};

struct SurgeryTrace {
    std::vector<SurgeryStep> steps;
    LooseGraph finalTree;
    Polynomial finalTreeClass;

    const Polynomial& result() const { return steps.empty() ? finalTreeClass : steps.back().running; }
};

/// Recursive class computation with a shared memo. Safe for concurrent use.
class ClassEngine {
public:
    /// A seed randomizes the spanning trees used for surgery.
    explicit ClassEngine(std::optional<std::uint64_t> seed = std::nullopt) : seed_(seed) {}

    Polynomial class_polynomial(const LooseGraph& g);
    /// Class of the locus covered by the charts of the real vertices only.
    Polynomial embedded_class(const AnchoredLooseGraph& h);
    /// class(resolve(g, e)) - class(g), computed from the neighbourhood of e.
    Polynomial resolution_difference(const LooseGraph& g, const Edge& e);
    /// Class of the ball around e (reduced) before and after resolving e.
    Polynomial local_before(const LooseGraph& g, const Edge& e);
    Polynomial local_after(const LooseGraph& g, const Edge& e);
    /// Class of cone(base, apex) from the classes of the parts.
    Polynomial cone_class(const LooseGraph& base, const LooseGraph& apex);
    SurgeryTrace surgery_trace(const LooseGraph& g);

    std::size_t memo_size() const;

private:
    using Measure = std::array<std::size_t, 3>;

    Polynomial compute(const LooseGraph& g, const Measure& bound);
    Polynomial embedded(const AnchoredLooseGraph& h, const Measure& bound);
    Polynomial difference(const LooseGraph& reduced, const Edge& e, const Measure& bound);
    Polynomial local_common(const LooseGraph& g, const Edge& e, bool after);

    std::optional<std::uint64_t> seed_;
    mutable std::shared_mutex mu_;
    std::unordered_map<std::string, Polynomial> memo_;
};

/// Convenience wrappers over a process-wide engine.
Polynomial class_polynomial(const LooseGraph& g);
Polynomial resolution_difference(const LooseGraph& g, const Edge& e);
Polynomial local_before(const LooseGraph& g, const Edge& e);
Polynomial local_after(const LooseGraph& g, const Edge& e);
Polynomial cone_class(const LooseGraph& base, const LooseGraph& apex);
SurgeryTrace surgery_trace(const LooseGraph& g);

/// Memo key: serialization after a degree-refined relabelling. Isomorphic
/// graphs often, but not always, share a key; distinct keys are always safe.
std::string canonical_key(const LooseGraph& g);

}  // namespace f1zeta
