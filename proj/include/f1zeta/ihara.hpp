#pragma once

// Inverse Ihara zeta functions of finite graphs.

#include "f1zeta/loose_graph.hpp"
#include "f1zeta/poly_matrix.hpp"
#include "f1zeta/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace f1zeta {

/// The graph does not satisfy the hypotheses of the Ihara formulas.
class IharaDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct IharaInput {
    LooseGraph graph;
    std::vector<std::vector<long>> adjacency;
    std::vector<long> q;  // degree - 1 per vertex
    long rank = 0;        // |E| - |V| + 1

    /// Validates: connected, no loose or free edges, no vertex of degree 1,
    /// rank at least 1.
    static IharaInput from(const LooseGraph& g);
};

/// (1 - u^2)^(r-1) det(I - A u + Q u^2).
Polynomial ihara_inverse(const LooseGraph& g);
/// det(I - u T) with T the 2|E| x 2|E| edge adjacency matrix.
Polynomial edge_matrix_inverse(const LooseGraph& g);

/// The matrices behind the two formulas, exposed for tests.
PolyMatrix bass_hashimoto_matrix(const IharaInput& in);
PolyMatrix edge_adjacency_matrix(const IharaInput& in);

}  // namespace f1zeta
