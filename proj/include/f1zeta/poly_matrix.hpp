#pragma once

#include "f1zeta/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace f1zeta {

/// Dense square matrix of polynomials.
class PolyMatrix {
public:
    explicit PolyMatrix(std::size_t n) : n_(n), a_(n * n) {}

    static PolyMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    Polynomial& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Polynomial& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    /// Largest entry degree (0 for an all-constant or empty matrix).
    long max_entry_degree() const;

private:
    std::size_t n_;
    std::vector<Polynomial> a_;
};

/// Determinant by fraction-free Bareiss elimination. Every division is
/// checked to be exact; a failure throws std::logic_error.
Polynomial det(PolyMatrix m);

}  // namespace f1zeta
