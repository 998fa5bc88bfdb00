#pragma once

// Brute-force count of F_p-rational points, used as an oracle for class
// polynomials.

#include "f1zeta/loose_graph.hpp"
#include "f1zeta/polynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace f1zeta {

class PrimeField {
public:
    static constexpr std::uint32_t kDefaultBound = 13;

    explicit PrimeField(std::uint32_t p, std::uint32_t bound = kDefaultBound);
    std::uint32_t p() const { return p_; }
    std::uint32_t inverse(std::uint32_t a) const { return inv_[a]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return a * b % p_; }

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> inv_;
};

bool is_prime(std::uint64_t n);

/// Thrown when a count would exceed the configured work budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultBudget = 20'000'000;

/// Estimated enumeration work: sum over vertices of p^deg plus one per free
/// edge point.
std::uint64_t count_work(const LooseGraph& g, std::uint32_t p);

/// Number of points of the scheme over F_p, by enumerating the affine chart
/// of every vertex into a set of normalized projective points.
Integer count_points(const LooseGraph& g, const PrimeField& field, std::uint64_t budget = kDefaultBudget);
Integer count_points(const LooseGraph& g, std::uint32_t p, std::uint64_t budget = kDefaultBudget);

struct PrimeCheck {
    std::uint32_t prime;
    Integer expected;
    Integer counted;
    bool ok;
};

struct VerifyReport {
    Polynomial classPolynomial;
    std::vector<PrimeCheck> checks;
    Integer eulerExpected;  // number of vertices
    Integer eulerGot;       // class polynomial at 1
    bool eulerOk = false;
    bool ok = false;

    std::string to_json() const;
};

VerifyReport verify(const LooseGraph& g, const std::vector<std::uint32_t>& primes,
                    std::uint64_t budget = kDefaultBudget);

}  // namespace f1zeta
