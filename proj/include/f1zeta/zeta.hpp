#pragma once

// F1-zeta functions prod_k (t - k)^(-a_k) built from counting polynomials.

#include "f1zeta/loose_graph.hpp"
#include "f1zeta/polynomial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace f1zeta {

struct FactoredZeta {
    /// (k, a_k) with distinct k ascending and a_k != 0.
    std::vector<std::pair<unsigned long, Integer>> factors;

    /// The counting polynomial sum a_k L^k.
    Polynomial counting_polynomial() const;
    std::string to_json() const;
    friend bool operator==(const FactoredZeta&, const FactoredZeta&) = default;
};

FactoredZeta f1_zeta(const Polynomial& p);
/// Sum of coefficients, i.e. the polynomial at 1.
Integer euler_characteristic(const Polynomial& p);
/// Zeta of a loose tree straight from its degree profile.
FactoredZeta tree_zeta_closed_form(const LooseGraph& t);

enum class ZetaStyle { Inverse, Direct, FpDisplay };

/// Inverse: "t*(t-1)^2/(t-3)". Direct: the reciprocal in the same layout.
/// FpDisplay: prod (1 - p^(k-s))^(-a_k). The empty product prints as "1".
std::string format_zeta(const FactoredZeta& z, ZetaStyle style = ZetaStyle::Inverse);

}  // namespace f1zeta
