#pragma once

// Exact univariate polynomials with arbitrary-precision integer coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace f1zeta {

using Integer = mpz_class;

/// Univariate polynomial over Z. Coefficient i multiplies x^i. The zero
/// polynomial has an empty coefficient list; every constructor normalizes
/// away high-order zeros.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long constant);  // NOLINT(google-explicit-constructor)
    explicit Polynomial(const Integer& constant);
    explicit Polynomial(std::vector<Integer> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    /// c * x^k
    static Polynomial monomial(std::size_t k, const Integer& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of x^k (zero past the degree).
    Integer coeff(std::size_t k) const;
    Integer leading() const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    Integer eval(const Integer& x) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    Polynomial pow(unsigned e) const;

    /// Human-readable form in descending powers, e.g. "5L^4 - 4L + 4".
    std::string to_string(std::string_view symbol = "L") const;

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

/// Exact quotient a / b. Throws std::logic_error when b does not divide a
/// over Z (which signals a bug in the caller) or b is zero.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Little-endian coefficients as decimal strings, and back.
std::vector<std::string> to_coefficient_strings(const Polynomial& p);
Polynomial from_coefficient_strings(const std::vector<std::string>& coeffs);

/// The indeterminate (L, u or t depending on context).
inline Polynomial indeterminate() { return Polynomial::monomial(1); }

}  // namespace f1zeta
