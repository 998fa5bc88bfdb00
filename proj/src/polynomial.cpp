#include "f1zeta/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace f1zeta {

Polynomial::Polynomial(long constant) : coeffs_{Integer(constant)} { normalize(); }

Polynomial::Polynomial(const Integer& constant) : coeffs_{constant} { normalize(); }

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

Polynomial Polynomial::monomial(std::size_t k, const Integer& c) {
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

Integer Polynomial::leading() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }

Integer Polynomial::eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

std::string Polynomial::to_string(std::string_view symbol) const {
    if (is_zero()) return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
        const Integer& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (k == 0 || mag != 1) out += mag.get_str();
        if (k >= 1) out += symbol;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::logic_error("exact_divide: division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::logic_error("exact_divide: inexact polynomial division");
    std::vector<Integer> rem = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    const Integer& lead = b.coeffs().back();
    std::vector<Integer> quot(rem.size() - db);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Integer& top = rem[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw std::logic_error("exact_divide: inexact polynomial division");
        Integer q = top / lead;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
        quot[k] = std::move(q);
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return c != 0; }))
        throw std::logic_error("exact_divide: inexact polynomial division");
    return Polynomial(std::move(quot));
}

std::vector<std::string> to_coefficient_strings(const Polynomial& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

Polynomial from_coefficient_strings(const std::vector<std::string>& coeffs) {
    std::vector<Integer> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs) {
        Integer c;
        if (s.empty() || c.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: '" + s + "'");
        v.push_back(c);
    }
    return Polynomial(std::move(v));
}

}  // namespace f1zeta
