#include "f1zeta/zeta.hpp"

#include "f1zeta/grothendieck.hpp"

#include <json.hpp>

#include <map>

namespace f1zeta {

Polynomial FactoredZeta::counting_polynomial() const {
    Polynomial p;
    for (const auto& [k, a] : factors) p += Polynomial::monomial(k, a);
    return p;
}

std::string FactoredZeta::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, a] : factors) {
        nlohmann::json exp = a.fits_slong_p() ? nlohmann::json(a.get_si()) : nlohmann::json(a.get_str());
        arr.push_back({k, exp});
    }
    return nlohmann::json{{"factors", arr}}.dump();
}

FactoredZeta f1_zeta(const Polynomial& p) {
    FactoredZeta z;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        if (p.coeffs()[k] != 0) z.factors.emplace_back(k, p.coeffs()[k]);
    return z;
}

Integer euler_characteristic(const Polynomial& p) { return p.eval(1); }

FactoredZeta tree_zeta_closed_form(const LooseGraph& t) {
    const TreeProfile prof = tree_profile(t);
    if (t.num_edges() == 0 && t.total_loose() == 0) throw GraphError("closed form needs a tree with at least one edge");
    std::map<unsigned long, Integer> a;
    a[0] += prof.E + prof.I;
    a[1] += -prof.I;
    for (auto [d, n] : prof.degreeCounts) a[d] += n;
    FactoredZeta z;
    for (auto& [k, v] : a)
        if (v != 0) z.factors.emplace_back(k, v);
    return z;
}

namespace {

std::string linear(unsigned long k) { return k == 0 ? "t" : "(t-" + std::to_string(k) + ")"; }

std::string power(const std::string& base, const Integer& e) { return e == 1 ? base : base + "^" + e.get_str(); }

// Numerator holds factors with positive exponent, denominator the rest.
std::string fraction(const std::vector<std::pair<unsigned long, Integer>>& fs) {
    std::string num, den;
    int nden = 0;
    for (const auto& [k, e] : fs) {
        if (e > 0) {
            num += (num.empty() ? "" : "*") + power(linear(k), e);
        } else {
            den += (den.empty() ? "" : "*") + power(linear(k), -e);
            ++nden;
        }
    }
    if (num.empty()) num = "1";
    if (nden == 0) return num;
    return num + "/" + (nden > 1 ? "(" + den + ")" : den);
}

}  // namespace

std::string format_zeta(const FactoredZeta& z, ZetaStyle style) {
    if (z.factors.empty()) return "1";
    switch (style) {
    case ZetaStyle::Inverse:
        return fraction(z.factors);
    case ZetaStyle::Direct: {
        auto flipped = z.factors;
        for (auto& f : flipped) f.second = -f.second;
        return fraction(flipped);
    }
    case ZetaStyle::FpDisplay: {
        std::string out;
        for (const auto& [k, a] : z.factors) {
            std::string base = k == 0 ? "(1 - p^(-s))" : "(1 - p^(" + std::to_string(k) + "-s))";
            Integer e = -a;
            if (!out.empty()) out += "*";
            out += e == 1 ? base : base + "^" + (e < 0 ? "(" + e.get_str() + ")" : e.get_str());
        }
        return out;
    }
    }
    return "1";
}

}  // namespace f1zeta
