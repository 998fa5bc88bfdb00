#include "f1zeta/poly_matrix.hpp"

#include <algorithm>
#include <utility>

namespace f1zeta {

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial(1);
    return m;
}

long PolyMatrix::max_entry_degree() const {
    long d = 0;
    for (const auto& p : a_) d = std::max(d, p.degree());
    return d;
}

Polynomial det(PolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial(1);
    bool negate = false;
    Polynomial prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m(r, k).is_zero()) ++r;
            if (r == n) return {};
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = exact_divide(t, prev);
            }
            m(i, k) = Polynomial();
        }
        prev = m(k, k);
    }
    Polynomial d = m(n - 1, n - 1);
    return negate ? -d : d;
}

}  // namespace f1zeta
