#include "f1zeta/pointcount.hpp"

#include "f1zeta/grothendieck.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace f1zeta {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p, std::uint32_t bound) : p_(p), inv_(p, 0) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p > bound) throw std::invalid_argument("prime " + std::to_string(p) + " exceeds the bound " + std::to_string(bound));
    for (std::uint32_t a = 1; a < p; ++a)
        for (std::uint32_t b = 1; b < p; ++b)
            if (a * b % p == 1) inv_[a] = b;
}

std::uint64_t count_work(const LooseGraph& g, std::uint32_t p) {
    std::uint64_t work = 0;
    auto sat_add = [&](std::uint64_t x) { work = work > UINT64_MAX - x ? UINT64_MAX : work + x; };
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        std::uint64_t t = 1;
        for (std::size_t i = 0; i < g.degree(v) && t != UINT64_MAX; ++i) t = t > UINT64_MAX / p ? UINT64_MAX : t * p;
        sat_add(t);
    }
    sat_add(std::uint64_t{g.free_count()} * (p - 1));
    return work;
}

Integer count_points(const LooseGraph& g, const PrimeField& field, std::uint64_t budget) {
    const std::uint32_t p = field.p();
    if (count_work(g, p) > budget) throw BudgetExceeded("point count exceeds the work budget");

    // Coordinates: vertices first, then one phantom per loose edge.
    const std::size_t n = g.num_vertices();
    std::vector<std::uint32_t> phantom_start(n);
    std::uint32_t next = static_cast<std::uint32_t>(n);
    for (std::size_t v = 0; v < n; ++v) {
        phantom_start[v] = next;
        next += g.loose(v);
    }

    // A point is stored as its sorted (coordinate, value) pairs, scaled so
    // that the first nonzero coordinate is 1.
    std::unordered_set<std::string> points;
    std::vector<std::uint32_t> dirs;
    std::vector<std::uint32_t> vals;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> support;
    for (std::size_t v = 0; v < n; ++v) {
        dirs.clear();
        for (std::size_t w : g.neighbors(v)) dirs.push_back(static_cast<std::uint32_t>(w));
        for (std::uint32_t i = 0; i < g.loose(v); ++i) dirs.push_back(phantom_start[v] + i);
        vals.assign(dirs.size(), 0);
        while (true) {
            support.clear();
            support.emplace_back(static_cast<std::uint32_t>(v), 1);
            for (std::size_t i = 0; i < dirs.size(); ++i)
                if (vals[i]) support.emplace_back(dirs[i], vals[i]);
            std::sort(support.begin(), support.end());
            const std::uint32_t scale = field.inverse(support.front().second);
            std::string key;
            key.reserve(support.size() * 6);
            for (auto [c, x] : support) {
                const std::uint32_t y = field.mul(x, scale);
                key.append(reinterpret_cast<const char*>(&c), sizeof c);
                key.push_back(static_cast<char>(y));
            }
            points.insert(std::move(key));

            std::size_t i = 0;
            while (i < vals.size() && ++vals[i] == p) vals[i++] = 0;
            if (i == vals.size()) break;
        }
    }
    return Integer(static_cast<unsigned long>(points.size())) + Integer(g.free_count()) * (p - 1);
}

Integer count_points(const LooseGraph& g, std::uint32_t p, std::uint64_t budget) {
    return count_points(g, PrimeField(p), budget);
}

VerifyReport verify(const LooseGraph& g, const std::vector<std::uint32_t>& primes, std::uint64_t budget) {
    VerifyReport r;
    r.classPolynomial = class_polynomial(g);
    r.ok = true;
    for (std::uint32_t p : primes) {
        PrimeCheck c{p, r.classPolynomial.eval(p), count_points(g, p, budget), false};
        c.ok = c.expected == c.counted;
        r.ok = r.ok && c.ok;
        r.checks.push_back(std::move(c));
    }
    r.eulerExpected = static_cast<unsigned long>(g.num_vertices());
    r.eulerGot = r.classPolynomial.eval(1);
    r.eulerOk = r.eulerExpected == r.eulerGot;
    r.ok = r.ok && r.eulerOk;
    return r;
}

std::string VerifyReport::to_json() const {
    nlohmann::json checksJson = nlohmann::json::array();
    for (const auto& c : checks)
        checksJson.push_back({{"prime", c.prime}, {"expected", c.expected.get_str()}, {"counted", c.counted.get_str()}, {"ok", c.ok}});
    nlohmann::json j = {{"checks", checksJson},
                        {"euler", {{"expected", eulerExpected.get_str()}, {"got", eulerGot.get_str()}, {"ok", eulerOk}}},
                        {"ok", ok}};
    return j.dump();
}

}  // namespace f1zeta
