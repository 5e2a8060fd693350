#pragma once

// Brute-force reference computations. Nothing here calls into the library's
// residue tables, Euclidean division or pow_mod; they are the independent side
// of every oracle comparison in the test suites.

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

/// x^k mod m by k repeated multiplications.
inline std::int64_t naive_pow(std::int64_t x, std::int64_t k, std::int64_t m) {
    std::int64_t v = 1 % m;
    for (std::int64_t i = 0; i < k; ++i)
        v = v * x % m;
    return v;
}

/// {a coprime to m : some x in 1..m has x^k = a mod m}
inline std::vector<bool> residue_flags(std::int64_t m, std::int64_t k) {
    std::vector<std::int64_t> powers;
    for (std::int64_t x = 1; x <= m; ++x)
        powers.push_back(naive_pow(x % m, k, m));
    std::vector<bool> flags(static_cast<std::size_t>(m), false);
    for (std::int64_t a = 1; a < m; ++a) {
        if (gcd(a, m) != 1) continue;
        for (auto v : powers)
            if (v == a) {
                flags[a] = true;
                break;
            }
    }
    return flags;
}

struct Stats {
    std::optional<std::int64_t> n;
    std::int64_t R = 0;
    std::int64_t N = 0;
};

inline Stats stats(std::int64_t m, std::int64_t k) {
    auto res = residue_flags(m, k);
    Stats s;
    std::int64_t cr = 0, cn = 0;
    for (std::int64_t a = 1; a < m; ++a) {
        bool coprime = gcd(a, m) == 1;
        bool r = coprime && res[a];
        bool nr = coprime && !res[a];
        if (nr && !s.n) s.n = a;
        cr = r ? cr + 1 : 0;
        cn = nr ? cn + 1 : 0;
        if (cr > s.R) s.R = cr;
        if (cn > s.N) s.N = cn;
    }
    return s;
}

/// Residue-field model of O_K / (pi). Elements are (x, y) = x + y*theta with
/// theta^2 = t1*theta + t0.
///  - N(pi) = p prime: the field is Z/p, theta maps to the root `root` of the
///    minimal polynomial with pi | (theta - root); elements become x + y*root.
///  - pi ~ inert q: the field is F_q[theta], pairs reduced mod q.
struct FiniteFieldModel {
    std::int64_t q = 0;  // characteristic
    bool prime_field = true;
    std::int64_t root = 0;
    std::int64_t t1 = 0, t0 = 0;

    using Elem = std::pair<std::int64_t, std::int64_t>;

    static std::int64_t md(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

    Elem reduce(std::int64_t x, std::int64_t y) const {
        if (prime_field) return {md(x + y * root, q), 0};
        return {md(x, q), md(y, q)};
    }

    Elem mul(Elem a, Elem b) const {
        if (prime_field) return {a.first * b.first % q, 0};
        std::int64_t yy = a.second * b.second % q;
        return {md(a.first * b.first + yy * t0, q), md(a.first * b.second + a.second * b.first + yy * t1, q)};
    }

    std::vector<Elem> all_nonzero() const {
        std::vector<Elem> out;
        if (prime_field) {
            for (std::int64_t x = 1; x < q; ++x) out.push_back({x, 0});
        } else {
            for (std::int64_t x = 0; x < q; ++x)
                for (std::int64_t y = 0; y < q; ++y)
                    if (x || y) out.push_back({x, y});
        }
        return out;
    }

    std::set<Elem> kth_powers(std::int64_t k) const {
        std::set<Elem> out;
        for (auto e : all_nonzero()) {
            Elem v{1, 0};
            for (std::int64_t i = 0; i < k; ++i) v = mul(v, e);
            out.insert(v);
        }
        return out;
    }
};

}  // namespace oracle
