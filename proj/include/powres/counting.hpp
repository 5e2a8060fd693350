#pragma once

/**
 * @file counting.hpp
 * @brief Half-interval fractional-part counts r_l(a) and the identity
 *        r_m(a) - eps * r_n(a) = floor(a/2) * b  for  m - eps*n = 2ab.
 *
 * r_l(a) counts integers 0 < r < l/2 with {ar/l} > 1/2 (strict) or >= 1/2
 * (weak). For integers, {ar/l} > 1/2 iff 2 (ar mod l) > l, so no rational
 * arithmetic is needed.
 */

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "powres/arith.hpp"
#include "powres/check_record.hpp"
#include "powres/parallel.hpp"

namespace powres {

enum class CountMode { strict, weak };

inline const char* to_string(CountMode mode) { return mode == CountMode::strict ? "strict" : "weak"; }

inline std::int64_t half_count(std::int64_t l, std::int64_t a, CountMode mode) {
    if (l < 1)
        throw std::invalid_argument("half_count: l must be positive");
    const std::int64_t step = mod_floor(a, l);
    std::int64_t count = 0;
    std::int64_t frac = 0;  // a*r mod l
    for (std::int64_t r = 1; 2 * r < l; ++r) {
        frac += step;
        if (frac >= l)
            frac -= l;
        if (mode == CountMode::strict ? 2 * frac > l : 2 * frac >= l)
            ++count;
    }
    return count;
}

struct IdentityCase {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t n = 0;
    int eps = 1;
    std::int64_t m = 0;
    CountMode mode = CountMode::strict;

    /// m is derived from m - eps*n = 2ab.
    static IdentityCase make(std::int64_t a, std::int64_t b, std::int64_t n, int eps, CountMode mode) {
        if (a < 1 || b < 1 || n < 1)
            throw std::invalid_argument("IdentityCase: a, b, n must be positive");
        if (eps != 1 && eps != -1)
            throw std::invalid_argument("IdentityCase: eps must be +1 or -1");
        const std::int64_t m = checked_add(eps * n, checked_mul(2, checked_mul(a, b)));
        if (m < 1)
            throw std::invalid_argument("IdentityCase: derived m is not positive");
        return {a, b, n, eps, m, mode};
    }

    bool coprime() const { return std::gcd(a, m) == 1 && std::gcd(a, n) == 1; }
    bool operator==(const IdentityCase&) const = default;
};

inline std::int64_t expected_delta(const IdentityCase& c) {
    std::int64_t delta = (c.a / 2) * c.b;
    if (c.mode == CountMode::weak && c.eps == -1) {
        const std::int64_t g = std::gcd(c.a, c.n);
        if ((c.n / g) % 2 == 1)
            delta -= g / 2;
    }
    return delta;
}

inline CheckRecord verify_case(const IdentityCase& c) {
    if (c.mode == CountMode::strict && !c.coprime())
        throw std::invalid_argument("verify_case: strict mode needs gcd(a,m) = gcd(a,n) = 1");
    const std::int64_t lhs = half_count(c.m, c.a, c.mode) - c.eps * half_count(c.n, c.a, c.mode);
    const std::int64_t expected = expected_delta(c);

    CheckRecord r;
    r.name = c.mode == CountMode::strict ? CheckName::thm3_strict : CheckName::thm3_weak;
    r.m = c.m;
    r.extra = "a=" + std::to_string(c.a) + ";b=" + std::to_string(c.b) + ";n=" + std::to_string(c.n) +
              ";eps=" + std::to_string(c.eps) + ";lhs=" + std::to_string(lhs) +
              ";expected=" + std::to_string(expected);
    r.pass = lhs == expected;
    return r;
}

/// All (a, b, n, eps) within the bounds, a-major then b, n, eps = +1 before -1.
inline std::vector<IdentityCase> enumerate_cases(std::int64_t a_max, std::int64_t b_max, std::int64_t n_max,
                                                 CountMode mode) {
    if (a_max < 1 || b_max < 1 || n_max < 1)
        throw std::invalid_argument("enumerate_cases: bounds must be positive");
    std::vector<IdentityCase> out;
    for (std::int64_t a = 1; a <= a_max; ++a)
        for (std::int64_t b = 1; b <= b_max; ++b)
            for (std::int64_t n = 1; n <= n_max; ++n)
                for (int eps : {1, -1}) {
                    if (eps * n + 2 * a * b < 1)
                        continue;
                    auto c = IdentityCase::make(a, b, n, eps, mode);
                    if (mode == CountMode::strict && !c.coprime())
                        continue;
                    out.push_back(c);
                }
    return out;
}

inline std::vector<CheckRecord> sweep_identity(std::int64_t a_max, std::int64_t b_max, std::int64_t n_max,
                                               CountMode mode, unsigned workers = 1) {
    const auto cases = enumerate_cases(a_max, b_max, n_max, mode);
    auto records = parallel_collect(cases.size(), workers,
                                    [&](std::size_t i) { return std::vector<CheckRecord>{verify_case(cases[i])}; });
    sort_records(records);
    return records;
}

/// (-1)^r_p(a): the Legendre symbol via the half-interval count.
inline int gauss_lemma_symbol(std::int64_t a, std::int64_t p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("gauss_lemma_symbol: p must be an odd prime");
    if (a % p == 0)
        throw std::domain_error("gauss_lemma_symbol: p divides a");
    return half_count(p, mod_floor(a, p), CountMode::strict) % 2 == 0 ? 1 : -1;
}

/// One record per odd prime p <= p_max comparing the count parity against Euler's criterion for all 1 <= a < p.
inline std::vector<CheckRecord> sweep_gauss_lemma(std::int64_t p_max, unsigned workers = 1) {
    std::vector<std::int64_t> primes;
    for (auto p : primes_up_to(p_max))
        if (p > 2)
            primes.push_back(p);
    auto records = parallel_collect(primes.size(), workers, [&](std::size_t i) {
        const std::int64_t p = primes[i];
        std::int64_t mismatches = 0;
        std::int64_t first = 0;
        for (std::int64_t a = 1; a < p; ++a) {
            if (gauss_lemma_symbol(a, p) != legendre_euler(a, p)) {
                if (mismatches++ == 0)
                    first = a;
            }
        }
        CheckRecord r;
        r.name = CheckName::gauss_lemma;
        r.m = p;
        r.k = 2;
        r.pass = mismatches == 0;
        r.extra = "checked=" + std::to_string(p - 1) + ";mismatches=" + std::to_string(mismatches);
        if (mismatches)
            r.extra += ";first=" + std::to_string(first);
        return std::vector<CheckRecord>{r};
    });
    sort_records(records);
    return records;
}

}  // namespace powres
