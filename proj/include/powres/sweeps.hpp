#pragma once

/**
 * @file sweeps.hpp
 * @brief Exact-integer checks of the least non-residue and run-length bounds.
 *
 * Each bound of the form x < sqrt(...) + c is decided through an equivalent
 * integer inequality; nothing here touches floating point:
 *
 *   n < sqrt(m) + 1/2     <=>  (2n-1)^2 < 4m
 *   n < sqrt(p/2) + 1/4   <=>  (4n-1)^2 < 8p
 *   n < sqrt(p/3) + 2     <=>  3(n-2)^2 < p     (n >= 2)
 *   N < sqrt(p)           <=>  N^2 < p
 *   n < sqrt(p/4)         <=>  4n^2 < p
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "powres/arith.hpp"
#include "powres/check_record.hpp"
#include "powres/parallel.hpp"
#include "powres/residue.hpp"

namespace powres {

namespace detail {

inline CheckRecord stats_record(CheckName name, const RunStats& s) {
    CheckRecord r;
    r.name = name;
    r.m = s.m;
    r.k = s.k;
    r.n = s.n;
    r.R = s.R;
    r.N = s.N;
    return r;
}

inline CheckRecord vacuous(CheckRecord r, const std::string& reason) {
    r.pass = true;
    r.extra = "vacuous:" + reason;
    return r;
}

inline void require_odd_prime_stats(const RunStats& s, const char* what) {
    if (!s.prime_modulus || s.m < 3)
        throw std::invalid_argument(std::string(what) + ": modulus must be an odd prime");
}

inline void require_nontrivial_gcd(const RunStats& s, const char* what) {
    if (std::gcd(s.k, s.m - 1) <= 1)
        throw std::invalid_argument(std::string(what) + ": requires gcd(k, p-1) > 1");
}

inline std::vector<std::int64_t> distinct_sorted(std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace detail

/// (p, gcd(k, p-1)) pairs where the Hudson bound is known to fail. The residue
/// set only depends on gcd(k, p-1), so e.g. (23, 4) fails exactly like (23, 2).
inline const std::set<std::pair<std::int64_t, std::int64_t>>& hudson_exceptions() {
    static const std::set<std::pair<std::int64_t, std::int64_t>> known{{23, 2}, {71, 2}};
    return known;
}

inline bool is_hudson_exception(std::int64_t p, std::int64_t k) {
    return hudson_exceptions().contains({p, std::gcd(k, p - 1)});
}

inline bool is_hummel_exception(std::int64_t p) { return p == 13; }

inline CheckRecord check_theorem1_i(const RunStats& s) {
    auto r = detail::stats_record(CheckName::thm1_i, s);
    if (!s.n)
        return detail::vacuous(std::move(r), "no_nonresidue");
    std::int64_t n = *s.n;
    r.pass = checked_mul(s.R, n) < s.m;
    if (s.prime_modulus) {
        std::int64_t t = 2 * n - 1;
        r.pass = r.pass && checked_mul(t, t) < checked_mul(4, s.m);
    }
    return r;
}

inline CheckRecord check_theorem1_ii(const RunStats& s) {
    detail::require_odd_prime_stats(s, "check_theorem1_ii");
    detail::require_nontrivial_gcd(s, "check_theorem1_ii");
    auto r = detail::stats_record(CheckName::thm1_ii, s);
    if (!minus_one_is_kth_residue(s.m, s.k))
        return detail::vacuous(std::move(r), "minus_one_nonresidue");
    if (!s.n)
        return detail::vacuous(std::move(r), "no_nonresidue");
    if (*s.n == 2)
        return detail::vacuous(std::move(r), "n_equals_2");
    std::int64_t t = 4 * *s.n - 1;
    r.pass = checked_mul(t, t) < checked_mul(8, s.m);
    return r;
}

/// N(n-1) < p-1, R*min(R,N) < p and, for k = 2, R*N < p. Always three records.
inline std::vector<CheckRecord> check_remark_inequalities(const RunStats& s) {
    detail::require_odd_prime_stats(s, "check_remark_inequalities");
    detail::require_nontrivial_gcd(s, "check_remark_inequalities");
    const std::int64_t p = s.m;
    const std::int64_t N = s.N.value_or(0);
    std::vector<CheckRecord> out;

    auto a = detail::stats_record(CheckName::remark_nonresidue_run, s);
    if (!s.n)
        a = detail::vacuous(std::move(a), "no_nonresidue");
    else
        a.pass = checked_mul(N, *s.n - 1) < p - 1;
    out.push_back(std::move(a));

    auto b = detail::stats_record(CheckName::remark_run_product, s);
    b.pass = checked_mul(s.R, std::min(s.R, N)) < p;
    out.push_back(std::move(b));

    auto c = detail::stats_record(CheckName::remark_quadratic_runs, s);
    if (s.k != 2)
        c = detail::vacuous(std::move(c), "k_not_2");
    else
        c.pass = checked_mul(s.R, N) < p;
    out.push_back(std::move(c));
    return out;
}

/// Hudson, Brauer, Hummel and the observational GMW bound. Always four records.
inline std::vector<CheckRecord> check_classical_bounds(const RunStats& s) {
    detail::require_odd_prime_stats(s, "check_classical_bounds");
    const std::int64_t p = s.m;
    const std::int64_t N = s.N.value_or(0);
    std::vector<CheckRecord> out;

    auto hud = detail::stats_record(CheckName::hudson, s);
    if (std::gcd(s.k, p - 1) <= 1 || !s.n) {
        hud = detail::vacuous(std::move(hud), "no_nonresidue");
    } else {
        std::int64_t t = *s.n - 2;
        hud.pass = *s.n <= 2 || checked_mul(3, checked_mul(t, t)) < p;
        hud.known_exception = !hud.pass && is_hudson_exception(p, s.k);
    }
    out.push_back(std::move(hud));

    auto brauer = detail::stats_record(CheckName::brauer, s);
    if (s.k != 2 || p % 4 != 3) {
        brauer = detail::vacuous(std::move(brauer), "needs_k2_p3mod4");
    } else {
        std::int64_t mx = std::max(s.R, N);
        brauer.pass = checked_mul(mx, mx) < p;
    }
    out.push_back(std::move(brauer));

    auto hummel = detail::stats_record(CheckName::hummel, s);
    if (s.k != 2) {
        hummel = detail::vacuous(std::move(hummel), "needs_k2");
    } else {
        hummel.pass = checked_mul(N, N) < p;
        hummel.known_exception = !hummel.pass && is_hummel_exception(p);
    }
    out.push_back(std::move(hummel));

    auto gmw = detail::stats_record(CheckName::gmw, s);
    if (s.k != 2 || p <= 3705 || p % 4 != 1 || !s.n) {
        gmw = detail::vacuous(std::move(gmw), "needs_k2_p1mod4_above_3705");
    } else {
        gmw.pass = checked_mul(4, checked_mul(*s.n, *s.n)) < p;
        gmw.extra = "observational";
    }
    out.push_back(std::move(gmw));
    return out;
}

/// All nine checks for one odd prime p and exponent k with gcd(k, p-1) > 1.
inline std::vector<CheckRecord> check_prime(std::int64_t p, std::int64_t k) {
    RunStats s = run_stats(p, k);
    std::vector<CheckRecord> out;
    out.push_back(check_theorem1_i(s));
    out.push_back(check_theorem1_ii(s));
    for (auto& r : check_remark_inequalities(s))
        out.push_back(std::move(r));
    for (auto& r : check_classical_bounds(s))
        out.push_back(std::move(r));
    return out;
}

inline std::vector<CheckRecord> sweep_primes(std::int64_t p_max, const std::vector<std::int64_t>& k_set,
                                             unsigned workers = 1) {
    if (p_max < 3)
        throw std::invalid_argument("sweep_primes: p_max must be at least 3");
    for (auto k : k_set)
        if (k < 1)
            throw std::invalid_argument("sweep_primes: exponents must be positive");

    const auto ks = detail::distinct_sorted(k_set);
    std::vector<std::pair<std::int64_t, std::int64_t>> jobs;
    for (auto p : primes_up_to(p_max)) {
        if (p == 2)
            continue;
        for (auto k : ks)
            if (std::gcd(k, p - 1) > 1)
                jobs.emplace_back(p, k);
    }

    auto records = parallel_collect(jobs.size(), workers,
                                    [&](std::size_t i) { return check_prime(jobs[i].first, jobs[i].second); });
    sort_records(records);
    return records;
}

/// R*n < m (and the prime-only square-root form) over every modulus 2..m_max.
inline std::vector<CheckRecord> sweep_moduli(std::int64_t m_max, const std::vector<std::int64_t>& k_set,
                                             unsigned workers = 1) {
    const auto ks = detail::distinct_sorted(k_set);
    std::vector<std::pair<std::int64_t, std::int64_t>> jobs;
    for (std::int64_t m = 2; m <= m_max; ++m)
        for (auto k : ks)
            jobs.emplace_back(m, k);

    auto records = parallel_collect(jobs.size(), workers, [&](std::size_t i) {
        return std::vector<CheckRecord>{check_theorem1_i(run_stats(jobs[i].first, jobs[i].second))};
    });
    sort_records(records);
    return records;
}

}  // namespace powres
