#pragma once

/**
 * @file quad_ring.hpp
 * @brief Exact arithmetic in the norm-Euclidean imaginary quadratic rings
 *        O_K, K = Q(sqrt d), d in {-1, -2, -3, -7, -11}.
 *
 * Elements are x + y*theta with integer coordinates, where theta = sqrt(d)
 * for d = -1, -2 and theta = (1 + sqrt(d))/2 for d = -3, -7, -11. The norm is
 * the positive definite binary form A x^2 + B xy + C y^2.
 *
 * Residues modulo pi are never canonicalised: remainders of the Euclidean
 * division are not unique, so every congruence test goes through divides().
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "powres/arith.hpp"

namespace powres {

struct ring_mismatch : std::invalid_argument {
    ring_mismatch() : std::invalid_argument("operands belong to different quadratic rings") {}
};

struct no_nonresidue : std::domain_error {
    using std::domain_error::domain_error;
};

class RingSpec {
public:
    static constexpr std::array<int, 5> supported{-1, -2, -3, -7, -11};

    constexpr explicit RingSpec(int d) : d_(d) {
        if (std::find(supported.begin(), supported.end(), d) == supported.end())
            throw std::invalid_argument("unsupported quadratic ring d = " + std::to_string(d));
    }

    constexpr int d() const { return d_; }
    /// theta = (1 + sqrt d)/2 rather than sqrt d.
    constexpr bool half_integral() const { return d_ % 4 == -3 || d_ % 4 == 1; }

    constexpr std::int64_t norm_a() const { return 1; }
    constexpr std::int64_t norm_b() const { return half_integral() ? 1 : 0; }
    constexpr std::int64_t norm_c() const { return half_integral() ? (1 - d_) / 4 : -d_; }

    /// Field discriminant: d for d = 1 mod 4, 4d otherwise.
    constexpr std::int64_t discriminant() const { return half_integral() ? d_ : 4 * d_; }

    constexpr std::size_t unit_count() const { return d_ == -1 ? 4 : d_ == -3 ? 6 : 2; }

    constexpr bool operator==(const RingSpec&) const = default;

private:
    int d_;
};

struct QuadInt {
    RingSpec ring;
    std::int64_t x = 0;
    std::int64_t y = 0;

    constexpr QuadInt(RingSpec r, std::int64_t x_, std::int64_t y_ = 0) : ring(r), x(x_), y(y_) {}

    bool is_zero() const { return x == 0 && y == 0; }
    bool operator==(const QuadInt&) const = default;

    friend std::ostream& operator<<(std::ostream& os, const QuadInt& a) {
        return os << '(' << a.x << ',' << a.y << ')';
    }
};

inline std::string to_string(const QuadInt& a) {
    return "(" + std::to_string(a.x) + "," + std::to_string(a.y) + ")";
}

namespace detail {
inline void same_ring(const QuadInt& a, const QuadInt& b) {
    if (!(a.ring == b.ring))
        throw ring_mismatch();
}
}  // namespace detail

inline QuadInt qi_add(const QuadInt& a, const QuadInt& b) {
    detail::same_ring(a, b);
    return {a.ring, checked_add(a.x, b.x), checked_add(a.y, b.y)};
}

inline QuadInt qi_sub(const QuadInt& a, const QuadInt& b) {
    detail::same_ring(a, b);
    return {a.ring, checked_sub(a.x, b.x), checked_sub(a.y, b.y)};
}

inline QuadInt qi_neg(const QuadInt& a) { return {a.ring, checked_sub(0, a.x), checked_sub(0, a.y)}; }

inline QuadInt qi_mul(const QuadInt& a, const QuadInt& b) {
    detail::same_ring(a, b);
    const std::int64_t d = a.ring.d();
    std::int64_t yy = checked_mul(a.y, b.y);
    std::int64_t cross = checked_add(checked_mul(a.x, b.y), checked_mul(b.x, a.y));
    std::int64_t xx = checked_mul(a.x, b.x);
    if (!a.ring.half_integral())
        return {a.ring, checked_add(xx, checked_mul(d, yy)), cross};
    // theta^2 = theta + (d-1)/4
    return {a.ring, checked_add(xx, checked_mul(yy, (d - 1) / 4)), checked_add(cross, yy)};
}

inline QuadInt qi_conj(const QuadInt& a) {
    if (!a.ring.half_integral())
        return {a.ring, a.x, checked_sub(0, a.y)};
    // conj(theta) = 1 - theta
    return {a.ring, checked_add(a.x, a.y), checked_sub(0, a.y)};
}

inline std::int64_t qi_norm(const QuadInt& a) {
    const RingSpec& r = a.ring;
    std::int64_t v = checked_mul(a.x, a.x);
    v = checked_add(v, checked_mul(r.norm_b(), checked_mul(a.x, a.y)));
    return checked_add(v, checked_mul(r.norm_c(), checked_mul(a.y, a.y)));
}

inline QuadInt qi_one(RingSpec r) { return {r, 1, 0}; }
inline QuadInt qi_zero(RingSpec r) { return {r, 0, 0}; }

struct DivMod {
    QuadInt q;
    QuadInt r;
};

/// alpha = q*beta + r with N(r) < N(beta). The quotient is chosen from the 3x3
/// integer neighbourhood of the rounded exact quotient, minimising N(r) with
/// ties going to the lexicographically smallest (q.x, q.y).
inline DivMod euclid_divmod(const QuadInt& alpha, const QuadInt& beta) {
    detail::same_ring(alpha, beta);
    if (beta.is_zero())
        throw std::domain_error("euclid_divmod: division by zero");
    const std::int64_t nb = qi_norm(beta);
    const QuadInt num = qi_mul(alpha, qi_conj(beta));
    const std::int64_t u = round_div(num.x, nb);
    const std::int64_t v = round_div(num.y, nb);

    bool have = false;
    DivMod best{qi_zero(alpha.ring), alpha};
    std::int64_t best_norm = 0;
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
        for (std::int64_t dy = -1; dy <= 1; ++dy) {
            QuadInt q{alpha.ring, u + dx, v + dy};
            QuadInt r = qi_sub(alpha, qi_mul(q, beta));
            std::int64_t nr = qi_norm(r);
            if (!have || nr < best_norm || (nr == best_norm && std::tie(q.x, q.y) < std::tie(best.q.x, best.q.y))) {
                best = {q, r};
                best_norm = nr;
                have = true;
            }
        }
    }
    if (best_norm >= nb)
        throw std::logic_error("euclid_divmod: no remainder of smaller norm in the search neighbourhood");
    return best;
}

/// Exact divisibility test: beta | alpha iff N(beta) divides both coordinates of alpha*conj(beta).
inline bool divides(const QuadInt& beta, const QuadInt& alpha) {
    detail::same_ring(alpha, beta);
    if (beta.is_zero())
        throw std::domain_error("divides: zero divisor");
    const std::int64_t nb = qi_norm(beta);
    const QuadInt num = qi_mul(alpha, qi_conj(beta));
    return num.x % nb == 0 && num.y % nb == 0;
}

inline bool congruent(const QuadInt& a, const QuadInt& b, const QuadInt& modulus) {
    return divides(modulus, qi_sub(a, b));
}

/// Kronecker symbol (d/p) for a prime p: 0 when p ramifies in Q(sqrt d).
inline int kronecker_symbol(std::int64_t d, std::int64_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("kronecker_symbol: p must be prime");
    const bool half = mod_floor(d, 4) == 1;
    const std::int64_t disc = half ? d : 4 * d;
    if (disc % p == 0)
        return 0;
    if (p == 2)
        return mod_floor(d, 8) == 1 ? 1 : -1;
    return legendre_euler(d, p);
}

/// Lattice points with norm <= bound, ordered by (N, x, y).
inline std::vector<QuadInt> elements_by_norm(RingSpec ring, std::int64_t bound) {
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> pts;
    if (bound >= 0) {
        // N >= (|disc|/4) y^2, and for fixed y the x-range is centred at -B y / 2.
        const std::int64_t absdisc = -ring.discriminant();
        const std::int64_t ymax = isqrt(4 * bound / absdisc) + 1;
        const std::int64_t xr = isqrt(bound) + 1;
        for (std::int64_t y = -ymax; y <= ymax; ++y) {
            const std::int64_t centre = ring.norm_b() * -y / 2;
            for (std::int64_t x = centre - xr - 1; x <= centre + xr + 1; ++x) {
                std::int64_t nv = qi_norm({ring, x, y});
                if (nv <= bound)
                    pts.emplace_back(nv, x, y);
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    std::vector<QuadInt> out;
    out.reserve(pts.size());
    for (auto& [nv, x, y] : pts)
        out.emplace_back(ring, x, y);
    return out;
}

inline std::vector<QuadInt> units(RingSpec ring) {
    std::vector<QuadInt> out;
    for (const auto& e : elements_by_norm(ring, 1))
        if (qi_norm(e) == 1)
            out.push_back(e);
    return out;
}

inline bool is_unit(const QuadInt& a) { return qi_norm(a) == 1; }

/// Unit multiple of alpha with the lexicographically smallest (y, x).
inline QuadInt canonical_associate(const QuadInt& alpha) {
    if (alpha.is_zero())
        throw std::invalid_argument("canonical_associate: zero has no associate class");
    bool have = false;
    QuadInt best = alpha;
    for (const auto& u : units(alpha.ring)) {
        QuadInt c = qi_mul(u, alpha);
        if (!have || std::tie(c.y, c.x) < std::tie(best.y, best.x)) {
            best = c;
            have = true;
        }
    }
    return best;
}

inline bool are_associates(const QuadInt& a, const QuadInt& b) {
    return canonical_associate(a) == canonical_associate(b);
}

/// In these rings pi is irreducible iff N(pi) is prime, or pi is an associate
/// of an inert rational prime q (so N(pi) = q^2).
inline bool is_irreducible(const QuadInt& pi) {
    if (pi.is_zero())
        throw std::invalid_argument("is_irreducible: zero");
    const std::int64_t np = qi_norm(pi);
    if (np == 1)
        throw std::invalid_argument("is_irreducible: argument is a unit");
    if (is_prime(np))
        return true;
    const std::int64_t q = isqrt(np);
    if (q * q != np || !is_prime(q))
        return false;
    return kronecker_symbol(pi.ring.d(), q) == -1 && are_associates(pi, QuadInt{pi.ring, q, 0});
}

/// Canonical representatives of the irreducible classes with 2 <= N <= bound, ordered by (N, x, y).
inline std::vector<QuadInt> enumerate_irreducibles(RingSpec ring, std::int64_t norm_bound) {
    if (norm_bound < 2)
        throw std::invalid_argument("enumerate_irreducibles: norm bound must be at least 2");
    std::vector<QuadInt> out;
    for (const auto& e : elements_by_norm(ring, norm_bound)) {
        if (qi_norm(e) < 2 || !is_irreducible(e))
            continue;
        QuadInt c = canonical_associate(e);
        if (c == e)
            out.push_back(c);
    }
    return out;  // already in (N, x, y) order
}

/// Some rho = alpha^e (mod pi) with N(rho) < N(pi).
inline QuadInt pow_mod(const QuadInt& alpha, std::uint64_t e, const QuadInt& pi) {
    detail::same_ring(alpha, pi);
    if (pi.is_zero())
        throw std::domain_error("pow_mod: zero modulus");
    auto reduce = [&](const QuadInt& v) { return euclid_divmod(v, pi).r; };
    QuadInt result = reduce(qi_one(alpha.ring));
    QuadInt base = reduce(alpha);
    while (e > 0) {
        if (e & 1)
            result = reduce(qi_mul(result, base));
        base = reduce(qi_mul(base, base));
        e >>= 1;
    }
    return result;
}

/// Exponent criterion in the residue field of order N(pi):
/// alpha is a kth power iff alpha^((N(pi)-1)/gcd(k, N(pi)-1)) = 1.
inline bool is_kth_residue_mod(const QuadInt& alpha, std::int64_t k, const QuadInt& pi) {
    detail::same_ring(alpha, pi);
    if (k < 1)
        throw std::invalid_argument("is_kth_residue_mod: k must be positive");
    if (divides(pi, alpha))
        throw std::domain_error("is_kth_residue_mod: modulus divides the element");
    const std::int64_t order = qi_norm(pi) - 1;
    const std::int64_t g = std::gcd(k, order);
    QuadInt rho = pow_mod(alpha, static_cast<std::uint64_t>(order / g), pi);
    return congruent(rho, qi_one(alpha.ring), pi);
}

/// First non-residue in the given (N, x, y)-ordered candidate list, skipping multiples of pi.
inline QuadInt minimal_nonresidue(const QuadInt& pi, std::int64_t k, std::span<const QuadInt> candidates) {
    if (pi.is_zero() || is_unit(pi) || !is_irreducible(pi))
        throw std::invalid_argument("minimal_nonresidue: modulus must be irreducible");
    const std::int64_t np = qi_norm(pi);
    if (std::gcd(k, np - 1) <= 1)
        throw no_nonresidue("minimal_nonresidue: gcd(k, N(pi)-1) = 1, every unit is a kth power");
    for (const auto& w : candidates) {
        if (qi_norm(w) >= np)
            break;
        if (divides(pi, w))
            continue;
        if (!is_kth_residue_mod(w, k, pi))
            return w;
    }
    throw std::logic_error("minimal_nonresidue: candidate list exhausted below N(pi)");
}

inline QuadInt minimal_nonresidue(const QuadInt& pi, std::int64_t k) {
    auto candidates = elements_by_norm(pi.ring, qi_norm(pi));
    return minimal_nonresidue(pi, k, candidates);
}

}  // namespace powres
