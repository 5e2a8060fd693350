#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace powres {

// Overflow-checked int64 arithmetic. Every product that can grow with the
// input goes through these; an overflow is a bug in the caller's bounds.
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("int64 overflow in multiplication: " + std::to_string(a) + " * " +
                                  std::to_string(b));
    return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("int64 overflow in addition: " + std::to_string(a) + " + " +
                                  std::to_string(b));
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out))
        throw std::overflow_error("int64 overflow in subtraction: " + std::to_string(a) + " - " +
                                  std::to_string(b));
    return out;
}

/// Floor division for signed operands, b > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && (a < 0))
        --q;
    return q;
}

/// Non-negative remainder, m > 0.
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// Nearest integer to a/b (b > 0), halves rounded up.
constexpr std::int64_t round_div(std::int64_t a, std::int64_t b) {
    return floor_div(2 * a + b, 2 * b);
}

constexpr std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

constexpr std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1)
        return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

constexpr bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (n % 2 == 0 || n % 3 == 0)
        return false;
    for (std::int64_t f = 5; f * f <= n; f += 6)
        if (n % f == 0 || n % (f + 2) == 0)
            return false;
    return true;
}

/// All primes p <= limit, ascending (sieve of Eratosthenes).
inline std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
    std::vector<std::int64_t> primes;
    if (limit < 2)
        return primes;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (std::int64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return primes;
}

/// Largest s with s*s <= n.
constexpr std::int64_t isqrt(std::int64_t n) {
    if (n < 0)
        throw std::domain_error("isqrt of negative value");
    std::int64_t s = 0;
    std::int64_t bit = std::int64_t{1} << 31;
    while (bit > 0) {
        std::int64_t t = s + bit;
        if (t <= 3037000499 && t * t <= n)
            s = t;
        bit >>= 1;
    }
    return s;
}

/// Legendre symbol (a/p) for an odd prime p by Euler's criterion.
inline int legendre_euler(std::int64_t a, std::int64_t p) {
    std::uint64_t r = pow_mod(static_cast<std::uint64_t>(mod_floor(a, p)),
                              static_cast<std::uint64_t>((p - 1) / 2), static_cast<std::uint64_t>(p));
    if (r == 0)
        return 0;
    return r == 1 ? 1 : -1;
}

}  // namespace powres
