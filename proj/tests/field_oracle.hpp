#pragma once

#include "oracles.hpp"
#include "powres/quad_ring.hpp"

namespace oracle {

// Residue field of an irreducible: Z/p with theta mapped to a root when N(pi) = p,
// otherwise F_q^2 spanned by 1 and theta for an inert rational prime q.
inline FiniteFieldModel field_model(const powres::QuadInt& pi) {
    FiniteFieldModel f;
    const bool half = pi.ring.half_integral();
    const std::int64_t d = pi.ring.d();
    f.t1 = half ? 1 : 0;
    f.t0 = half ? (d - 1) / 4 : d;
    const std::int64_t np = pi.x * pi.x + pi.ring.norm_b() * pi.x * pi.y + pi.ring.norm_c() * pi.y * pi.y;
    if (is_prime(np)) {
        f.q = np;
        f.prime_field = true;
        // pi = x + y*theta = 0 gives theta = -x / y (y is a unit mod p when N(pi) = p).
        std::int64_t y = FiniteFieldModel::md(pi.y, np);
        std::int64_t inv = 0;
        for (std::int64_t t = 1; t < np; ++t)
            if (y * t % np == 1) inv = t;
        f.root = FiniteFieldModel::md(-pi.x * inv, np);
    } else {
        std::int64_t q = 1;
        while (q * q < np) ++q;
        f.q = q;
        f.prime_field = false;
    }
    return f;
}

}  // namespace oracle
