#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "powres/certified.hpp"
#include "powres/check_record.hpp"
#include "powres/parallel.hpp"
#include "powres/quad_ring.hpp"

namespace powres {

/// |omega| < sqrt|pi| + 0.65, i.e. sqrt N(omega) < N(pi)^(1/4) + 65/100, plus N(omega) < N(pi).
inline CheckRecord check_theorem2_bound(const QuadInt& pi, const QuadInt& omega, std::int64_t k) {
    const std::int64_t np = qi_norm(pi);
    const std::int64_t nw = qi_norm(omega);
    CheckRecord r;
    r.name = CheckName::thm2_bound;
    r.m = np;
    r.k = k;
    r.n = nw;
    r.extra = "d=" + std::to_string(pi.ring.d()) + ";pi=" + to_string(pi) + ";omega=" + to_string(omega);
    r.pass = nw < np && certified_sqrt_below_fourth_root_plus(static_cast<std::uint64_t>(nw),
                                                              static_cast<std::uint64_t>(np), 65, 100);
    return r;
}

/// Minimal non-residue search plus bound check for every irreducible class of
/// every ring up to norm_bound, for each k with gcd(k, N(pi)-1) > 1.
inline std::vector<CheckRecord> sweep_theorem2(const std::vector<int>& rings, std::int64_t norm_bound,
                                               const std::vector<std::int64_t>& k_set, unsigned workers = 1) {
    std::vector<CheckRecord> out;
    for (int d : rings) {
        RingSpec ring(d);
        const auto candidates = elements_by_norm(ring, norm_bound);
        const auto irreducibles = enumerate_irreducibles(ring, norm_bound);
        auto records = parallel_collect(irreducibles.size(), workers, [&](std::size_t i) {
            std::vector<CheckRecord> recs;
            const QuadInt& pi = irreducibles[i];
            const std::int64_t np = qi_norm(pi);
            for (auto k : k_set) {
                if (std::gcd(k, np - 1) <= 1)
                    continue;
                recs.push_back(check_theorem2_bound(pi, minimal_nonresidue(pi, k, candidates), k));
            }
            return recs;
        });
        out.insert(out.end(), records.begin(), records.end());
    }
    sort_records(out);
    return out;
}

}  // namespace powres
