#include <gtest/gtest.h>

#include <map>
#include <set>

#include "field_oracle.hpp"
#include "oracles.hpp"
#include "powres/quad_ring.hpp"
#include "powres/theorem2.hpp"

using namespace powres;

namespace {

const RingSpec gaussian(-1);
const RingSpec eisenstein(-3);

QuadInt G(std::int64_t x, std::int64_t y) { return {gaussian, x, y}; }

}  // namespace

TEST(RingSpec, NormForms) {
    EXPECT_EQ(RingSpec(-1).norm_c(), 1);
    EXPECT_EQ(RingSpec(-2).norm_c(), 2);
    EXPECT_EQ(RingSpec(-3).norm_b(), 1);
    EXPECT_EQ(RingSpec(-7).norm_c(), 2);
    EXPECT_EQ(RingSpec(-11).norm_c(), 3);
    EXPECT_THROW(RingSpec(-5), std::invalid_argument);
    EXPECT_THROW(RingSpec(2), std::invalid_argument);
    for (int d : RingSpec::supported) EXPECT_EQ(units(RingSpec(d)).size(), RingSpec(d).unit_count());
}

TEST(QuadArith, AddMulConj) {
    EXPECT_EQ(qi_add(G(1, 2), G(3, -1)), G(4, 1));
    EXPECT_EQ(qi_add(G(5, -7), qi_zero(gaussian)), G(5, -7));
    EXPECT_EQ(qi_add(G(5, -7), qi_neg(G(5, -7))), qi_zero(gaussian));

    EXPECT_EQ(qi_mul(G(0, 1), G(0, 1)), G(-1, 0));
    EXPECT_EQ(qi_mul(QuadInt(eisenstein, 0, 1), QuadInt(eisenstein, 0, 1)), QuadInt(eisenstein, -1, 1));
    EXPECT_EQ(qi_mul(G(3, 4), qi_one(gaussian)), G(3, 4));

    EXPECT_EQ(qi_conj(G(3, 4)), G(3, -4));
    RingSpec r7(-7);
    EXPECT_EQ(qi_conj(QuadInt(r7, 2, 1)), QuadInt(r7, 3, -1));
    QuadInt a(r7, 5, -3);
    EXPECT_EQ(qi_mul(a, qi_conj(a)), QuadInt(r7, qi_norm(a), 0));
}

TEST(QuadArith, Norms) {
    EXPECT_EQ(qi_norm(G(3, 4)), 25);
    EXPECT_EQ(qi_norm(QuadInt(eisenstein, 1, 1)), 3);
    EXPECT_EQ(qi_norm(QuadInt(RingSpec(-11), 0, 1)), 3);
}

TEST(QuadArith, RingMismatch) {
    EXPECT_THROW(qi_add(G(1, 0), QuadInt(eisenstein, 1, 0)), ring_mismatch);
    EXPECT_THROW(qi_mul(G(1, 0), QuadInt(eisenstein, 1, 0)), ring_mismatch);
    EXPECT_THROW(euclid_divmod(G(1, 0), QuadInt(eisenstein, 1, 0)), ring_mismatch);
}

TEST(QuadArith, OverflowIsDetected) {
    QuadInt big(gaussian, std::int64_t{1} << 40, 0);
    EXPECT_THROW(qi_mul(big, big), std::overflow_error);
}

TEST(QuadProperties, NormMultiplicativeAndPositive) {
    for (int d : RingSpec::supported) {
        RingSpec r(d);
        for (std::int64_t x1 = -20; x1 <= 20; ++x1)
            for (std::int64_t y1 = -20; y1 <= 20; ++y1) {
                QuadInt a(r, x1, y1);
                ASSERT_EQ(qi_norm(a) == 0, a.is_zero());
                ASSERT_GE(qi_norm(a), 0);
                for (std::int64_t x2 = -20; x2 <= 20; x2 += 3)
                    for (std::int64_t y2 = -20; y2 <= 20; y2 += 3) {
                        QuadInt b(r, x2, y2);
                        ASSERT_EQ(qi_norm(qi_mul(a, b)), qi_norm(a) * qi_norm(b));
                    }
            }
    }
}

TEST(EuclidDivmod, Examples) {
    auto dm = euclid_divmod(G(5, 0), G(1, 2));
    EXPECT_EQ(dm.q, G(1, -2));
    EXPECT_EQ(dm.r, G(0, 0));

    auto dm2 = euclid_divmod(G(0, 1), G(1, 2));
    EXPECT_EQ(dm2.q, G(0, 0));
    EXPECT_EQ(dm2.r, G(0, 1));

    for (const auto& u : units(gaussian)) EXPECT_TRUE(euclid_divmod(G(17, -4), u).r.is_zero());
    EXPECT_THROW(euclid_divmod(G(1, 1), G(0, 0)), std::domain_error);
}

TEST(EuclidDivmod, ContractOverGrid) {
    for (int d : RingSpec::supported) {
        RingSpec r(d);
        for (std::int64_t bx = -7; bx <= 7; ++bx)
            for (std::int64_t by = -7; by <= 7; ++by) {
                QuadInt b(r, bx, by);
                if (b.is_zero()) continue;
                for (std::int64_t ax = -25; ax <= 25; ax += 2)
                    for (std::int64_t ay = -25; ay <= 25; ay += 3) {
                        QuadInt a(r, ax, ay);
                        auto [q, rem] = euclid_divmod(a, b);
                        ASSERT_LT(qi_norm(rem), qi_norm(b));
                        ASSERT_EQ(qi_add(qi_mul(q, b), rem), a);
                        ASSERT_EQ(divides(b, a), rem.is_zero());
                    }
            }
    }
}

TEST(Divides, Examples) {
    EXPECT_TRUE(divides(G(1, 2), G(5, 0)));
    EXPECT_FALSE(divides(G(1, 2), G(0, 1)));
    EXPECT_TRUE(divides(G(1, 2), G(0, 0)));
}

TEST(Kronecker, Examples) {
    EXPECT_EQ(kronecker_symbol(-1, 5), 1);
    EXPECT_EQ(kronecker_symbol(-3, 2), -1);
    EXPECT_EQ(kronecker_symbol(-3, 3), 0);
    EXPECT_EQ(kronecker_symbol(-1, 2), 0);
    EXPECT_EQ(kronecker_symbol(-7, 2), 1);
    EXPECT_EQ(kronecker_symbol(-1, 3), -1);
    EXPECT_THROW(kronecker_symbol(-1, 9), std::invalid_argument);
}

TEST(Kronecker, MatchesSplittingBehaviour) {
    // p splits iff some element has norm p; p is inert iff nothing has norm p.
    for (int d : RingSpec::supported) {
        RingSpec r(d);
        std::set<std::int64_t> norms;
        for (const auto& e : elements_by_norm(r, 400)) norms.insert(qi_norm(e));
        for (std::int64_t p = 2; p < 400; ++p) {
            if (!oracle::is_prime(p)) continue;
            int k = kronecker_symbol(d, p);
            EXPECT_EQ(k == -1, !norms.contains(p)) << d << " " << p;
        }
    }
}

TEST(Irreducible, Examples) {
    EXPECT_TRUE(is_irreducible(G(1, 2)));
    EXPECT_TRUE(is_irreducible(G(3, 0)));
    EXPECT_FALSE(is_irreducible(G(2, 0)));
    EXPECT_FALSE(is_irreducible(G(5, 0)));
    EXPECT_THROW(is_irreducible(G(0, 1)), std::invalid_argument);
    EXPECT_THROW(is_irreducible(G(0, 0)), std::invalid_argument);
}

TEST(Irreducible, AgreesWithFactorSearch) {
    // Reducible iff pi = a*b with 1 < N(a) < N(pi); search all a of smaller norm.
    for (int d : RingSpec::supported) {
        RingSpec r(d);
        auto small = elements_by_norm(r, 150);
        for (const auto& pi : small) {
            std::int64_t np = qi_norm(pi);
            if (np < 2) continue;
            bool reducible = false;
            for (const auto& a : small) {
                std::int64_t na = qi_norm(a);
                if (na < 2 || na >= np || np % na != 0) continue;
                if (divides(a, pi)) {
                    reducible = true;
                    break;
                }
            }
            ASSERT_EQ(is_irreducible(pi), !reducible) << d << " " << pi;
        }
    }
}

TEST(CanonicalAssociate, RuleAndIdempotence) {
    EXPECT_EQ(canonical_associate(G(-2, 1)), G(-1, -2));
    EXPECT_EQ(canonical_associate(G(0, 1)), G(0, -1));
    for (int d : RingSpec::supported) {
        RingSpec r(d);
        for (const auto& a : elements_by_norm(r, 60)) {
            if (a.is_zero()) continue;
            QuadInt c = canonical_associate(a);
            ASSERT_EQ(canonical_associate(c), c);
            for (const auto& u : units(r)) ASSERT_EQ(canonical_associate(qi_mul(u, a)), c);
        }
    }
}

TEST(EnumerateIrreducibles, Examples) {
    auto g = enumerate_irreducibles(gaussian, 10);
    ASSERT_EQ(g.size(), 4u);
    EXPECT_EQ(qi_norm(g[0]), 2);
    EXPECT_EQ(qi_norm(g[1]), 5);
    EXPECT_EQ(qi_norm(g[2]), 5);
    EXPECT_EQ(qi_norm(g[3]), 9);
    EXPECT_FALSE(are_associates(g[1], g[2]));
    EXPECT_TRUE(are_associates(g[1], qi_conj(g[2])));

    auto e = enumerate_irreducibles(eisenstein, 3);
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(qi_norm(e[0]), 3);

    auto s7 = enumerate_irreducibles(RingSpec(-7), 2);
    ASSERT_FALSE(s7.empty());
    EXPECT_EQ(qi_norm(s7[0]), 2);
    EXPECT_EQ(qi_norm(QuadInt(RingSpec(-7), 0, 1)), 2);

    EXPECT_THROW(enumerate_irreducibles(gaussian, 1), std::invalid_argument);
}

TEST(EnumerateIrreducibles, ClassCountsMatchSplittingLaw) {
    // Each split prime gives 2 classes, ramified and inert primes give 1.
    for (int d : RingSpec::supported) {
        RingSpec r(d);
        const std::int64_t bound = 2000;
        std::size_t expected = 0;
        for (std::int64_t p = 2; p <= bound; ++p) {
            if (!oracle::is_prime(p)) continue;
            int k = kronecker_symbol(d, p);
            if (k == 1) expected += 2;
            if (k == 0) expected += 1;
            if (k == -1 && p * p <= bound) expected += 1;
        }
        EXPECT_EQ(enumerate_irreducibles(r, bound).size(), expected) << d;
    }
}

TEST(PowMod, Examples) {
    QuadInt pi = G(1, 2);
    EXPECT_TRUE(congruent(pow_mod(G(0, 1), 2, pi), G(-1, 0), pi));
    EXPECT_TRUE(congruent(pow_mod(G(7, 3), 0, pi), qi_one(gaussian), pi));
    EXPECT_LT(qi_norm(pow_mod(G(123, -45), 77, pi)), qi_norm(pi));
}

TEST(PowMod, FermatInResidueFields) {
    for (int d : RingSpec::supported) {
        RingSpec r(d);
        for (const auto& pi : enumerate_irreducibles(r, 200)) {
            std::int64_t np = qi_norm(pi);
            for (const auto& a : elements_by_norm(r, 60)) {
                if (divides(pi, a)) continue;
                ASSERT_TRUE(congruent(pow_mod(a, static_cast<std::uint64_t>(np - 1), pi), qi_one(r), pi))
                    << d << " " << pi << " " << a;
            }
        }
    }
}

TEST(KthResidue, Examples) {
    QuadInt pi = G(1, 2);
    EXPECT_FALSE(is_kth_residue_mod(G(0, 1), 2, pi));
    EXPECT_TRUE(is_kth_residue_mod(G(-1, 0), 2, pi));
    EXPECT_TRUE(is_kth_residue_mod(qi_one(gaussian), 5, pi));
    EXPECT_THROW(is_kth_residue_mod(G(5, 0), 2, pi), std::domain_error);
}

TEST(KthResidue, OracleAgreementUpToNorm200) {
    std::size_t checked = 0;
    for (int d : RingSpec::supported) {
        RingSpec r(d);
        for (const auto& pi : enumerate_irreducibles(r, 200)) {
            auto field = oracle::field_model(pi);
            // The model must respect theta's minimal polynomial.
            auto th = field.reduce(0, 1);
            auto lhs = field.mul(th, th);
            auto rhs = field.reduce(field.t0 + (field.prime_field ? field.t1 * field.root : 0),
                                    field.prime_field ? 0 : field.t1);
            ASSERT_EQ(lhs, rhs);
            ASSERT_EQ(field.reduce(pi.x, pi.y), (oracle::FiniteFieldModel::Elem{0, 0}));

            // Complete residue system: 0..p-1 for prime norm, x + y*theta with 0 <= x, y < q for inert q.
            std::vector<QuadInt> system;
            if (field.prime_field) {
                for (std::int64_t x = 0; x < field.q; ++x) system.emplace_back(r, x, 0);
            } else {
                for (std::int64_t x = 0; x < field.q; ++x)
                    for (std::int64_t y = 0; y < field.q; ++y) system.emplace_back(r, x, y);
            }
            for (std::int64_t k = 1; k <= 6; ++k) {
                auto powers = field.kth_powers(k);
                for (const auto& a : system) {
                    auto image = field.reduce(a.x, a.y);
                    if (image == oracle::FiniteFieldModel::Elem{0, 0}) {
                        ASSERT_TRUE(divides(pi, a));
                        continue;
                    }
                    ASSERT_EQ(is_kth_residue_mod(a, k, pi), powers.contains(image)) << d << " " << pi << " " << a;
                    ++checked;
                }
            }
        }
    }
    EXPECT_GT(checked, 10000u);
}

TEST(MinimalNonresidue, Examples) {
    EXPECT_EQ(minimal_nonresidue(G(1, 2), 2), G(0, -1));
    EXPECT_EQ(minimal_nonresidue(QuadInt(eisenstein, 1, 1), 2), QuadInt(eisenstein, -1, 0));
    EXPECT_THROW(minimal_nonresidue(G(1, 1), 2), no_nonresidue);
    EXPECT_THROW(minimal_nonresidue(G(2, 0), 2), std::invalid_argument);
}

TEST(MinimalNonresidue, IsMinimalByExhaustion) {
    for (int d : RingSpec::supported) {
        RingSpec r(d);
        for (const auto& pi : enumerate_irreducibles(r, 150)) {
            std::int64_t np = qi_norm(pi);
            auto field = oracle::field_model(pi);
            for (std::int64_t k = 2; k <= 6; ++k) {
                if (oracle::gcd(k, np - 1) <= 1) continue;
                QuadInt w = minimal_nonresidue(pi, k);
                ASSERT_LT(qi_norm(w), np);
                auto powers = field.kth_powers(k);
                ASSERT_FALSE(powers.contains(field.reduce(w.x, w.y)));
                // Nothing of smaller norm is a non-residue.
                for (const auto& c : elements_by_norm(r, qi_norm(w) - 1)) {
                    auto img = field.reduce(c.x, c.y);
                    if (img == oracle::FiniteFieldModel::Elem{0, 0}) continue;
                    ASSERT_TRUE(powers.contains(img)) << d << " " << pi << " " << c;
                }
            }
        }
    }
}

TEST(RingWitnessBound, Examples) {
    auto r1 = check_theorem2_bound(G(1, 2), G(0, -1), 2);
    EXPECT_TRUE(r1.pass);
    EXPECT_EQ(r1.m, 5);
    EXPECT_EQ(r1.n, 1);
    EXPECT_EQ(r1.extra, "d=-1;pi=(1,2);omega=(0,-1)");

    EXPECT_TRUE(check_theorem2_bound(QuadInt(eisenstein, 1, 1), QuadInt(eisenstein, -1, 0), 2).pass);
    for (const auto& pi : enumerate_irreducibles(gaussian, 500))
        EXPECT_TRUE(check_theorem2_bound(pi, qi_one(gaussian), 2).pass);
}

TEST(RingWitnessBound, FailsWhenBoundIsExceeded) {
    // N(omega) = 25 vs N(pi) = 29: sqrt 25 = 5 > 29^(1/4) + 0.65 ~ 2.97.
    EXPECT_FALSE(check_theorem2_bound(G(5, 2), G(3, 4), 2).pass);
}

TEST(Certified, DecidesAndEscalates) {
    EXPECT_TRUE(certified_sqrt_below_fourth_root_plus(1, 5, 65, 100));
    EXPECT_FALSE(certified_sqrt_below_fourth_root_plus(9, 16, 1, 1));  // 3 < 2 + 1 is false (equality)
    EXPECT_TRUE(certified_sqrt_below_fourth_root_plus(8, 16, 1, 1));    // 2.828 < 3
    // sqrt(2) vs 4^(1/4) + 0: equal reals, never separable.
    EXPECT_THROW(certified_sqrt_below_fourth_root_plus(2, 4, 0, 1), undecidable_interval);
}

TEST(RingWitnessSweep, SmallRangeAllPassAndDeterministic) {
    auto a = sweep_theorem2({-1, -2, -3, -7, -11}, 400, {2, 3, 4, 5, 6});
    auto b = sweep_theorem2({-1, -2, -3, -7, -11}, 400, {2, 3, 4, 5, 6}, 4);
    EXPECT_EQ(a, b);
    EXPECT_FALSE(a.empty());
    for (const auto& r : a) EXPECT_TRUE(r.pass) << r.extra;
}
