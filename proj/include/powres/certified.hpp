#pragma once

/**
 * @file certified.hpp
 * @brief Directed-rounding interval bounds on small algebraic expressions.
 *
 * Values are enclosed in [lo, hi] with MPFR rounding toward -inf for the lower
 * end and toward +inf for the upper end. A comparison is decided only when the
 * enclosures are disjoint; otherwise precision is doubled, up to a cap.
 */

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace powres {

struct undecidable_interval : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr mpfr_prec_t min_working_precision = 64;
inline constexpr mpfr_prec_t max_working_precision = 4096;

/// RAII wrapper around mpfr_t.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~BigFloat() { mpfr_clear(v_); }
    BigFloat(const BigFloat&) = delete;
    BigFloat& operator=(const BigFloat&) = delete;

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

/// Closed enclosure [lo, hi] of a real number.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec) : prec_(prec), lo_(prec), hi_(prec) {}

    static Interval from_uint(std::uint64_t v, mpfr_prec_t prec) {
        Interval out(prec);
        mpfr_set_uj(out.lo_.get(), v, MPFR_RNDD);
        mpfr_set_uj(out.hi_.get(), v, MPFR_RNDU);
        return out;
    }

    static Interval from_ratio(std::uint64_t num, std::uint64_t den, mpfr_prec_t prec) {
        Interval out = from_uint(num, prec);
        mpfr_div_ui(out.lo_.get(), out.lo_.get(), den, MPFR_RNDD);
        mpfr_div_ui(out.hi_.get(), out.hi_.get(), den, MPFR_RNDU);
        return out;
    }

    // Only defined on non-negative enclosures, where sqrt is monotone.
    Interval sqrt() const {
        Interval out(prec_);
        mpfr_sqrt(out.lo_.get(), lo_.get(), MPFR_RNDD);
        mpfr_sqrt(out.hi_.get(), hi_.get(), MPFR_RNDU);
        return out;
    }

    Interval operator+(const Interval& o) const {
        Interval out(prec_);
        mpfr_add(out.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
        mpfr_add(out.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
        return out;
    }

    Interval(Interval&& o) noexcept : prec_(o.prec_), lo_(prec_), hi_(prec_) {
        mpfr_swap(lo_.get(), o.lo_.get());
        mpfr_swap(hi_.get(), o.hi_.get());
    }

    /// +1 if certainly this < o, -1 if certainly this >= o, 0 if undecided.
    int certainly_less(const Interval& o) const {
        if (mpfr_less_p(hi_.get(), o.lo_.get()))
            return 1;
        if (mpfr_greaterequal_p(lo_.get(), o.hi_.get()))
            return -1;
        return 0;
    }

    double lower() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
    double upper() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }

private:
    mpfr_prec_t prec_;
    BigFloat lo_;
    BigFloat hi_;
};

/// Decides sqrt(a) < b^(1/4) + num/den with certified rounding.
/// Throws undecidable_interval if the enclosures still overlap at the precision cap.
inline bool certified_sqrt_below_fourth_root_plus(std::uint64_t a, std::uint64_t b, std::uint64_t num,
                                                  std::uint64_t den) {
    for (mpfr_prec_t prec = min_working_precision; prec <= max_working_precision; prec *= 2) {
        Interval lhs = Interval::from_uint(a, prec).sqrt();
        Interval rhs = Interval::from_uint(b, prec).sqrt().sqrt() + Interval::from_ratio(num, den, prec);
        int verdict = lhs.certainly_less(rhs);
        if (verdict != 0)
            return verdict > 0;
    }
    throw undecidable_interval("interval comparison undecided at maximum precision");
}

}  // namespace powres
