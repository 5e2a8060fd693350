#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace powres {

enum class CheckName {
    thm1_i,
    thm1_ii,
    remark_nonresidue_run,  // N(n-1) < p-1
    remark_run_product,     // R*min(R,N) < p
    remark_quadratic_runs,  // R2*N2 < p
    hudson,
    brauer,
    hummel,
    gmw,
    thm2_bound,
    thm3_strict,
    thm3_weak,
    gauss_lemma,
};

inline constexpr std::string_view to_string(CheckName c) {
    switch (c) {
    case CheckName::thm1_i: return "thm1_i";
    case CheckName::thm1_ii: return "thm1_ii";
    case CheckName::remark_nonresidue_run: return "remark_nonresidue_run";
    case CheckName::remark_run_product: return "remark_run_product";
    case CheckName::remark_quadratic_runs: return "remark_quadratic_runs";
    case CheckName::hudson: return "hudson";
    case CheckName::brauer: return "brauer";
    case CheckName::hummel: return "hummel";
    case CheckName::gmw: return "gmw";
    case CheckName::thm2_bound: return "thm2_bound";
    case CheckName::thm3_strict: return "thm3_strict";
    case CheckName::thm3_weak: return "thm3_weak";
    case CheckName::gauss_lemma: return "gauss_lemma";
    }
    return "unknown";
}

inline CheckName check_name_from_string(std::string_view s) {
    for (int i = 0; i <= static_cast<int>(CheckName::gauss_lemma); ++i) {
        auto c = static_cast<CheckName>(i);
        if (to_string(c) == s)
            return c;
    }
    throw std::invalid_argument("unknown check name: " + std::string(s));
}

/// One verification outcome. The fields mirror the report columns one to one.
/// A check whose hypotheses do not apply still produces a passing record whose
/// `extra` starts with "vacuous".
struct CheckRecord {
    CheckName name{};
    std::int64_t m = 0;
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> R;
    std::optional<std::int64_t> N;
    std::string extra;
    bool pass = false;
    bool known_exception = false;

    bool vacuous() const { return extra.starts_with("vacuous"); }
    bool unexpected_failure() const { return !pass && !known_exception; }

    bool operator==(const CheckRecord&) const = default;
};

inline bool record_order(const CheckRecord& a, const CheckRecord& b) {
    auto key = [](const CheckRecord& r) {
        return std::make_tuple(r.m, r.k.value_or(0), to_string(r.name), r.extra);
    };
    return key(a) < key(b);
}

inline void sort_records(std::vector<CheckRecord>& records) {
    std::stable_sort(records.begin(), records.end(), record_order);
}

inline bool any_unexpected_failure(const std::vector<CheckRecord>& records) {
    return std::any_of(records.begin(), records.end(),
                       [](const CheckRecord& r) { return r.unexpected_failure(); });
}

}  // namespace powres
