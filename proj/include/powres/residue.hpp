#pragma once

/**
 * @file residue.hpp
 * @brief kth-power residue tables modulo m and their run statistics.
 *
 * Every class a mod m is sorted into one of three buckets: a kth-power
 * residue (coprime to m and x^k = a solvable), a non-residue (coprime, not
 * solvable) or non-coprime. Non-coprime classes are neither residues nor
 * non-residues and therefore terminate runs of both kinds.
 */

#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "powres/arith.hpp"

namespace powres {

enum class ResidueClass : std::uint8_t { residue, nonresidue, noncoprime };

class ResidueTable {
public:
    ResidueTable(std::int64_t m, std::int64_t k, std::vector<ResidueClass> classes)
        : m_(m), k_(k), class_of_(std::move(classes)) {}

    std::int64_t modulus() const { return m_; }
    std::int64_t exponent() const { return k_; }

    /// Class of a mod m for any integer a. m = 1 has no classes and reports non-coprime.
    ResidueClass classify(std::int64_t a) const {
        if (class_of_.empty())
            return ResidueClass::noncoprime;
        return class_of_[static_cast<std::size_t>(mod_floor(a, m_))];
    }

    bool is_residue(std::int64_t a) const { return classify(a) == ResidueClass::residue; }
    bool is_nonresidue(std::int64_t a) const { return classify(a) == ResidueClass::nonresidue; }

    std::span<const ResidueClass> classes() const { return class_of_; }

    std::vector<std::int64_t> residues() const { return collect(ResidueClass::residue); }
    std::vector<std::int64_t> nonresidues() const { return collect(ResidueClass::nonresidue); }

private:
    std::vector<std::int64_t> collect(ResidueClass c) const {
        std::vector<std::int64_t> out;
        for (std::size_t a = 0; a < class_of_.size(); ++a)
            if (class_of_[a] == c)
                out.push_back(static_cast<std::int64_t>(a));
        return out;
    }

    std::int64_t m_;
    std::int64_t k_;
    std::vector<ResidueClass> class_of_;
};

/// Marks x^k mod m for every unit x. m = 1 yields an empty classification.
inline ResidueTable build_residue_table(std::int64_t m, std::int64_t k) {
    if (m < 1 || k < 1)
        throw std::invalid_argument("build_residue_table: need m >= 1 and k >= 1");
    if (m == 1)
        return ResidueTable(m, k, {});

    std::vector<ResidueClass> classes(static_cast<std::size_t>(m), ResidueClass::noncoprime);
    for (std::int64_t a = 1; a < m; ++a)
        if (std::gcd(a, m) == 1)
            classes[a] = ResidueClass::nonresidue;

    // For prime m the kth powers coincide with the gcd(k, m-1)th powers, which
    // keeps the exponent small. The result is identical either way.
    std::int64_t e = is_prime(m) ? std::gcd(k, m - 1) : k;
    auto um = static_cast<std::uint64_t>(m);
    for (std::int64_t x = 1; x < m; ++x) {
        if (classes[x] == ResidueClass::noncoprime)
            continue;
        classes[pow_mod(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(e), um)] =
            ResidueClass::residue;
    }
    return ResidueTable(m, k, std::move(classes));
}

/// Least a >= 1 that is a non-residue; non-coprime a are skipped.
inline std::optional<std::int64_t> least_nonresidue(const ResidueTable& table) {
    auto cls = table.classes();
    for (std::size_t a = 1; a < cls.size(); ++a)
        if (cls[a] == ResidueClass::nonresidue)
            return static_cast<std::int64_t>(a);
    return std::nullopt;
}

struct RunStats {
    std::int64_t m = 0;
    std::int64_t k = 0;
    std::optional<std::int64_t> n;  // least positive non-residue
    std::int64_t R = 0;             // longest run of consecutive residues
    std::optional<std::int64_t> N;  // longest run of consecutive non-residues, prime m only
    bool prime_modulus = false;
};

inline RunStats run_stats(const ResidueTable& table) {
    RunStats s;
    s.m = table.modulus();
    s.k = table.exponent();
    s.prime_modulus = is_prime(s.m);
    s.n = least_nonresidue(table);

    std::int64_t residue_run = 0, nonresidue_run = 0, best_nonresidue = 0;
    auto cls = table.classes();
    for (std::size_t a = 1; a < cls.size(); ++a) {
        residue_run = cls[a] == ResidueClass::residue ? residue_run + 1 : 0;
        nonresidue_run = cls[a] == ResidueClass::nonresidue ? nonresidue_run + 1 : 0;
        s.R = std::max(s.R, residue_run);
        best_nonresidue = std::max(best_nonresidue, nonresidue_run);
    }
    if (s.prime_modulus)
        s.N = best_nonresidue;
    return s;
}

inline RunStats run_stats(std::int64_t m, std::int64_t k) { return run_stats(build_residue_table(m, k)); }

/// -1 is a kth-power residue mod the odd prime p iff (p-1)/gcd(k,p-1) is even.
inline bool minus_one_is_kth_residue(std::int64_t p, std::int64_t k) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("minus_one_is_kth_residue: p must be an odd prime");
    if (k < 1)
        throw std::invalid_argument("minus_one_is_kth_residue: k must be positive");
    return ((p - 1) / std::gcd(k, p - 1)) % 2 == 0;
}

}  // namespace powres
