#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sedf/field.hpp"
#include "sedf/group.hpp"

namespace sedf {

/**
 * Cyclotomic classes of order e in GF(q): C_l = theta^l <theta^e>, for
 * 0 <= l < e, each of size f = (q-1)/e. Class labels depend on the field's
 * theta, so the field (modulus and theta) travels with every system.
 */
class CyclotomicSystem {
public:
    /// Throws Error(Range) for e < 2 and Error(Divisibility) when e does not divide q-1.
    CyclotomicSystem(std::shared_ptr<const FieldTable> field, std::uint32_t e);

    const FieldTable& field() const noexcept { return *field_; }
    std::shared_ptr<const FieldTable> field_ptr() const noexcept { return field_; }
    const Group& group() const noexcept { return group_; }

    std::uint32_t e() const noexcept { return e_; }
    std::uint32_t f() const noexcept { return f_; }

    /// Class index of a nonzero element (log mod e); -1 for zero.
    int class_of(Rank x) const noexcept { return class_of_[x]; }

    /// C_{l mod e}.
    const GroupSet& cls(std::int64_t l) const noexcept;
    const std::vector<GroupSet>& classes() const noexcept { return classes_; }

private:
    std::shared_ptr<const FieldTable> field_;
    Group group_;
    std::uint32_t e_;
    std::uint32_t f_;
    std::vector<int> class_of_;
    std::vector<GroupSet> classes_;
};

/// Matrix of cyclotomic numbers (i,j)_e = #{x in C_i : 1 + x in C_j}.
class CyclotomicTable {
public:
    CyclotomicTable(std::uint32_t e, std::vector<std::int64_t> numbers);

    std::uint32_t e() const noexcept { return e_; }

    /// Indices are taken mod e, negative values included.
    std::int64_t operator()(std::int64_t i, std::int64_t j) const noexcept;

    const std::vector<std::int64_t>& numbers() const noexcept { return numbers_; }

    friend bool operator==(const CyclotomicTable&, const CyclotomicTable&) = default;

private:
    std::uint32_t e_;
    std::vector<std::int64_t> numbers_;
};

/// Direct O(q) enumeration over x != 0, -1.
CyclotomicTable cyclotomic_numbers(const CyclotomicSystem& sys);

struct IdentityViolation {
    std::string identity;
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::string detail;
};

struct IdentityCheck {
    std::string identity;
    bool applicable = true;
    std::size_t cases = 0;
    std::size_t failures = 0;
};

/**
 * Result of checking the standard cyclotomic-number identities on a table:
 *
 *   periodicity   C_r = C_{r+e}, (r,s) = (r+e, s+e) on a window of shifts
 *   negation      (i,j) = (-i, j-i)
 *   frobenius     (i,j) = (pi, pj)
 *   row-sum       sum_j (i,j) = f - [-1 in C_i]
 *   even-f        when f is even: -1 in C_0, -C_l = C_l, (i,j) = (j,i)
 */
struct IdentityReport {
    std::vector<IdentityCheck> checks;
    std::vector<IdentityViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

IdentityReport verify_identities(const CyclotomicSystem& sys, const CyclotomicTable& table);

/// Delta(C_0, C_0) assembled as f*{0} + sum_l (e-l, e-l) C_l.
/// Throws Error(UnsupportedParity) when f is odd.
Multiset delta_c0_via_table(const CyclotomicSystem& sys, const CyclotomicTable& table);

/// Tab-separated matrix. The first line is a '#' header carrying p, m,
/// modulus, e, f and theta so class labels can be reproduced.
std::string cyclotomic_table_tsv(const CyclotomicSystem& sys, const CyclotomicTable& table);

}  // namespace sedf
