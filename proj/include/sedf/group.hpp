#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace sedf {

/// Dense index of a group element, in [0, n).
using Rank = std::uint32_t;

/// Multiplicity counter. Signed so group-ring expressions with subtraction can
/// be formed; a Multiset itself never holds negative entries.
using Count = std::int64_t;

/// An element of Z_{n_0} x ... x Z_{n_{r-1}} given by its coordinates.
struct GroupElement {
    std::vector<std::uint32_t> coords;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/**
 * Finite abelian group presented as a product of cyclic factors.
 *
 * Elements are ranked mixed-radix with factors[0] the most significant digit,
 * so in Z_3 x Z_3 the element (1,2) has rank 1*3 + 2 = 5. The identity always
 * has rank 0. This ordering is part of the certificate format and must not
 * change.
 */
class Group {
public:
    /// Throws Error(InvalidGroup) if any factor is < 2 or the order overflows.
    explicit Group(std::vector<std::uint32_t> factors);

    static Group cyclic(std::uint32_t n) { return Group({n}); }

    const std::vector<std::uint32_t>& factors() const noexcept { return factors_; }
    std::uint32_t order() const noexcept { return order_; }
    bool is_cyclic() const noexcept { return factors_.size() == 1; }

    /// Least common multiple of the factors; x -> u*x is an automorphism
    /// whenever gcd(u, exponent()) == 1.
    std::uint32_t exponent() const noexcept { return exponent_; }

    Rank rank(const GroupElement& g) const;
    GroupElement unrank(Rank r) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;

    Rank add(Rank a, Rank b) const noexcept;
    Rank sub(Rank a, Rank b) const noexcept;
    Rank neg(Rank a) const noexcept;
    Rank scale(Rank a, std::uint32_t u) const noexcept;

    static constexpr Rank identity() noexcept { return 0; }

    friend bool operator==(const Group&, const Group&) = default;

private:
    void check(const GroupElement& g) const;

    std::vector<std::uint32_t> factors_;
    std::vector<std::uint32_t> weights_;
    std::uint32_t order_ = 1;
    std::uint32_t exponent_ = 1;
};

/// Subset of a group as a strictly increasing list of ranks.
class GroupSet {
public:
    GroupSet() = default;

    /// Sorts and deduplicates; throws Error(InvalidElement) on a rank >= n.
    GroupSet(const Group& g, std::vector<Rank> members);
    GroupSet(const Group& g, std::initializer_list<Rank> members)
        : GroupSet(g, std::vector<Rank>(members)) {}

    std::span<const Rank> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Rank r) const noexcept;

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    /// Image under x -> u*x + shift.
    GroupSet transform(const Group& g, std::uint32_t u, Rank shift) const;

    friend bool operator==(const GroupSet&, const GroupSet&) = default;
    friend auto operator<=>(const GroupSet& a, const GroupSet& b) {
        return a.members_ <=> b.members_;
    }

private:
    std::vector<Rank> members_;
};

/// Element of N[G]: a nonnegative multiplicity for every group element.
class Multiset {
public:
    explicit Multiset(const Group& g) : counts_(g.order(), 0) {}

    /// Throws Error(Shape) if counts has the wrong length or a negative entry.
    Multiset(const Group& g, std::vector<Count> counts);

    static Multiset of(const Group& g, const GroupSet& s, Count weight = 1);

    std::span<const Count> counts() const noexcept { return counts_; }
    Count operator[](Rank r) const noexcept { return counts_[r]; }
    std::size_t size() const noexcept { return counts_.size(); }
    Count total() const noexcept;

    void add(Rank r, Count c = 1) noexcept { counts_[r] += c; }
    Multiset& operator+=(const Multiset& other);

    friend bool operator==(const Multiset&, const Multiset&) = default;

private:
    std::vector<Count> counts_;
};

/// Delta(d1, d2) = { a1 - a2 : a1 in d1, a2 in d2 } as a multiset.
/// Throws Error(EmptySet) if either set is empty.
Multiset multiset_difference(const Group& g, const GroupSet& d1, const GroupSet& d2);

/// Adds Delta(d1, d2) into acc without the emptiness check.
void accumulate_difference(const Group& g, const GroupSet& d1, const GroupSet& d2,
                           Multiset& acc);

/// Returns lambda when m = lambda * (G - {0}), otherwise nullopt.
std::optional<Count> multiset_constant_on_nonzero(const Group& g, const Multiset& m);

}  // namespace sedf
