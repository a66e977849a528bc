#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sedf/group.hpp"

namespace sedf {

/// Largest q = p^m for which full exp/log tables are built.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

/// Coefficients c_0..c_m of a polynomial over F_p, lowest degree first.
using Coefficients = std::vector<std::uint32_t>;

struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    Coefficients modulus;  // monic, size m + 1

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Parses "c0,c1,...,cm". Throws Error(Parse) on malformed input.
Coefficients parse_coefficients(std::string_view text);
std::string format_coefficients(std::span<const std::uint32_t> coeffs);

/// Irreducibility over F_p via gcd(x^{p^k} - x, f) = 1 for 1 <= k <= deg/2.
/// Throws Error(InvalidPolynomial) for a non-monic or constant polynomial and
/// Error(InvalidField) when p is not prime.
bool poly_is_irreducible(std::uint32_t p, std::span<const std::uint32_t> coeffs);

/// Lexicographically smallest (c_0 first) monic irreducible of degree m.
Coefficients default_modulus(std::uint32_t p, std::uint32_t m);

/// c_0 + c_1 theta + ... + c_{m-1} theta^{m-1}.
struct FieldElement {
    std::vector<std::uint32_t> coeffs;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// "(21222)" style: coefficients c_0..c_{m-1} concatenated. For p > 10 the
/// coefficients are comma separated.
std::string format_element(const FieldElement& x, std::uint32_t p);

/// theta^{(q-1)/r} for a prime r dividing q - 1. theta is primitive iff no
/// witness value equals 1.
struct OrderWitness {
    std::uint64_t prime = 0;
    std::uint64_t exponent = 0;
    FieldElement value;
};

/**
 * GF(p^m) = F_p[x]/(modulus) with a certified primitive element theta and
 * full exponent/logarithm tables.
 *
 * Elements are addressed by rank: the coefficient vector (c_0, ..., c_{m-1})
 * read as a base-p number with c_0 most significant. This is the same rank
 * the additive group Z_p^m assigns to the coordinate vector, so field ranks
 * can be used directly as group ranks.
 *
 * theta is the residue class of x when that is primitive; otherwise the
 * primitive element of smallest rank.
 */
class FieldTable {
public:
    /// Throws Error(InvalidField | InvalidPolynomial | Capacity | ReducibleModulus).
    explicit FieldTable(FieldSpec spec);

    static FieldTable with_default_modulus(std::uint32_t p, std::uint32_t m);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::uint32_t p() const noexcept { return spec_.p; }
    std::uint32_t m() const noexcept { return spec_.m; }
    std::uint32_t q() const noexcept { return q_; }

    Rank zero() const noexcept { return 0; }
    Rank one() const noexcept { return exp_[0]; }
    Rank theta() const noexcept { return exp_.size() > 1 ? exp_[1] : exp_[0]; }
    bool theta_is_x() const noexcept { return theta_is_x_; }

    FieldElement element(Rank r) const;
    Rank rank_of(const FieldElement& x) const;

    Rank add(Rank a, Rank b) const noexcept;
    Rank sub(Rank a, Rank b) const noexcept;
    Rank neg(Rank a) const noexcept;
    Rank mul(Rank a, Rank b) const noexcept;
    /// Throws Error(ZeroElement) for a = 0.
    Rank inv(Rank a) const;
    Rank pow(Rank a, std::uint64_t e) const noexcept;

    /// theta^(t mod (q-1)).
    Rank exp(std::uint64_t t) const noexcept { return exp_[t % (q_ - 1)]; }
    /// Discrete log base theta. Throws Error(ZeroElement) for 0.
    std::uint32_t log(Rank a) const;

    /// Coefficient vector of theta^t for 0 <= t < q - 1; Error(Range) otherwise.
    FieldElement power_vector(std::uint64_t t) const;

    /// Multiplicative order computed by polynomial exponentiation, independent
    /// of the tables. Throws Error(ZeroElement) for 0.
    std::uint64_t element_order(const FieldElement& x) const;
    bool is_primitive(const FieldElement& x) const;

    /// One witness per prime divisor of q - 1, ascending by prime.
    std::vector<OrderWitness> primitivity_witnesses() const;

    /// Z_p^m; a field rank is the group rank of its coefficient vector.
    Group additive_group() const;
    GroupElement embed(const FieldElement& x) const;
    FieldElement from_group(const GroupElement& g) const;

private:
    Coefficients poly_of(Rank r) const;
    Rank rank_of_poly(const Coefficients& c) const;

    FieldSpec spec_;
    std::uint32_t q_ = 0;
    bool theta_is_x_ = false;
    std::vector<Rank> exp_;
    std::vector<std::uint32_t> log_;
};

}  // namespace sedf
