#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace sedf {

bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime divisors of n in ascending order (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// All positive divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

struct PrimePower {
    std::uint32_t p = 0;
    std::uint32_t m = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// (p, m) with q = p^m, or nullopt when q is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t q) noexcept;

/// Every prime power 2 <= q <= bound, ascending.
std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t bound);

std::uint64_t euler_phi(std::uint64_t n);

}  // namespace sedf
