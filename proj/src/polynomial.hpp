#pragma once

// Dense polynomials over F_p, lowest degree first. Internal to the library.

#include <cstdint>
#include <vector>

namespace sedf::detail {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a);
bool is_zero(const Poly& a);
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

Poly poly_sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p);
/// Remainder of a modulo a nonzero b.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p);
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p);
Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p);
/// Monic gcd, or the zero polynomial when both inputs are zero.
Poly poly_gcd(Poly a, Poly b, std::uint32_t p);

}  // namespace sedf::detail
