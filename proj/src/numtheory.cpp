#include "sedf/numtheory.hpp"

namespace sedf {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) noexcept {
    if (q < 2) return std::nullopt;
    const auto factors = prime_factors(q);
    if (factors.size() != 1) return std::nullopt;
    PrimePower pp{static_cast<std::uint32_t>(factors.front()), 0};
    while (q > 1) {
        q /= pp.p;
        ++pp.m;
    }
    return pp;
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= bound; ++q) {
        if (as_prime_power(q)) out.push_back(q);
    }
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = n;
    for (auto r : prime_factors(n)) phi = phi / r * (r - 1);
    return phi;
}

}  // namespace sedf
