#include "polynomial.hpp"

#include <algorithm>

namespace sedf::detail {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

bool is_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    // Fermat; p is prime and a != 0 mod p.
    std::uint64_t result = 1, base = a % p;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

Poly poly_sub(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::uint32_t x = i < a.size() ? a[i] : 0;
        const std::uint32_t y = i < b.size() ? b[i] : 0;
        out[i] = (x + p - y) % p;
    }
    trim(out);
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
        }
    }
    Poly out(acc.begin(), acc.end());
    trim(out);
    return out;
}

Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    Poly d = b;
    trim(d);
    const std::size_t db = d.size() - 1;
    const std::uint64_t lead_inv = inverse_mod(d.back(), p);
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const std::uint64_t factor = a.back() * lead_inv % p;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = factor * d[i] % p;
            a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
    return poly_rem(poly_mul(a, b, p), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
    Poly result{1};
    result = poly_rem(result, f, p);
    base = poly_rem(std::move(base), f, p);
    for (; e > 0; e >>= 1) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint64_t lead_inv = inverse_mod(a.back(), p);
        for (auto& c : a) c = static_cast<std::uint32_t>(c * lead_inv % p);
    }
    return a;
}

}  // namespace sedf::detail
