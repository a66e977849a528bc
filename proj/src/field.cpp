#include "sedf/field.hpp"

#include <charconv>
#include <limits>

#include "polynomial.hpp"
#include "sedf/error.hpp"
#include "sedf/numtheory.hpp"

namespace sedf {

using detail::Poly;

namespace {

void check_polynomial(std::uint32_t p, std::span<const std::uint32_t> coeffs) {
    if (!is_prime(p)) {
        throw Error(ErrorKind::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
    }
    if (coeffs.size() < 2) {
        throw Error(ErrorKind::InvalidPolynomial, "polynomial must have degree at least 1");
    }
    for (auto c : coeffs) {
        if (c >= p) {
            throw Error(ErrorKind::InvalidPolynomial,
                        "coefficient " + std::to_string(c) + " not reduced mod " + std::to_string(p));
        }
    }
    if (coeffs.back() != 1) {
        throw Error(ErrorKind::InvalidPolynomial,
                    "polynomial must be monic (last coefficient c_m = 1)");
    }
}

bool is_one(const Poly& a) {
    Poly t = a;
    detail::trim(t);
    return t.size() == 1 && t[0] == 1;
}

bool poly_is_primitive(const Poly& a, const Poly& f, std::uint32_t p, std::uint64_t q) {
    if (detail::is_zero(a)) return false;
    for (auto r : prime_factors(q - 1)) {
        if (is_one(detail::poly_powmod(a, (q - 1) / r, f, p))) return false;
    }
    return true;
}

}  // namespace

Coefficients parse_coefficients(std::string_view text) {
    Coefficients out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        std::uint32_t value = 0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc{} || ptr != last) {
            throw Error(ErrorKind::Parse, "malformed coefficient list '" + std::string(text) + "'");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string format_coefficients(std::span<const std::uint32_t> coeffs) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coeffs[i]);
    }
    return out;
}

bool poly_is_irreducible(std::uint32_t p, std::span<const std::uint32_t> coeffs) {
    check_polynomial(p, coeffs);
    const Poly f(coeffs.begin(), coeffs.end());
    const std::size_t degree = f.size() - 1;
    const Poly x = detail::poly_rem(Poly{0, 1}, f, p);
    Poly power = x;  // x^{p^k} mod f
    for (std::size_t k = 1; k <= degree / 2; ++k) {
        power = detail::poly_powmod(power, p, f, p);
        const Poly g = detail::poly_gcd(f, detail::poly_sub(power, x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

Coefficients default_modulus(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) {
        throw Error(ErrorKind::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
    }
    if (m < 1) throw Error(ErrorKind::InvalidField, "extension degree must be at least 1");
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        count *= p;
        if (count > kMaxFieldOrder) {
            throw Error(ErrorKind::Capacity, "field order exceeds table bound");
        }
    }
    // Enumerate (c_0, ..., c_{m-1}) with c_0 the most significant digit.
    Coefficients c(m + 1, 0);
    c[m] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t rest = code;
        for (std::uint32_t i = m; i-- > 0;) {
            c[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        if (poly_is_irreducible(p, c)) return c;
    }
    throw Error(ErrorKind::ReducibleModulus, "no irreducible polynomial found");  // unreachable
}

std::string format_element(const FieldElement& x, std::uint32_t p) {
    std::string out = "(";
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
        if (p > 10 && i) out += ',';
        out += std::to_string(x.coeffs[i]);
    }
    out += ')';
    return out;
}

FieldTable::FieldTable(FieldSpec spec) : spec_(std::move(spec)) {
    const auto p = spec_.p;
    const auto m = spec_.m;
    if (!is_prime(p)) {
        throw Error(ErrorKind::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
    }
    if (m < 1) throw Error(ErrorKind::InvalidField, "extension degree must be at least 1");
    if (spec_.modulus.size() != std::size_t{m} + 1) {
        throw Error(ErrorKind::InvalidPolynomial,
                    "modulus must have m + 1 = " + std::to_string(m + 1) + " coefficients");
    }
    check_polynomial(p, spec_.modulus);

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) {
            throw Error(ErrorKind::Capacity, "field order " + std::to_string(p) + "^" +
                                                 std::to_string(m) + " exceeds table bound 2^20");
        }
    }
    q_ = static_cast<std::uint32_t>(q);

    if (!poly_is_irreducible(p, spec_.modulus)) {
        throw Error(ErrorKind::ReducibleModulus,
                    "modulus " + format_coefficients(spec_.modulus) + " is reducible over F_" +
                        std::to_string(p));
    }

    const Poly f(spec_.modulus.begin(), spec_.modulus.end());
    Poly theta = detail::poly_rem(Poly{0, 1}, f, p);
    theta_is_x_ = poly_is_primitive(theta, f, p, q);
    if (!theta_is_x_) {
        for (Rank r = 1; r < q_; ++r) {
            theta = poly_of(r);
            if (poly_is_primitive(theta, f, p, q)) break;
        }
    }

    exp_.resize(q_ - 1);
    log_.assign(q_, std::numeric_limits<std::uint32_t>::max());
    Poly current = poly_of(0);
    current[0] = 1;
    for (std::uint32_t t = 0; t + 1 < q_; ++t) {
        const Rank r = rank_of_poly(current);
        exp_[t] = r;
        log_[r] = t;
        if (theta_is_x_ && m >= 2) {
            // theta^{t+1} = (0 c_0 ... c_{m-2}) + c_{m-1} * theta^m, where
            // theta^m = -(f_0 + f_1 theta + ... + f_{m-1} theta^{m-1}).
            const std::uint64_t top = current[m - 1];
            Poly next(m, 0);
            for (std::uint32_t i = 0; i < m; ++i) {
                const std::uint64_t shifted = i ? current[i - 1] : 0;
                next[i] = static_cast<std::uint32_t>((shifted + top * ((p - f[i]) % p)) % p);
            }
            current = std::move(next);
        } else {
            current = detail::poly_mulmod(current, theta, f, p);
            current.resize(m, 0);
        }
    }
}

FieldTable FieldTable::with_default_modulus(std::uint32_t p, std::uint32_t m) {
    return FieldTable(FieldSpec{p, m, default_modulus(p, m)});
}

Coefficients FieldTable::poly_of(Rank r) const {
    Coefficients c(spec_.m, 0);
    for (std::uint32_t i = spec_.m; i-- > 0;) {
        c[i] = r % spec_.p;
        r /= spec_.p;
    }
    return c;
}

Rank FieldTable::rank_of_poly(const Coefficients& c) const {
    Rank r = 0;
    for (std::uint32_t i = 0; i < spec_.m; ++i) r = r * spec_.p + (i < c.size() ? c[i] : 0);
    return r;
}

FieldElement FieldTable::element(Rank r) const {
    if (r >= q_) throw Error(ErrorKind::InvalidElement, "field rank out of range");
    return FieldElement{poly_of(r)};
}

Rank FieldTable::rank_of(const FieldElement& x) const {
    if (x.coeffs.size() != spec_.m) {
        throw Error(ErrorKind::InvalidElement, "field element needs " + std::to_string(spec_.m) +
                                                   " coefficients");
    }
    for (auto c : x.coeffs) {
        if (c >= spec_.p) throw Error(ErrorKind::InvalidElement, "coefficient not reduced mod p");
    }
    return rank_of_poly(x.coeffs);
}

Rank FieldTable::add(Rank a, Rank b) const noexcept {
    const auto p = spec_.p;
    Rank out = 0, weight = 1;
    for (std::uint32_t i = 0; i < spec_.m; ++i) {
        out += ((a % p + b % p) % p) * weight;
        a /= p;
        b /= p;
        weight *= p;
    }
    return out;
}

Rank FieldTable::sub(Rank a, Rank b) const noexcept {
    const auto p = spec_.p;
    Rank out = 0, weight = 1;
    for (std::uint32_t i = 0; i < spec_.m; ++i) {
        out += ((a % p + p - b % p) % p) * weight;
        a /= p;
        b /= p;
        weight *= p;
    }
    return out;
}

Rank FieldTable::neg(Rank a) const noexcept { return sub(0, a); }

Rank FieldTable::mul(Rank a, Rank b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[(std::uint64_t{log_[a]} + log_[b]) % (q_ - 1)];
}

Rank FieldTable::inv(Rank a) const {
    if (a == 0) throw Error(ErrorKind::ZeroElement, "zero has no inverse");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Rank FieldTable::pow(Rank a, std::uint64_t e) const noexcept {
    if (e == 0) return one();
    if (a == 0) return 0;
    return exp_[(std::uint64_t{log_[a]} * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t FieldTable::log(Rank a) const {
    if (a == 0) throw Error(ErrorKind::ZeroElement, "logarithm of zero");
    if (a >= q_) throw Error(ErrorKind::InvalidElement, "field rank out of range");
    return log_[a];
}

FieldElement FieldTable::power_vector(std::uint64_t t) const {
    if (t >= q_ - 1) {
        throw Error(ErrorKind::Range, "exponent " + std::to_string(t) + " outside [0, " +
                                          std::to_string(q_ - 1) + ")");
    }
    return element(exp_[t]);
}

std::uint64_t FieldTable::element_order(const FieldElement& x) const {
    const Rank r = rank_of(x);
    if (r == 0) throw Error(ErrorKind::ZeroElement, "zero has no multiplicative order");
    const Poly f(spec_.modulus.begin(), spec_.modulus.end());
    const Poly a(x.coeffs.begin(), x.coeffs.end());
    std::uint64_t order = q_ - 1;
    for (auto prime : prime_factors(q_ - 1)) {
        while (order % prime == 0 && is_one(detail::poly_powmod(a, order / prime, f, spec_.p))) {
            order /= prime;
        }
    }
    return order;
}

bool FieldTable::is_primitive(const FieldElement& x) const {
    return element_order(x) == q_ - 1;
}

std::vector<OrderWitness> FieldTable::primitivity_witnesses() const {
    const Poly f(spec_.modulus.begin(), spec_.modulus.end());
    const Poly theta = poly_of(this->theta());
    std::vector<OrderWitness> out;
    for (auto prime : prime_factors(q_ - 1)) {
        const std::uint64_t e = (q_ - 1) / prime;
        Poly v = detail::poly_powmod(theta, e, f, spec_.p);
        v.resize(spec_.m, 0);
        out.push_back(OrderWitness{prime, e, FieldElement{std::move(v)}});
    }
    return out;
}

Group FieldTable::additive_group() const {
    return Group(std::vector<std::uint32_t>(spec_.m, spec_.p));
}

GroupElement FieldTable::embed(const FieldElement& x) const {
    rank_of(x);
    return GroupElement{x.coeffs};
}

FieldElement FieldTable::from_group(const GroupElement& g) const {
    FieldElement x{g.coords};
    rank_of(x);
    return x;
}

}  // namespace sedf
