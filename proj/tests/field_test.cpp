#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "sedf/error.hpp"
#include "sedf/field.hpp"
#include "sedf/numtheory.hpp"

using namespace sedf;

namespace {

const Coefficients kQuinticModulus{1, 2, 1, 1, 1, 1};  // x^5 + x^4 + x^3 + x^2 + 2x + 1

FieldElement vec(std::initializer_list<std::uint32_t> c) { return FieldElement{c}; }

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::Parse;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool brute_irreducible(int p, const oracle::Vec& f) {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= deg / 2; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int code = 0; code < count; ++code) {
            oracle::Vec g(d + 1, 0);
            g[d] = 1;
            for (int i = 0, c = code; i < d; ++i, c /= p) g[i] = c % p;
            oracle::Vec r = f;
            for (int top = deg; top >= d; --top) {
                const int c = r[top];
                for (int i = 0; i <= d; ++i) r[top - d + i] = ((r[top - d + i] - c * g[i]) % p + p) % p;
            }
            bool zero = true;
            for (int i = 0; i < d; ++i) zero = zero && r[i] == 0;
            if (zero) return false;
        }
    }
    return true;
}

// Number of monic irreducibles of degree m: (1/m) sum_{d | m} mu(d) p^{m/d}.
long necklace_count(long p, long m) {
    auto mobius = [](long n) {
        int sign = 1;
        for (long d = 2; d * d <= n; ++d) {
            if (n % d) continue;
            n /= d;
            if (n % d == 0) return 0;
            sign = -sign;
        }
        return n > 1 ? -sign : sign;
    };
    long total = 0;
    for (long d = 1; d <= m; ++d) {
        if (m % d) continue;
        long pw = 1;
        for (long i = 0; i < m / d; ++i) pw *= p;
        total += mobius(d) * pw;
    }
    return total / m;
}

}  // namespace

TEST_CASE("irreducibility examples") {
    CHECK(poly_is_irreducible(3, kQuinticModulus));
    CHECK(poly_is_irreducible(3, Coefficients{1, 0, 1}));   // x^2 + 1
    CHECK(poly_is_irreducible(3, Coefficients{2, 1, 1}));   // x^2 + x - 1
    CHECK(poly_is_irreducible(3, Coefficients{2, 2, 1}));   // x^2 - x - 1
    CHECK_FALSE(poly_is_irreducible(3, Coefficients{2, 0, 1}));  // x^2 - 1
    CHECK_FALSE(poly_is_irreducible(2, Coefficients{1, 0, 1}));  // (x+1)^2
    CHECK_FALSE(poly_is_irreducible(3, Coefficients{1, 0, 2, 0, 1}));  // (x^2 + 1)^2, no roots

    CHECK(kind_of([] { poly_is_irreducible(3, Coefficients{1, 0, 2}); }) == ErrorKind::InvalidPolynomial);
    CHECK(kind_of([] { poly_is_irreducible(3, Coefficients{1}); }) == ErrorKind::InvalidPolynomial);
    CHECK(kind_of([] { poly_is_irreducible(4, Coefficients{1, 1}); }) == ErrorKind::InvalidField);
}

TEST_CASE("irreducibility agrees with trial division") {
    for (auto [p, m] : {std::pair{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}}) {
        int count = 1;
        for (int i = 0; i < m; ++i) count *= p;
        long irreducible = 0;
        for (int code = 0; code < count; ++code) {
            oracle::Vec f(m + 1, 0);
            f[m] = 1;
            for (int i = 0, c = code; i < m; ++i, c /= p) f[i] = c % p;
            const Coefficients coeffs(f.begin(), f.end());
            const bool fast = poly_is_irreducible(p, coeffs);
            CHECK(fast == brute_irreducible(p, f));
            irreducible += fast;
        }
        CHECK(irreducible == necklace_count(p, m));
    }
}

TEST_CASE("coefficient parsing") {
    CHECK(parse_coefficients("1,2,1,1,1,1") == kQuinticModulus);
    CHECK(format_coefficients(kQuinticModulus) == "1,2,1,1,1,1");
    for (auto bad : {"", "1,,2", "1,a", "1,2,", "-1,1", " 1,1"}) {
        CHECK(kind_of([&] { parse_coefficients(bad); }) == ErrorKind::Parse);
    }
}

TEST_CASE("power table with the cubic-field modulus of degree five") {
    const FieldTable F(FieldSpec{3, 5, kQuinticModulus});
    CHECK(F.q() == 243);
    CHECK(F.theta_is_x());
    CHECK(F.element(F.theta()) == vec({0, 1, 0, 0, 0}));

    CHECK(F.power_vector(0) == vec({1, 0, 0, 0, 0}));
    CHECK(F.power_vector(5) == vec({2, 1, 2, 2, 2}));
    CHECK(F.power_vector(6) == vec({1, 1, 2, 0, 0}));
    CHECK(F.power_vector(11) == vec({0, 1, 0, 0, 2}));
    CHECK(F.power_vector(12) == vec({1, 2, 2, 1, 1}));
    CHECK(F.power_vector(33) == vec({2, 1, 1, 0, 2}));
    CHECK(F.power_vector(99) == vec({2, 2, 0, 0, 2}));
    CHECK(F.power_vector(55) == vec({1, 1, 1, 1, 2}));
    CHECK(F.power_vector(44) == vec({1, 2, 2, 1, 2}));
    CHECK(F.power_vector(88) == vec({1, 2, 1, 1, 2}));
    // theta^110 = -(theta^77)^3; (01020) is its negative, theta^231
    CHECK(F.power_vector(110) == vec({0, 2, 0, 1, 0}));
    CHECK(F.power_vector(231) == vec({0, 1, 0, 2, 0}));
    CHECK(F.neg(F.exp(110)) == F.exp(231));
    CHECK(format_element(F.power_vector(5), 3) == "(21222)");

    CHECK(F.element_order(F.element(F.theta())) == 242);
    const auto witnesses = F.primitivity_witnesses();
    REQUIRE(witnesses.size() == 2);
    CHECK(witnesses[0].prime == 2);
    CHECK(witnesses[0].exponent == 121);
    CHECK(witnesses[0].value == vec({2, 0, 0, 0, 0}));
    CHECK(witnesses[1].prime == 11);
    CHECK(witnesses[1].exponent == 22);
    CHECK(witnesses[1].value == vec({2, 1, 1, 0, 1}));

    CHECK(F.element_order(vec({1, 0, 0, 0, 0})) == 1);
    CHECK(F.element_order(F.power_vector(11)) == 22);
    CHECK(F.element_order(F.power_vector(11)) == 242 / std::gcd(242u, F.log(F.exp(11))));

    CHECK(kind_of([&] { F.power_vector(242); }) == ErrorKind::Range);
    CHECK(kind_of([&] { F.element_order(vec({0, 0, 0, 0, 0})); }) == ErrorKind::ZeroElement);
    CHECK(kind_of([&] { F.log(0); }) == ErrorKind::ZeroElement);
    CHECK(kind_of([&] { F.inv(0); }) == ErrorKind::ZeroElement);
}

TEST_CASE("power table matches repeated schoolbook multiplication") {
    for (auto spec : {FieldSpec{3, 5, kQuinticModulus}, FieldSpec{2, 4, {1, 1, 0, 0, 1}},
                      FieldSpec{5, 2, {2, 1, 1}}, FieldSpec{3, 2, {1, 0, 1}}}) {
        const FieldTable F(spec);
        const oracle::Field ref{static_cast<int>(spec.p), oracle::Vec(spec.modulus.begin(), spec.modulus.end())};
        const auto theta = F.element(F.theta()).coeffs;
        const auto powers = ref.powers(oracle::Vec(theta.begin(), theta.end()), static_cast<int>(F.q()) - 1);
        for (std::uint32_t t = 0; t + 1 < F.q(); ++t) {
            const auto got = F.power_vector(t).coeffs;
            CHECK(oracle::Vec(got.begin(), got.end()) == powers[t]);
        }
    }
}

TEST_CASE("table invariants") {
    for (auto spec : {FieldSpec{3, 5, kQuinticModulus}, FieldSpec{2, 5, {1, 0, 1, 0, 0, 1}},
                      FieldSpec{7, 2, {3, 1, 1}}, FieldSpec{13, 1, {0, 1}}}) {
        const FieldTable F(spec);
        const std::uint32_t order = F.q() - 1;
        for (Rank x = 1; x < F.q(); ++x) CHECK(F.exp(F.log(x)) == x);
        for (std::uint32_t t = 0; t < order; ++t) CHECK(F.log(F.exp(t)) == t);

        const oracle::Field ref{static_cast<int>(spec.p), oracle::Vec(spec.modulus.begin(), spec.modulus.end())};
        std::uint64_t primitive = 0;
        for (Rank a = 1; a < F.q(); ++a) {
            const auto ord = F.element_order(F.element(a));
            CHECK(order % ord == 0);
            CHECK(ord == order / std::gcd(order, F.log(a)));
            primitive += ord == order;
            CHECK(F.mul(a, F.inv(a)) == F.one());
            for (Rank b = 1; b < F.q(); b += 7) {
                const auto pa = F.element(a).coeffs, pb = F.element(b).coeffs;
                const auto expected = ref.mul(oracle::Vec(pa.begin(), pa.end()), oracle::Vec(pb.begin(), pb.end()));
                const auto got = F.element(F.mul(a, b)).coeffs;
                CHECK(oracle::Vec(got.begin(), got.end()) == expected);
                CHECK(F.mul(F.exp(F.log(a)), F.exp(F.log(b))) == F.exp(F.log(a) + F.log(b)));
            }
        }
        CHECK(primitive == euler_phi(order));
    }
}

TEST_CASE("theta falls back to the smallest-rank primitive element") {
    // x^2 + 1 over F_3: x has order 4, not 8.
    const FieldTable F(FieldSpec{3, 2, {1, 0, 1}});
    CHECK_FALSE(F.theta_is_x());
    CHECK(F.element_order(vec({0, 1})) == 4);
    CHECK(F.element(F.theta()) == vec({1, 1}));
    for (Rank r = 1; r < F.theta(); ++r) CHECK_FALSE(F.is_primitive(F.element(r)));

    const auto gf3 = FieldTable::with_default_modulus(3, 1);
    CHECK(gf3.spec().modulus == Coefficients{0, 1});
    CHECK(gf3.element(gf3.theta()) == vec({2}));
}

TEST_CASE("default modulus is the lexicographically smallest irreducible") {
    CHECK(default_modulus(2, 2) == Coefficients{1, 1, 1});
    CHECK(default_modulus(3, 2) == Coefficients{1, 0, 1});
    CHECK(default_modulus(2, 1) == Coefficients{0, 1});
    for (auto [p, m] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}}) {
        const auto chosen = default_modulus(p, m);
        CHECK(poly_is_irreducible(p, chosen));
        // No smaller code (c_0 most significant) is irreducible.
        Coefficients c(m + 1, 0);
        c[m] = 1;
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < m; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::uint64_t rest = code;
            for (std::uint32_t i = m; i-- > 0;) {
                c[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            if (c == chosen) break;
            CHECK_FALSE(poly_is_irreducible(p, c));
        }
    }
}

TEST_CASE("field construction errors") {
    CHECK(kind_of([] { FieldTable(FieldSpec{3, 2, {2, 0, 1}}); }) == ErrorKind::ReducibleModulus);
    CHECK(kind_of([] { FieldTable(FieldSpec{3, 2, {1, 0, 2}}); }) == ErrorKind::InvalidPolynomial);
    CHECK(kind_of([] { FieldTable(FieldSpec{3, 2, {1, 1}}); }) == ErrorKind::InvalidPolynomial);
    CHECK(kind_of([] { FieldTable(FieldSpec{4, 1, {1, 1}}); }) == ErrorKind::InvalidField);
    CHECK(kind_of([] { FieldTable::with_default_modulus(2, 21); }) == ErrorKind::Capacity);
    Coefficients big(22, 0);
    big[0] = 1;
    big[21] = 1;
    CHECK(kind_of([&] { FieldTable(FieldSpec{2, 21, big}); }) == ErrorKind::Capacity);
}

TEST_CASE("additive group embedding") {
    const FieldTable F(FieldSpec{3, 5, kQuinticModulus});
    const Group g = F.additive_group();
    CHECK(g.factors() == std::vector<std::uint32_t>(5, 3));
    CHECK(g.order() == 243);
    CHECK(g.rank(F.embed(vec({0, 0, 0, 0, 0}))) == Group::identity());

    const auto gf4 = FieldTable::with_default_modulus(2, 2);
    CHECK(gf4.additive_group().factors() == std::vector<std::uint32_t>{2, 2});

    for (Rank a = 0; a < F.q(); a += 5) {
        const auto x = F.element(a);
        CHECK(g.rank(F.embed(x)) == a);
        CHECK(F.from_group(g.unrank(a)) == x);
        for (Rank b = 0; b < F.q(); b += 11) CHECK(F.add(a, b) == g.add(a, b));
    }
}
