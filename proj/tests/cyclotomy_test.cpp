#include <memory>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "sedf/cyclotomy.hpp"
#include "sedf/error.hpp"
#include "sedf/numtheory.hpp"

using namespace sedf;

namespace {

std::shared_ptr<const FieldTable> cubic_243() {
    return std::make_shared<const FieldTable>(FieldSpec{3, 5, {1, 2, 1, 1, 1, 1}});
}

std::shared_ptr<const FieldTable> default_field(std::uint64_t q) {
    const auto pp = *as_prime_power(q);
    return std::make_shared<const FieldTable>(FieldTable::with_default_modulus(pp.p, pp.m));
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("order-11 classes of GF(243)") {
    const CyclotomicSystem sys(cubic_243(), 11);
    CHECK(sys.f() == 22);
    REQUIRE(sys.classes().size() == 11);
    for (const auto& c : sys.classes()) CHECK(c.size() == 22);

    const auto& F = sys.field();
    const Rank minus_one = F.neg(F.one());
    CHECK(F.exp(121) == minus_one);
    CHECK(sys.cls(0).contains(minus_one));

    // C_0 = D u (-D) with D = { theta^{11 l} : 0 <= l <= 10 }
    std::vector<Rank> d_and_minus_d;
    for (std::uint32_t l = 0; l <= 10; ++l) {
        d_and_minus_d.push_back(F.exp(11 * l));
        d_and_minus_d.push_back(F.neg(F.exp(11 * l)));
    }
    CHECK(GroupSet(sys.group(), d_and_minus_d) == sys.cls(0));

    // the worked pairs: theta^33 - theta^22 = theta^4 and theta^44 - theta^88 = theta^2
    CHECK(F.sub(F.exp(33), F.exp(22)) == F.exp(4));
    CHECK(F.sub(F.exp(44), F.exp(88)) == F.exp(2));
    CHECK(sys.class_of(F.exp(29)) == 7);
    CHECK(sys.class_of(F.exp(42)) == 9);
    CHECK(sys.class_of(0) == -1);
    CHECK(sys.cls(-1) == sys.cls(10));
    CHECK(sys.cls(12) == sys.cls(1));
}

TEST_CASE("cyclotomic numbers of order 11 over GF(243)") {
    const CyclotomicSystem sys(cubic_243(), 11);
    const auto table = cyclotomic_numbers(sys);
    CHECK(table(0, 0) == 1);
    std::int64_t diagonal = 0;
    for (int i = 0; i < 11; ++i) {
        if (i > 0) CHECK(table(i, i) == 2);
        diagonal += table(i, i);
    }
    CHECK(diagonal == 21);

    // A = (0,0), B = (9,9), C = (7,7): 21 = A + 5(B + C)
    CHECK(table(0, 0) + 5 * (table(9, 9) + table(7, 7)) == 21);
    for (int i : {1, 3, 9, 5, 4}) CHECK(table(i, i) == table(1, 1));
    for (int i : {2, 6, 7, 10, 8}) CHECK(table(i, i) == table(2, 2));

    const auto report = verify_identities(sys, table);
    CHECK(report.ok());
    for (const auto& c : report.checks) {
        CHECK(c.applicable);
        CHECK(c.failures == 0);
    }
}

TEST_CASE("small-field cyclotomic numbers") {
    // q = 13, e = 2: residues {1,3,4,9,10,12}; x and 1+x both residues for x = 3, 9.
    const CyclotomicSystem sys(default_field(13), 2);
    const auto table = cyclotomic_numbers(sys);
    CHECK(table(0, 0) == 2);

    const CyclotomicSystem singletons(default_field(7), 6);
    for (const auto& c : singletons.classes()) CHECK(c.size() == 1);
}

TEST_CASE("tables agree with brute-force enumeration and satisfy the identities") {
    for (std::uint64_t q : {5, 7, 9, 11, 13, 25, 27, 49, 81, 121, 125, 243}) {
        const auto field = default_field(q);
        const oracle::Field ref{static_cast<int>(field->p()),
                                oracle::Vec(field->spec().modulus.begin(), field->spec().modulus.end())};
        const auto theta = field->element(field->theta()).coeffs;
        for (auto e : divisors(q - 1)) {
            if (e < 2) continue;
            CAPTURE(q);
            CAPTURE(e);
            const CyclotomicSystem sys(field, static_cast<std::uint32_t>(e));
            const auto table = cyclotomic_numbers(sys);
            const auto expected =
                oracle::cyclotomic_numbers(ref, oracle::Vec(theta.begin(), theta.end()), static_cast<int>(e));
            for (std::uint32_t i = 0; i < e; ++i) {
                for (std::uint32_t j = 0; j < e; ++j) CHECK(table(i, j) == expected[i][j]);
            }

            // partition of the nonzero elements
            std::vector<int> hits(q, 0);
            for (const auto& c : sys.classes()) {
                CHECK(c.size() == sys.f());
                for (auto x : c) ++hits[x];
            }
            CHECK(hits[0] == 0);
            CHECK(std::all_of(hits.begin() + 1, hits.end(), [](int h) { return h == 1; }));

            const auto report = verify_identities(sys, table);
            CHECK(report.ok());

            if (sys.f() % 2 == 0) {
                CHECK(delta_c0_via_table(sys, table) ==
                      multiset_difference(sys.group(), sys.cls(0), sys.cls(0)));
            } else {
                CHECK(kind_of([&] { delta_c0_via_table(sys, table); }) == ErrorKind::UnsupportedParity);
            }
        }
    }
}

TEST_CASE("class-size formula for Delta(C_0, C_0) over GF(243)") {
    const CyclotomicSystem sys(cubic_243(), 11);
    const auto table = cyclotomic_numbers(sys);
    const auto delta = delta_c0_via_table(sys, table);
    CHECK(delta.total() == 484);
    std::int64_t diagonal = 0;
    for (int l = 0; l < 11; ++l) diagonal += table(l, l);
    CHECK(sys.f() + sys.f() * diagonal == 484);
    CHECK(delta[0] == 22);
    CHECK(delta == multiset_difference(sys.group(), sys.cls(0), sys.cls(0)));
}

TEST_CASE("identity checker reports a corrupted table") {
    const CyclotomicSystem sys(default_field(13), 3);
    auto numbers = cyclotomic_numbers(sys).numbers();
    numbers[1] += 1;
    const auto report = verify_identities(sys, CyclotomicTable(3, numbers));
    CHECK_FALSE(report.ok());
    CHECK_FALSE(report.violations.empty());
}

TEST_CASE("system construction errors") {
    CHECK(kind_of([] { CyclotomicSystem(cubic_243(), 4); }) == ErrorKind::Divisibility);
    CHECK(kind_of([] { CyclotomicSystem(cubic_243(), 1); }) == ErrorKind::Range);
    CHECK_THROWS_AS(CyclotomicTable(3, std::vector<std::int64_t>(8, 0)), Error);
}

TEST_CASE("tsv export carries the field provenance") {
    const CyclotomicSystem sys(cubic_243(), 11);
    const auto tsv = cyclotomic_table_tsv(sys, cyclotomic_numbers(sys));
    CHECK(tsv.rfind("# p=3\tm=5\tmodulus=1,2,1,1,1,1\te=11\tf=22\ttheta=(01000)\n", 0) == 0);
    CHECK(tsv.find("\ni\\j\t0\t1\t2") != std::string::npos);
    CHECK(tsv.find("\n0\t1\t") != std::string::npos);
    CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 13);
}
