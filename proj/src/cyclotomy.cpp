#include "sedf/cyclotomy.hpp"

#include <sstream>

#include "sedf/error.hpp"

namespace sedf {

namespace {

// e x e matrices beyond this are refused; a table of 2^24 entries is 128 MiB.
constexpr std::uint32_t kMaxTableOrder = 4096;

std::int64_t mod(std::int64_t a, std::int64_t n) {
    const auto r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

CyclotomicSystem::CyclotomicSystem(std::shared_ptr<const FieldTable> field, std::uint32_t e)
    : field_(std::move(field)), group_(field_->additive_group()), e_(e), f_(0) {
    const std::uint32_t order = field_->q() - 1;
    if (e < 2) throw Error(ErrorKind::Range, "cyclotomic order e must be at least 2");
    if (order % e != 0) {
        throw Error(ErrorKind::Divisibility, "e = " + std::to_string(e) + " does not divide q - 1 = " +
                                                 std::to_string(order));
    }
    f_ = order / e;

    class_of_.assign(field_->q(), -1);
    std::vector<std::vector<Rank>> members(e);
    for (std::uint32_t t = 0; t < order; ++t) {
        const Rank x = field_->exp(t);
        class_of_[x] = static_cast<int>(t % e);
        members[t % e].push_back(x);
    }
    classes_.reserve(e);
    for (auto& m : members) classes_.emplace_back(group_, std::move(m));
}

const GroupSet& CyclotomicSystem::cls(std::int64_t l) const noexcept {
    return classes_[static_cast<std::size_t>(mod(l, e_))];
}

CyclotomicTable::CyclotomicTable(std::uint32_t e, std::vector<std::int64_t> numbers)
    : e_(e), numbers_(std::move(numbers)) {
    if (numbers_.size() != std::size_t{e} * e) {
        throw Error(ErrorKind::Shape, "cyclotomic table must have e*e entries");
    }
}

std::int64_t CyclotomicTable::operator()(std::int64_t i, std::int64_t j) const noexcept {
    return numbers_[static_cast<std::size_t>(mod(i, e_) * e_ + mod(j, e_))];
}

CyclotomicTable cyclotomic_numbers(const CyclotomicSystem& sys) {
    const auto e = sys.e();
    if (e > kMaxTableOrder) {
        throw Error(ErrorKind::Capacity, "cyclotomic table of order " + std::to_string(e) +
                                             " exceeds bound " + std::to_string(kMaxTableOrder));
    }
    const auto& field = sys.field();
    std::vector<std::int64_t> numbers(std::size_t{e} * e, 0);
    const Rank one = field.one();
    for (Rank x = 1; x < field.q(); ++x) {
        const Rank y = field.add(one, x);
        if (y == 0) continue;
        numbers[static_cast<std::size_t>(sys.class_of(x)) * e +
                static_cast<std::size_t>(sys.class_of(y))] += 1;
    }
    return CyclotomicTable(e, std::move(numbers));
}

IdentityReport verify_identities(const CyclotomicSystem& sys, const CyclotomicTable& table) {
    IdentityReport report;
    const auto& field = sys.field();
    const std::int64_t e = sys.e();
    const std::int64_t f = sys.f();
    const std::int64_t p = field.p();

    auto check = [&](const std::string& name, bool applicable = true) -> IdentityCheck& {
        report.checks.push_back(IdentityCheck{name, applicable, 0, 0});
        return report.checks.back();
    };
    auto expect = [&](IdentityCheck& c, bool holds, std::int64_t i, std::int64_t j,
                      std::string detail) {
        ++c.cases;
        if (holds) return;
        ++c.failures;
        report.violations.push_back(IdentityViolation{c.identity, i, j, std::move(detail)});
    };

    // Periodicity: rebuild C_r = theta^r <theta^e> for r in [e, 2e) by
    // multiplication, relabel every element by that r, recount, and compare
    // against the table at (r - e, s - e).
    {
        auto& c = check("periodicity");
        const Rank generator = field.pow(field.theta(), static_cast<std::uint64_t>(e));
        std::vector<Rank> subgroup;
        Rank power = field.one();
        for (std::int64_t l = 0; l < f; ++l) {
            subgroup.push_back(power);
            power = field.mul(power, generator);
        }
        std::vector<std::int64_t> shifted_label(field.q(), -1);
        Rank coset_rep = field.pow(field.theta(), static_cast<std::uint64_t>(e));
        for (std::int64_t r = e; r < 2 * e; ++r) {
            std::vector<Rank> coset;
            for (auto s : subgroup) {
                const Rank x = field.mul(coset_rep, s);
                coset.push_back(x);
                shifted_label[x] = r;
            }
            const GroupSet as_set(sys.group(), std::move(coset));
            expect(c, as_set == sys.cls(r), r, r - e, "C_r differs from C_{r-e}");
            coset_rep = field.mul(coset_rep, field.theta());
        }
        std::vector<std::int64_t> recount(static_cast<std::size_t>(e * e), 0);
        for (Rank x = 1; x < field.q(); ++x) {
            const Rank y = field.add(field.one(), x);
            if (y == 0) continue;
            const auto r = shifted_label[x] - e;
            const auto s = shifted_label[y] - e;
            recount[static_cast<std::size_t>(r * e + s)] += 1;
        }
        for (std::int64_t r = 0; r < e; ++r) {
            for (std::int64_t s = 0; s < e; ++s) {
                expect(c, recount[static_cast<std::size_t>(r * e + s)] == table(r + e, s + e), r + e,
                       s + e, "(r+e, s+e) differs from (r, s)");
            }
        }
    }

    {
        auto& c = check("negation");
        for (std::int64_t i = 0; i < e; ++i) {
            for (std::int64_t j = 0; j < e; ++j) {
                expect(c, table(i, j) == table(-i, j - i), i, j, "(i,j) != (-i, j-i)");
            }
        }
    }

    {
        auto& c = check("frobenius");
        for (std::int64_t i = 0; i < e; ++i) {
            for (std::int64_t j = 0; j < e; ++j) {
                expect(c, table(i, j) == table(p * i, p * j), i, j, "(i,j) != (pi, pj)");
            }
        }
    }

    {
        auto& c = check("row-sum");
        const Rank minus_one = field.neg(field.one());
        const int minus_one_class = sys.class_of(minus_one);
        for (std::int64_t i = 0; i < e; ++i) {
            std::int64_t sum = 0;
            for (std::int64_t j = 0; j < e; ++j) sum += table(i, j);
            const std::int64_t expected = f - (minus_one_class == i ? 1 : 0);
            expect(c, sum == expected, i, -1, "row sum " + std::to_string(sum) + " != " +
                                                  std::to_string(expected));
        }
    }

    {
        auto& c = check("even-f", f % 2 == 0);
        if (c.applicable) {
            const auto& g = sys.group();
            const Rank minus_one = field.neg(field.one());
            expect(c, sys.cls(0).contains(minus_one), 0, 0, "-1 not in C_0");
            for (std::int64_t l = 0; l < e; ++l) {
                bool symmetric = true;
                for (auto x : sys.cls(l)) symmetric = symmetric && sys.cls(l).contains(g.neg(x));
                expect(c, symmetric, l, l, "-C_l != C_l");
            }
            for (std::int64_t i = 0; i < e; ++i) {
                for (std::int64_t j = i + 1; j < e; ++j) {
                    expect(c, table(i, j) == table(j, i), i, j, "(i,j) != (j,i)");
                }
            }
        }
    }

    return report;
}

Multiset delta_c0_via_table(const CyclotomicSystem& sys, const CyclotomicTable& table) {
    if (sys.f() % 2 != 0) {
        throw Error(ErrorKind::UnsupportedParity,
                    "class-size formula for Delta(C_0, C_0) is only provided for even f");
    }
    const auto& g = sys.group();
    std::vector<Count> counts(g.order(), 0);
    counts[0] = sys.f();
    const std::int64_t e = sys.e();
    for (std::int64_t l = 0; l < e; ++l) {
        for (auto x : sys.cls(l)) counts[x] += table(e - l, e - l);
    }
    return Multiset(g, std::move(counts));
}

std::string cyclotomic_table_tsv(const CyclotomicSystem& sys, const CyclotomicTable& table) {
    const auto& field = sys.field();
    std::ostringstream out;
    out << "# p=" << field.p() << "\tm=" << field.m()
        << "\tmodulus=" << format_coefficients(field.spec().modulus) << "\te=" << sys.e()
        << "\tf=" << sys.f() << "\ttheta=" << format_element(field.element(field.theta()), field.p())
        << '\n';
    out << "i\\j";
    for (std::uint32_t j = 0; j < sys.e(); ++j) out << '\t' << j;
    out << '\n';
    for (std::uint32_t i = 0; i < sys.e(); ++i) {
        out << i;
        for (std::uint32_t j = 0; j < sys.e(); ++j) out << '\t' << table(i, j);
        out << '\n';
    }
    return out.str();
}

}  // namespace sedf
