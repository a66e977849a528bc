#include "sedf/edf.hpp"

#include <algorithm>

#include "sedf/error.hpp"

namespace sedf {

namespace {

std::optional<std::int64_t> law_lambda(std::int64_t n, std::int64_t m, std::int64_t k) {
    const std::int64_t num = (m - 1) * k * k;
    if (n < 2 || num % (n - 1) != 0) return std::nullopt;
    return num / (n - 1);
}

}  // namespace

std::optional<std::int64_t> feasible_lambda(std::int64_t n, std::int64_t m, std::int64_t k) {
    if (n < 2 || m < 2 || k < 1 || m * k > n) {
        throw Error(ErrorKind::Parameter, "need n >= 2, m >= 2, k >= 1 and m*k <= n (got n=" +
                                              std::to_string(n) + ", m=" + std::to_string(m) +
                                              ", k=" + std::to_string(k) + ")");
    }
    return law_lambda(n, m, k);
}

std::optional<SedfParams> SedfCertificate::params() const {
    if (!lambda) return std::nullopt;
    return SedfParams{n, m, k, *lambda};
}

SedfCertificate verify_sedf(const DesignFamily& fam) {
    const auto& g = fam.group;
    const auto& sets = fam.sets;
    if (sets.size() < 2) throw Error(ErrorKind::Parameter, "a family needs at least two sets");
    const std::size_t k = sets.front().size();
    for (const auto& s : sets) {
        if (s.empty()) throw Error(ErrorKind::Shape, "family contains an empty set");
        if (s.size() != k) throw Error(ErrorKind::Shape, "family sets have unequal sizes");
    }

    SedfCertificate cert;
    cert.group = g.factors();
    cert.provenance = fam.provenance;
    cert.sets = sets;
    cert.n = g.order();
    cert.m = static_cast<std::int64_t>(sets.size());
    cert.k = static_cast<std::int64_t>(k);

    std::vector<std::uint32_t> seen(g.order(), 0);
    cert.disjoint = true;
    for (const auto& s : sets) {
        for (auto x : s) cert.disjoint = (++seen[x] == 1) && cert.disjoint;
    }

    const auto law = law_lambda(cert.n, cert.m, cert.k);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        Multiset acc(g);
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (j != i) accumulate_difference(g, sets[i], sets[j], acc);
        }
        const auto lambda = multiset_constant_on_nonzero(g, acc);
        cert.per_index_lambda.push_back(lambda);
        if (lambda) continue;
        const Count expected = law ? *law : acc[1];
        for (Rank x = 0; x < g.order(); ++x) {
            const Count want = x == 0 ? 0 : expected;
            if (acc[x] != want) {
                cert.violations.push_back(SedfViolation{i, x, acc[x], want});
                break;
            }
        }
    }

    const auto& first = cert.per_index_lambda.front();
    cert.valid = std::all_of(cert.per_index_lambda.begin(), cert.per_index_lambda.end(),
                             [&](const auto& l) { return l && l == first; });
    if (cert.valid) cert.lambda = *first;
    return cert;
}

CyclotomicCriterion cyclotomic_sedf_criterion(const CyclotomicSystem& sys,
                                              const CyclotomicTable& table) {
    const auto& g = sys.group();
    const std::int64_t e = sys.e();
    CyclotomicCriterion out;
    for (std::int64_t i = 0; i < e; ++i) {
        std::vector<Count> acc(g.order(), sys.f());
        acc[0] = 0;
        for (std::int64_t l = 0; l < e; ++l) {
            const Count c = table(i - l, i - l);
            for (auto x : sys.cls(l)) acc[x] -= c;
        }
        for (auto x : sys.cls(i)) acc[x] -= 1;

        std::optional<Count> lambda;
        if (acc[0] == 0 && acc[1] >= 0 &&
            std::all_of(acc.begin() + 1, acc.end(), [&](Count c) { return c == acc[1]; })) {
            lambda = acc[1];
        }
        out.per_index_lambda.push_back(lambda);
    }
    const auto& first = out.per_index_lambda.front();
    out.valid = std::all_of(out.per_index_lambda.begin(), out.per_index_lambda.end(),
                            [&](const auto& l) { return l && l == first; });
    if (out.valid) out.lambda = *first;
    return out;
}

DesignFamily cyclotomic_family(const CyclotomicSystem& sys) {
    const auto& field = sys.field();
    Provenance prov;
    prov.cyclotomic = Provenance::Cyclotomic{field.p(), field.m(), field.spec().modulus,
                                             field.element(field.theta()), sys.e()};
    return DesignFamily{sys.group(), sys.classes(), std::move(prov)};
}

CyclotomicSedf sedf_from_cyclotomy(const CyclotomicSystem& sys) {
    CyclotomicSedf out{cyclotomic_family(sys), {}, {}, false};
    out.certificate = verify_sedf(out.family);
    out.criterion = cyclotomic_sedf_criterion(sys, cyclotomic_numbers(sys));
    out.agree = out.certificate.valid == out.criterion.valid &&
                out.certificate.lambda == out.criterion.lambda;
    return out;
}

std::optional<PdsParams> verify_pds(const Group& g, const GroupSet& d) {
    const Multiset diff = multiset_difference(g, d, d);
    PdsParams out;
    out.n = g.order();
    out.k = static_cast<std::int64_t>(d.size());
    out.contains_identity = d.contains(0);
    if (diff[0] != out.k) return std::nullopt;

    std::optional<Count> lambda, mu;
    for (Rank x = 1; x < g.order(); ++x) {
        auto& slot = d.contains(x) ? lambda : mu;
        if (!slot) {
            slot = diff[x];
        } else if (*slot != diff[x]) {
            return std::nullopt;
        }
    }
    out.lambda = lambda.value_or(0);
    out.mu = mu.value_or(0);
    return out;
}

PdsCompositionReport pds_partition_sedf(const Group& g, const std::vector<GroupSet>& sets) {
    std::vector<std::uint32_t> hits(g.order(), 0);
    for (const auto& s : sets) {
        for (auto x : s) ++hits[x];
    }
    if (hits[0] != 0) throw Error(ErrorKind::Partition, "the identity must not belong to any set");
    for (Rank x = 1; x < g.order(); ++x) {
        if (hits[x] != 1) {
            throw Error(ErrorKind::Partition, "element " + std::to_string(x) + " is covered " +
                                                  std::to_string(hits[x]) + " times");
        }
    }

    std::optional<PdsParams> common;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto pds = verify_pds(g, sets[i]);
        if (!pds) {
            throw Error(ErrorKind::Uniformity,
                        "set " + std::to_string(i) + " is not a partial difference set");
        }
        if (common && !(*pds == *common)) {
            throw Error(ErrorKind::Uniformity, "set " + std::to_string(i) +
                                                   " has different partial difference set parameters");
        }
        common = pds;
    }
    if (!common || common->lambda != common->mu - 1) {
        throw Error(ErrorKind::Parameter, "composition requires lambda = mu - 1");
    }

    PdsCompositionReport report;
    report.pds = *common;
    report.certificate = verify_sedf(DesignFamily{g, sets, {}});
    report.empirical_lambda = report.certificate.lambda;
    report.k_minus_lambda = common->k - common->lambda;
    report.k_minus_mu = common->k - common->mu;
    report.k_minus_lambda_matches = report.empirical_lambda == report.k_minus_lambda;
    report.k_minus_mu_matches = report.empirical_lambda == report.k_minus_mu;
    return report;
}

}  // namespace sedf
