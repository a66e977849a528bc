#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sedf/cyclotomy.hpp"
#include "sedf/field.hpp"
#include "sedf/group.hpp"

namespace sedf {

/// Where a family came from. Cyclotomic provenance pins the field and theta,
/// since class labels depend on both.
struct Provenance {
    struct Cyclotomic {
        std::uint32_t p = 0;
        std::uint32_t m = 0;
        Coefficients modulus;
        FieldElement theta;
        std::uint32_t e = 0;

        friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;
    };

    std::optional<Cyclotomic> cyclotomic;  // nullopt: explicit sets
    std::string note;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct DesignFamily {
    Group group;
    std::vector<GroupSet> sets;
    Provenance provenance;
};

struct SedfParams {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t k = 0;
    std::int64_t lambda = 0;

    friend bool operator==(const SedfParams&, const SedfParams&) = default;
};

/// lambda = (m-1)k^2 / (n-1) when integral. Throws Error(Parameter) unless
/// n >= 2, m >= 2, k >= 1 and m*k <= n.
std::optional<std::int64_t> feasible_lambda(std::int64_t n, std::int64_t m, std::int64_t k);

/// First element where sum_{j != i} Delta(A_i, A_j) departs from lambda(G - {0}).
struct SedfViolation {
    std::size_t index = 0;
    Rank element = 0;
    Count multiplicity = 0;
    Count expected = 0;

    friend bool operator==(const SedfViolation&, const SedfViolation&) = default;
};

struct SedfCertificate {
    std::vector<std::uint32_t> group;
    Provenance provenance;
    std::vector<GroupSet> sets;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t k = 0;
    std::optional<std::int64_t> lambda;  // common lambda when valid
    bool valid = false;
    bool disjoint = false;
    std::vector<std::optional<Count>> per_index_lambda;
    std::vector<SedfViolation> violations;

    std::optional<SedfParams> params() const;

    friend bool operator==(const SedfCertificate&, const SedfCertificate&) = default;
};

/// Direct multiset check of sum_{j != i} Delta(A_i, A_j) = lambda(G - {0})
/// for every i. Throws Error(Parameter) for m < 2 and Error(Shape) for
/// unequal or empty sets.
SedfCertificate verify_sedf(const DesignFamily& fam);

/// The cyclotomic-number route: for each i the multiset
/// f(G - {0}) - sum_l (i-l, i-l) C_l - C_i must be constant on G - {0}.
struct CyclotomicCriterion {
    bool valid = false;
    std::optional<std::int64_t> lambda;
    std::vector<std::optional<Count>> per_index_lambda;
};

CyclotomicCriterion cyclotomic_sedf_criterion(const CyclotomicSystem& sys,
                                              const CyclotomicTable& table);

DesignFamily cyclotomic_family(const CyclotomicSystem& sys);

struct CyclotomicSedf {
    DesignFamily family;
    SedfCertificate certificate;
    CyclotomicCriterion criterion;
    bool agree = false;  // same validity and, when valid, same lambda
};

CyclotomicSedf sedf_from_cyclotomy(const CyclotomicSystem& sys);

struct PdsParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;
    bool contains_identity = false;

    friend bool operator==(const PdsParams&, const PdsParams&) = default;
};

/// (n, k, lambda, mu) when Delta(d, d) = k{0} + lambda (d - {0}) + mu (G - d - {0}).
/// An empty lambda- or mu-support counts as constant 0.
std::optional<PdsParams> verify_pds(const Group& g, const GroupSet& d);

struct PdsCompositionReport {
    PdsParams pds;
    SedfCertificate certificate;
    std::optional<std::int64_t> empirical_lambda;
    std::int64_t k_minus_lambda = 0;
    std::int64_t k_minus_mu = 0;
    bool k_minus_lambda_matches = false;
    bool k_minus_mu_matches = false;
};

/// Composes PDSs with lambda = mu - 1 that partition G - {0} into an SEDF and
/// reports the observed lambda' against both k - lambda and k - mu.
/// Throws Error(Partition) when the sets do not partition G - {0},
/// Error(Uniformity) when a set is not a PDS or parameters differ, and
/// Error(Parameter) when lambda != mu - 1.
PdsCompositionReport pds_partition_sedf(const Group& g, const std::vector<GroupSet>& sets);

}  // namespace sedf
