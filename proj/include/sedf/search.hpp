#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sedf/edf.hpp"
#include "sedf/field.hpp"
#include "sedf/group.hpp"

namespace sedf {

/// Scans refuse q beyond this; direct verification costs about q^2 per row.
inline constexpr std::uint64_t kMaxScanOrder = 1024;

/// Exhaustive search refuses groups beyond this order. Practical limits are
/// far lower: n <= 24 for m >= 3, n <= 40 for m = 2 with k <= 5.
inline constexpr std::uint32_t kMaxSearchOrder = 64;

struct ParamTuple {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t k = 0;
    std::int64_t lambda = 0;
    bool trivial = false;  // (n, n, 1, 1)

    friend bool operator==(const ParamTuple&, const ParamTuple&) = default;
};

/// Every (n, m, k, lambda) with 2 <= n <= n_max, m >= max(m_min, 2), k >= 1,
/// m*k <= n and (m-1)k^2 = lambda(n-1). Ordered by n, then m, then k.
std::vector<ParamTuple> feasible_tuples(std::int64_t n_max, std::int64_t m_min);

struct ScanRow {
    std::uint32_t q = 0;
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    Coefficients modulus;
    FieldElement theta;
    std::uint32_t e = 0;
    std::uint32_t f = 0;
    bool is_sedf = false;
    std::optional<std::int64_t> lambda;
    bool agree = false;  // direct and cyclotomic-number routes agree

    friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

/// Cyclotomic families for every prime power q <= q_max (default modulus) and
/// every divisor e >= max(m_min, 2) of q - 1, ordered by (q, e). Prime powers
/// are processed on `threads` workers (0: hardware concurrency); the row
/// order does not depend on the thread count. Throws Error(Capacity) when
/// q_max > kMaxScanOrder.
std::vector<ScanRow> scan_cyclotomic(std::uint64_t q_max, std::uint32_t m_min,
                                     unsigned threads = 0);

/// Columns: q p m modulus e f is_sedf lambda, with a header line.
std::string scan_tsv(const std::vector<ScanRow>& rows);

struct SearchOptions {
    std::optional<std::size_t> limit;
    /// Additionally keep one representative per orbit of x -> u*x + g.
    bool reduce_automorphisms = false;
};

enum class SearchStatus { Complete, Partial, Infeasible };

struct SearchResult {
    SearchStatus status = SearchStatus::Complete;
    std::string reason;
    std::optional<std::int64_t> lambda;
    std::vector<DesignFamily> families;
    std::uint64_t nodes = 0;
};

/**
 * Backtracking search for all (n, m, k, lambda)-SEDFs in g up to exact
 * symmetries: the family is translated so that 0 lies in A_1, sets are
 * ordered by their minimum and members are ascending. Any partial external
 * difference count above lambda prunes the branch. Every returned family has
 * been re-checked with verify_sedf.
 *
 * Infeasible parameters (no integral lambda, m*k > n) return Infeasible
 * with a reason. Throws Error(Capacity) when |g| > kMaxSearchOrder.
 */
SearchResult exhaustive_search(const Group& g, std::int64_t m, std::int64_t k,
                               const SearchOptions& options = {});

/// True when fam is the lexicographically smallest member of its orbit under
/// x -> u*x + g with gcd(u, exponent) = 1.
bool is_orbit_canonical(const Group& g, const std::vector<GroupSet>& sets);

}  // namespace sedf
