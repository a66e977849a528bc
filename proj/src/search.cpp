#include "sedf/search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sedf/error.hpp"
#include "sedf/numtheory.hpp"

namespace sedf {

std::vector<ParamTuple> feasible_tuples(std::int64_t n_max, std::int64_t m_min) {
    std::vector<ParamTuple> out;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        for (std::int64_t m = std::max<std::int64_t>(m_min, 2); m <= n; ++m) {
            for (std::int64_t k = 1; m * k <= n; ++k) {
                const auto lambda = feasible_lambda(n, m, k);
                if (!lambda) continue;
                out.push_back(ParamTuple{n, m, k, *lambda, m == n && k == 1});
            }
        }
    }
    return out;
}

namespace {

std::vector<ScanRow> scan_prime_power(std::uint64_t q, std::uint32_t m_min) {
    const auto pp = *as_prime_power(q);
    auto field = std::make_shared<const FieldTable>(FieldTable::with_default_modulus(pp.p, pp.m));
    std::vector<ScanRow> rows;
    for (auto e : divisors(q - 1)) {
        if (e < std::max<std::uint32_t>(m_min, 2)) continue;
        const CyclotomicSystem sys(field, static_cast<std::uint32_t>(e));
        const auto result = sedf_from_cyclotomy(sys);
        ScanRow row;
        row.q = static_cast<std::uint32_t>(q);
        row.p = pp.p;
        row.m = pp.m;
        row.modulus = field->spec().modulus;
        row.theta = field->element(field->theta());
        row.e = sys.e();
        row.f = sys.f();
        row.is_sedf = result.certificate.valid;
        row.lambda = result.certificate.lambda;
        row.agree = result.agree;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::vector<ScanRow> scan_cyclotomic(std::uint64_t q_max, std::uint32_t m_min, unsigned threads) {
    if (q_max > kMaxScanOrder) {
        throw Error(ErrorKind::Capacity, "scan bound q_max = " + std::to_string(q_max) +
                                             " exceeds " + std::to_string(kMaxScanOrder));
    }
    const auto qs = prime_powers_up_to(q_max);
    std::vector<std::vector<ScanRow>> per_q(qs.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(qs.size(), 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < qs.size(); i = next++) {
            per_q[i] = scan_prime_power(qs[i], m_min);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    std::vector<ScanRow> rows;
    for (auto& chunk : per_q) {
        for (auto& row : chunk) rows.push_back(std::move(row));
    }
    return rows;
}

std::string scan_tsv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << "q\tp\tm\tmodulus\te\tf\tis_sedf\tlambda\n";
    for (const auto& r : rows) {
        out << r.q << '\t' << r.p << '\t' << r.m << '\t' << format_coefficients(r.modulus) << '\t'
            << r.e << '\t' << r.f << '\t' << (r.is_sedf ? "true" : "false") << '\t';
        if (r.lambda) {
            out << *r.lambda;
        } else {
            out << '-';
        }
        out << '\n';
    }
    return out.str();
}

bool is_orbit_canonical(const Group& g, const std::vector<GroupSet>& sets) {
    auto current = sets;
    std::sort(current.begin(), current.end());
    const auto exponent = g.exponent();
    for (std::uint32_t u = 1; u < std::max<std::uint32_t>(exponent, 2); ++u) {
        if (std::gcd(u, exponent) != 1) continue;
        std::vector<GroupSet> scaled;
        for (const auto& s : current) scaled.push_back(s.transform(g, u, 0));
        for (const auto& anchor_set : scaled) {
            for (auto a : anchor_set) {
                std::vector<GroupSet> image;
                for (const auto& s : scaled) image.push_back(s.transform(g, 1, g.neg(a)));
                std::sort(image.begin(), image.end());
                if (image < current) return false;
            }
        }
    }
    return true;
}

namespace {

class Backtracker {
public:
    Backtracker(const Group& g, std::size_t m, std::size_t k, Count lambda,
                const SearchOptions& options, SearchResult& result)
        : g_(g), n_(g.order()), m_(m), k_(k), lambda_(lambda), options_(options), result_(result),
          sub_(std::size_t{n_} * n_), used_(n_, 0), ext_(m * n_, 0), sets_(m) {
        for (Rank a = 0; a < n_; ++a) {
            for (Rank b = 0; b < n_; ++b) sub_[std::size_t{a} * n_ + b] = g.sub(a, b);
        }
    }

    // Returns false when the search was cut short by the limit.
    bool run() { return extend(0); }

private:
    bool extend(std::size_t s) {
        ++result_.nodes;
        if (sets_[s].size() == k_) {
            if (s + 1 == m_) return record();
            return extend(s + 1);
        }
        Rank lo = 0;
        if (!sets_[s].empty()) {
            lo = sets_[s].back() + 1;
        } else if (s > 0) {
            lo = sets_[s - 1].front() + 1;
        }
        Rank hi = n_;
        if (s == 0 && sets_[0].empty()) hi = 1;  // translation: 0 in A_1
        const std::size_t still_needed = k_ - sets_[s].size() - 1;
        for (Rank a = lo; a < hi && a + still_needed < n_; ++a) {
            if (used_[a]) continue;
            if (!place(s, a)) continue;
            const bool keep_going = extend(s);
            unplace(s, a);
            if (!keep_going) return false;
        }
        return true;
    }

    Count& ext(std::size_t i, Rank x) { return ext_[i * n_ + x]; }
    Rank diff(Rank a, Rank b) const { return sub_[std::size_t{a} * n_ + b]; }

    bool place(std::size_t s, Rank a) {
        bool ok = true;
        for (std::size_t j = 0; j < m_; ++j) {
            if (j == s) continue;
            for (auto b : sets_[j]) {
                ok = (++ext(s, diff(a, b)) <= lambda_) && ok;
                ok = (++ext(j, diff(b, a)) <= lambda_) && ok;
            }
        }
        used_[a] = 1;
        sets_[s].push_back(a);
        if (!ok) {
            unplace(s, a);
            return false;
        }
        return true;
    }

    void unplace(std::size_t s, Rank a) {
        sets_[s].pop_back();
        used_[a] = 0;
        for (std::size_t j = 0; j < m_; ++j) {
            if (j == s) continue;
            for (auto b : sets_[j]) {
                --ext(s, diff(a, b));
                --ext(j, diff(b, a));
            }
        }
    }

    bool record() {
        std::vector<GroupSet> sets;
        for (const auto& s : sets_) sets.emplace_back(g_, s);
        if (options_.reduce_automorphisms && !is_orbit_canonical(g_, sets)) return true;
        DesignFamily fam{g_, std::move(sets), Provenance{std::nullopt, "exhaustive search"}};
        const auto cert = verify_sedf(fam);
        if (!cert.valid || cert.lambda != lambda_) {
            throw std::logic_error("search produced a family that fails verification");
        }
        result_.families.push_back(std::move(fam));
        return !(options_.limit && result_.families.size() >= *options_.limit);
    }

    const Group& g_;
    std::uint32_t n_;
    std::size_t m_;
    std::size_t k_;
    Count lambda_;
    const SearchOptions& options_;
    SearchResult& result_;
    std::vector<Rank> sub_;
    std::vector<char> used_;
    std::vector<Count> ext_;
    std::vector<std::vector<Rank>> sets_;
};

}  // namespace

SearchResult exhaustive_search(const Group& g, std::int64_t m, std::int64_t k,
                               const SearchOptions& options) {
    if (g.order() > kMaxSearchOrder) {
        throw Error(ErrorKind::Capacity,
                    "exhaustive search is limited to groups of order <= " +
                        std::to_string(kMaxSearchOrder) +
                        "; practical bounds are n <= 24 for m >= 3 and n <= 40 for m = 2, k <= 5");
    }
    SearchResult result;
    const std::int64_t n = g.order();
    if (m < 2 || k < 1 || m * k > n) {
        result.status = SearchStatus::Infeasible;
        result.reason = "need m >= 2, k >= 1 and m*k <= n";
        return result;
    }
    result.lambda = feasible_lambda(n, m, k);
    if (!result.lambda) {
        result.status = SearchStatus::Infeasible;
        result.reason = "(m-1)k^2 = " + std::to_string((m - 1) * k * k) +
                        " is not divisible by n-1 = " + std::to_string(n - 1);
        return result;
    }
    Backtracker search(g, static_cast<std::size_t>(m), static_cast<std::size_t>(k), *result.lambda,
                       options, result);
    result.status = search.run() ? SearchStatus::Complete : SearchStatus::Partial;
    return result;
}

}  // namespace sedf
